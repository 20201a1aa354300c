#include "passage/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace passage {

LtFunction LtFunction::from_real(std::function<double(double)> f, std::string note) {
    return LtFunction{
        [g = std::move(f)](std::complex<double> s) {
            return std::complex<double>(g(s.real()), 0.0);
        },
        std::move(note)};
}

namespace {

std::vector<double> stehfest_weights(int n) {
    // V_k = (-1)^{k+n/2} sum_j j^{n/2} (2j)! / ((n/2-j)! j! (j-1)! (k-j)! (2j-k)!)
    std::vector<double> v(static_cast<size_t>(n) + 1, 0.0);
    const int half = n / 2;
    for (int k = 1; k <= n; ++k) {
        double sum = 0.0;
        for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
            double term = std::pow(static_cast<double>(j), half);
            term *= std::tgamma(2.0 * j + 1.0);
            term /= std::tgamma(half - j + 1.0);
            term /= std::tgamma(j + 1.0);
            term /= std::tgamma(static_cast<double>(j));
            term /= std::tgamma(k - j + 1.0);
            term /= std::tgamma(2.0 * j - k + 1.0);
            sum += term;
        }
        v[static_cast<size_t>(k)] = ((k + half) % 2 == 0 ? 1.0 : -1.0) * sum;
    }
    return v;
}

void check_gs_order(int order) {
    if (order < 2 || order % 2 != 0)
        throw std::invalid_argument("gaver_stehfest: order must be a positive even number");
    if (order > 18)
        throw std::invalid_argument(
            "gaver_stehfest: order > 18 is ill-conditioned in double precision");
}

}  // namespace

double gaver_stehfest(const LtFunction& f, double t, int order) {
    check_gs_order(order);
    if (!(t > 0.0)) throw std::invalid_argument("gaver_stehfest: t must be > 0");
    static thread_local std::vector<double> cache;
    static thread_local int cached_order = 0;
    if (cached_order != order) {
        cache = stehfest_weights(order);
        cached_order = order;
    }
    const double ln2_t = std::numbers::ln2 / t;
    double sum = 0.0;
    for (int k = 1; k <= order; ++k) sum += cache[static_cast<size_t>(k)] * f.real(k * ln2_t);
    return ln2_t * sum;
}

double talbot(const LtFunction& f, double t, int nodes) {
    if (nodes < 4) throw std::invalid_argument("talbot: need at least 4 nodes");
    if (!(t > 0.0)) throw std::invalid_argument("talbot: t must be > 0");
    // Fixed Talbot contour s(phi) = r phi (cot phi + i), r = 2 M / (5 t).
    const int m = nodes;
    const double r = 2.0 * m / (5.0 * t);
    double sum = 0.5 * f.eval(std::complex<double>(r, 0.0)).real() * std::exp(r * t);
    for (int k = 1; k < m; ++k) {
        const double phi = k * std::numbers::pi / m;
        const double cot = std::cos(phi) / std::sin(phi);
        const std::complex<double> s(r * phi * cot, r * phi);
        const double sigma = phi + (phi * cot - 1.0) * cot;
        const std::complex<double> term =
            std::exp(s * t) * f.eval(s) * std::complex<double>(1.0, sigma);
        sum += term.real();
    }
    return sum * r / m;
}

namespace {

GridValues invert_grid(const LtFunction& f, const InversionConfig& cfg) {
    GridValues out;
    out.reserve(cfg.t_grid.size());
    for (double t : cfg.t_grid) {
        if (!(t > 0.0)) throw std::invalid_argument("inversion: t_grid values must be > 0");
        double v = cfg.method == InversionMethod::gaver_stehfest
                       ? gaver_stehfest(f, t, cfg.order)
                       : talbot(f, t, cfg.order);
        out.emplace_back(t, v);
    }
    return out;
}

}  // namespace

GridValues invert_density(const LtFunction& f, const InversionConfig& cfg) {
    return invert_grid(f, cfg);
}

GridValues invert_cdf(const LtFunction& f, const InversionConfig& cfg) {
    LtFunction g{[&f](std::complex<double> s) { return f.eval(s) / s; }, f.domain_note};
    GridValues out = invert_grid(g, cfg);
    for (auto& [t, v] : out) v = std::clamp(v, 0.0, 1.0);
    return out;
}

}  // namespace passage
