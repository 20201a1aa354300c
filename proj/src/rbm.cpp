#include "passage/rbm.hpp"

#include <cmath>
#include <stdexcept>

namespace passage {

void validate(const RbmParams& p) {
    if (!(p.sigma > 0.0)) throw std::invalid_argument("RbmParams: sigma must be > 0");
    if (!(p.x >= 0.0)) throw std::invalid_argument("RbmParams: x must be >= 0");
    if (!(p.delta >= 0.0)) throw std::invalid_argument("RbmParams: delta must be >= 0");
    if (!std::isfinite(p.mu)) throw std::invalid_argument("RbmParams: mu must be finite");
}

KappaPair kappa_roots(const RbmParams& p, double theta) {
    validate(p);
    if (!(theta >= 0.0)) throw std::invalid_argument("kappa_roots: theta must be >= 0");
    const double s2 = p.sigma * p.sigma;
    const double root = std::sqrt(p.mu * p.mu + 2.0 * theta * s2);
    return {(p.mu - root) / s2, (p.mu + root) / s2};
}

namespace {

// Shared evaluation for real and complex theta. Writing the numerator and
// denominator of the cosh/sinh ratio in terms of decaying exponentials:
//
//   LT = e^{delta*kappa_minus} * (a + b e^{-2 r x}) / (a + b e^{-2 r (x+delta)})
//
// with r = sqrt(mu^2 + 2 theta sigma^2)/sigma^2, a = sigma^2 r + mu,
// b = sigma^2 r - mu, kappa_minus = (mu - sigma^2 r)/sigma^2 <= 0.
template <typename T>
T rbm_lt_impl(const RbmParams& p, T theta) {
    const double s2 = p.sigma * p.sigma;
    const T root = std::sqrt(p.mu * p.mu + 2.0 * theta * s2);  // = sigma^2 * r
    const T r = root / s2;
    const T a = root + p.mu;
    const T b = root - p.mu;
    const T num = a + b * std::exp(-2.0 * r * p.x);
    const T den = a + b * std::exp(-2.0 * r * (p.x + p.delta));
    return std::exp(p.delta * (p.mu - root) / s2) * num / den;
}

}  // namespace

double rbm_lt(const RbmParams& p, double theta) {
    validate(p);
    if (!(theta >= 0.0)) throw std::invalid_argument("rbm_lt: theta must be >= 0");
    if (theta == 0.0 || p.delta == 0.0) return 1.0;
    return rbm_lt_impl(p, theta);
}

std::complex<double> rbm_lt(const RbmParams& p, std::complex<double> theta) {
    validate(p);
    if (p.delta == 0.0) return 1.0;
    return rbm_lt_impl(p, theta);
}

double rbm_lt_driftless(double sigma, double delta, double theta) {
    if (!(sigma > 0.0)) throw std::invalid_argument("rbm_lt_driftless: sigma must be > 0");
    if (!(delta > 0.0)) throw std::invalid_argument("rbm_lt_driftless: delta must be > 0");
    if (!(theta >= 0.0)) throw std::invalid_argument("rbm_lt_driftless: theta must be >= 0");
    const double w = (delta / sigma) * std::sqrt(2.0 * theta);
    // 1/cosh(w) = 2 e^{-w} / (1 + e^{-2w}), overflow-free for any w.
    return 2.0 * std::exp(-w) / (1.0 + std::exp(-2.0 * w));
}

double perry_lt_driftless(double delta, double theta) {
    if (!(delta > 0.0)) throw std::invalid_argument("perry_lt_driftless: delta must be > 0");
    if (!(theta >= 0.0)) throw std::invalid_argument("perry_lt_driftless: theta must be >= 0");
    const double w = delta * std::sqrt(theta);
    return 2.0 * std::exp(-w) / (1.0 + std::exp(-2.0 * w));
}

}  // namespace passage
