#include "passage/drawdown.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "passage/quadrature.hpp"

namespace passage {

PhiFunction phi_from_gamma(const DiffusionSpec& d) {
    auto gamma = [d](double x) {
        double g = d.gamma(x);
        if (!std::isfinite(g)) throw std::runtime_error("phi_from_gamma: non-finite gamma");
        return g;
    };
    auto cum = std::make_shared<CumulativeIntegral>(gamma, 0.25, 1e-13);
    PhiFunction phi;
    phi.eval = [cum](double x) { return std::exp(-2.0 * (*cum)(x)); };
    phi.source = PhiSource::from_gamma;
    phi.lo = d.left_endpoint;
    return phi;
}

namespace {

void check_delta(const PhiFunction& phi, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("drawdown: delta must be > 0");
    if (delta > -phi.lo)
        throw std::invalid_argument("drawdown: delta exceeds the lower extent of Phi");
}

double hazard_at(const PhiFunction& phi, const CumulativeIntegral& iphi, double delta,
                 double u) {
    double inner = iphi(u) - iphi(u - delta);
    if (!(inner > 0.0)) throw std::runtime_error("drawdown: inner integral <= 0, invalid Phi");
    return phi(u) / inner;
}

}  // namespace

double hazard(const PhiFunction& phi, double delta, double xi) {
    check_delta(phi, delta);
    if (!(xi >= 0.0)) throw std::invalid_argument("hazard: xi must be >= 0");
    CumulativeIntegral iphi(phi.eval, std::min(0.25, delta / 4.0), 1e-13);
    return hazard_at(phi, iphi, delta, xi);
}

SurvivalCurve drawdown_survival(const PhiFunction& phi, double delta,
                                const std::vector<double>& xi_grid) {
    check_delta(phi, delta);
    std::vector<double> grid = xi_grid;
    std::sort(grid.begin(), grid.end());
    if (grid.empty() || grid.front() != 0.0) grid.insert(grid.begin(), 0.0);
    if (grid.front() < 0.0) throw std::invalid_argument("drawdown_survival: xi must be >= 0");

    auto iphi = std::make_shared<CumulativeIntegral>(phi.eval, std::min(0.25, delta / 4.0),
                                                     1e-13);
    auto rate = [&phi, iphi, delta](double u) { return hazard_at(phi, *iphi, delta, u); };

    SurvivalCurve curve;
    curve.delta = delta;
    curve.xi_grid = grid;
    curve.log_survival.resize(grid.size());
    double acc = 0.0;
    curve.log_survival[0] = 0.0;
    for (size_t i = 1; i < grid.size(); ++i) {
        acc += integrate(rate, grid[i - 1], grid[i], 1e-12);
        curve.log_survival[i] = -acc;
    }
    return curve;
}

ExponentialityDiagnostic exponentiality_diagnostic(const SurvivalCurve& curve) {
    const size_t n = curve.xi_grid.size();
    if (n < 3 || curve.log_survival.size() != n)
        throw std::invalid_argument("exponentiality_diagnostic: need >= 3 curve points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += curve.xi_grid[i];
        sy += curve.log_survival[i];
        sxx += curve.xi_grid[i] * curve.xi_grid[i];
        sxy += curve.xi_grid[i] * curve.log_survival[i];
    }
    const double det = n * sxx - sx * sx;
    if (det <= 0.0) throw std::invalid_argument("exponentiality_diagnostic: degenerate grid");
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;
    double max_res = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double res = std::abs(curve.log_survival[i] - (intercept + slope * curve.xi_grid[i]));
        max_res = std::max(max_res, res);
    }
    return {-slope, max_res};
}

namespace {

struct DdeSolution {
    std::vector<double> y;   // values at grid x_j = j * h
    std::vector<double> dy;  // derivatives at the grid
    double h;
    size_t n_total;

    double value(double x) const {
        if (x <= 0.0) return y[0];
        size_t j = std::min(static_cast<size_t>(x / h), n_total - 1);
        double xa = j * h;
        double t = (x - xa) / h;
        // cubic Hermite on [x_j, x_{j+1}]
        double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
        double h10 = t * (1 - t) * (1 - t);
        double h01 = t * t * (3 - 2 * t);
        double h11 = t * t * (t - 1);
        return h00 * y[j] + h10 * h * dy[j] + h01 * y[j + 1] + h11 * h * dy[j + 1];
    }
};

}  // namespace

PhiFunction dde_solve(const PhiFunction& initial, double lambda, double delta, double xi_max) {
    if (!(lambda > 0.0) || !(delta > 0.0) || !(xi_max > 0.0))
        throw std::invalid_argument("dde_solve: lambda, delta, xi_max must be > 0");
    const size_t steps_per_seg = 1024;
    const size_t segments = static_cast<size_t>(std::ceil(xi_max / delta - 1e-12));
    const double h = delta / steps_per_seg;
    auto sol = std::make_shared<DdeSolution>();
    sol->h = h;
    sol->n_total = segments * steps_per_seg;
    sol->y.resize(sol->n_total + 1);
    sol->dy.resize(sol->n_total + 1);

    // Lagged value Phi(x - delta): from the initial function on segment 0,
    // from the stored dense output afterwards.
    auto lagged = [&initial, &sol, delta](double x) {
        double xl = x - delta;
        return xl <= 0.0 ? initial(xl) : sol->value(xl);
    };
    auto rhs = [lambda, &lagged](double x, double y) { return lambda * (y - lagged(x)); };

    sol->y[0] = initial(0.0);
    sol->dy[0] = rhs(0.0, sol->y[0]);
    for (size_t j = 0; j < sol->n_total; ++j) {
        const double x = j * h;
        const double y = sol->y[j];
        const double k1 = rhs(x, y);
        const double k2 = rhs(x + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = rhs(x + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = rhs(x + h, y + h * k3);
        sol->y[j + 1] = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        sol->dy[j + 1] = rhs(x + h, sol->y[j + 1]);
    }

    PhiFunction out;
    out.source = PhiSource::from_dde;
    out.lo = -delta;
    out.hi = xi_max;
    out.eval = [initial, sol](double x) {
        return x < 0.0 ? initial(x) : sol->value(x);
    };
    return out;
}

}  // namespace passage
