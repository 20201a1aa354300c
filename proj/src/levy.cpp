#include "passage/levy.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace passage {

void validate(const LevyModel& m) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BmDrift>) {
                if (!(v.mu > 0.0) || !(v.sigma > 0.0))
                    throw std::invalid_argument("BmDrift: mu and sigma must be > 0");
            } else if constexpr (std::is_same_v<T, CppExp>) {
                if (!(v.c > 0.0) || !(v.lambda > 0.0) || !(v.jump_mu > 0.0))
                    throw std::invalid_argument("CppExp: c, lambda, jump_mu must be > 0");
                if (!(v.c - v.lambda / v.jump_mu > 0.0))
                    throw std::invalid_argument("CppExp: requires c - lambda/jump_mu > 0");
            } else {
                if (!(v.beta > 1.0) || !(v.beta < 2.0))
                    throw std::invalid_argument("CaballeroChaumont: beta must be in (1, 2)");
            }
        },
        m);
}

double levy_exponent(const LevyModel& m, double theta) {
    validate(m);
    if (!(theta > 0.0)) throw std::invalid_argument("levy_exponent: theta must be > 0");
    return std::visit(
        [theta](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BmDrift>) {
                return v.mu * theta + 0.5 * v.sigma * v.sigma * theta * theta;
            } else if constexpr (std::is_same_v<T, CppExp>) {
                // c theta - lambda theta / (jump_mu + theta), from integrating
                // (e^{theta s} - 1) against the downward exponential jump law.
                return v.c * theta - v.lambda * theta / (v.jump_mu + theta);
            } else {
                // Gamma(theta + beta) / (Gamma(theta) Gamma(beta))
                return std::exp(std::lgamma(theta + v.beta) - std::lgamma(theta) -
                                std::lgamma(v.beta));
            }
        },
        m);
}

double scale_w(const LevyModel& m, double x) {
    validate(m);
    if (!(x > 0.0)) throw std::invalid_argument("scale_w: x must be > 0");
    return std::visit(
        [x](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BmDrift>) {
                const double q = 2.0 * v.mu / (v.sigma * v.sigma);
                return -std::expm1(-q * x) / v.mu;
            } else if constexpr (std::is_same_v<T, CppExp>) {
                const double rho = v.jump_mu - v.lambda / v.c;
                return (1.0 - v.lambda / (v.c * v.jump_mu - v.lambda) * std::expm1(-rho * x)) /
                       v.c;
            } else {
                return std::pow(-std::expm1(-x), v.beta - 1.0);
            }
        },
        m);
}

double scale_w_prime(const LevyModel& m, double x) {
    validate(m);
    if (!(x > 0.0)) throw std::invalid_argument("scale_w_prime: x must be > 0");
    return std::visit(
        [x](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BmDrift>) {
                const double q = 2.0 * v.mu / (v.sigma * v.sigma);
                return (q / v.mu) * std::exp(-q * x);
            } else if constexpr (std::is_same_v<T, CppExp>) {
                const double rho = v.jump_mu - v.lambda / v.c;
                return (v.lambda / (v.c * v.c)) * std::exp(-rho * x);
            } else {
                return (v.beta - 1.0) * std::exp(-x) *
                       std::pow(-std::expm1(-x), v.beta - 2.0);
            }
        },
        m);
}

LaplaceCheck scale_laplace_check(const LevyModel& m, double theta) {
    validate(m);
    if (!(theta > 0.0))
        throw std::invalid_argument("scale_laplace_check: theta must be > 0");
    boost::math::quadrature::exp_sinh<double> integrator;
    double err = 0.0;
    double lhs = integrator.integrate(
        [&m, theta](double x) { return std::exp(-theta * x) * scale_w(m, x); }, 1e-10, &err);
    if (!(err < 1e-6) || !std::isfinite(lhs))
        throw std::runtime_error("scale_laplace_check: integral did not converge");
    const double rhs = 1.0 / levy_exponent(m, theta);
    return {lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)};
}

double two_sided_exit(const LevyModel& m, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("two_sided_exit: x and y must be > 0");
    return scale_w(m, x) / scale_w(m, x + y);
}

double drawdown_rate(const LevyModel& m, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("drawdown_rate: delta must be > 0");
    return scale_w_prime(m, delta) / scale_w(m, delta);
}

double drawdown_survival_levy(const LevyModel& m, double delta, double xi) {
    if (!(xi >= 0.0)) throw std::invalid_argument("drawdown_survival_levy: xi must be >= 0");
    return std::exp(-drawdown_rate(m, delta) * xi);
}

double cpp_printed_rate(const CppExp& m, double delta) {
    validate(LevyModel{m});
    if (!(delta > 0.0)) throw std::invalid_argument("cpp_printed_rate: delta must be > 0");
    const double ratio = m.lambda / m.c;
    const double rho = m.jump_mu - ratio;
    return ratio / (std::exp(delta * rho) - ratio / rho);
}

BoundaryAsymptotics boundary_asymptotics(const LevyModel& m) {
    validate(m);
    return std::visit(
        [](const auto& v) -> BoundaryAsymptotics {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BmDrift>) {
                // W(0+) = 0 (infinite variation); W'(0+) = 2/sigma^2 is finite
                // under this normalization.
                return {0.0, false};
            } else if constexpr (std::is_same_v<T, CppExp>) {
                return {1.0 / v.c, false};
            } else {
                return {0.0, v.beta < 2.0};
            }
        },
        m);
}

}  // namespace passage
