// Scale-function calculus for three spectrally negative Levy models.
//
// Each model exposes its Laplace exponent Psi and a closed-form scale
// function W with derivative W'. W is pinned by the defining identity
// int_0^inf e^{-theta x} W(x) dx = 1/Psi(theta); rates W'/W are invariant
// under the scaling freedom that identity leaves. Exit probabilities from
// [-x, y] are W(x)/W(x+y), and the maximum before a drawdown of size delta
// is exponential with rate W'(delta)/W(delta).
#pragma once

#include <variant>

namespace passage {

struct BmDrift {
    double mu;     // > 0
    double sigma;  // > 0
};

struct CppExp {
    double c;        // upward drift, > 0
    double lambda;   // jump intensity, > 0
    double jump_mu;  // exponential jump parameter, > 0; requires c - lambda/jump_mu > 0
};

struct CaballeroChaumont {
    double beta;  // in (1, 2)
};

using LevyModel = std::variant<BmDrift, CppExp, CaballeroChaumont>;

void validate(const LevyModel& m);

// Psi(theta) = (1/t) log E[e^{theta X_t}], theta > 0.
double levy_exponent(const LevyModel& m, double theta);

// Closed-form scale function and its exact derivative, x > 0.
double scale_w(const LevyModel& m, double x);
double scale_w_prime(const LevyModel& m, double x);

struct LaplaceCheck {
    double lhs;  // quadrature of int_0^inf e^{-theta x} W(x) dx
    double rhs;  // 1 / Psi(theta)
    double rel_err;
};

LaplaceCheck scale_laplace_check(const LevyModel& m, double theta);

// P[first exit from [-x, y] happens at y] = W(x) / W(x + y).
double two_sided_exit(const LevyModel& m, double x, double y);

// Exponential rate of the maximum before a delta-drawdown: W'(delta)/W(delta).
double drawdown_rate(const LevyModel& m, double delta);

// P[M^delta >= xi] = exp(-drawdown_rate * xi).
double drawdown_survival_levy(const LevyModel& m, double delta, double xi);

// The compound-Poisson model's literature display of the drawdown rate,
// (lambda/c) / (e^{rho delta} - (lambda/c)/rho) with rho = jump_mu - lambda/c.
// It disagrees with W'(delta)/W(delta) from the printed scale function; both
// are exposed so the discrepancy can be reported side by side.
double cpp_printed_rate(const CppExp& m, double delta);

struct BoundaryAsymptotics {
    double w_at_zero;
    bool w_prime_at_zero_is_infinite;
};

BoundaryAsymptotics boundary_asymptotics(const LevyModel& m);

}  // namespace passage
