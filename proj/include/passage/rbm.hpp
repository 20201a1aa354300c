// First-passage Laplace transform of a reflected Brownian motion with drift.
//
// The process lives on [0, inf) with drift mu and volatility sigma, reflected
// at 0 and started at x >= 0. rbm_lt evaluates E[exp(-theta * tau)] where tau
// is the first hitting time of the barrier x + delta. perry_lt_driftless is a
// rival formula from the literature whose driftless limit disagrees; it is
// kept so the Monte Carlo experiment can discriminate between the two.
#pragma once

#include <complex>

namespace passage {

struct RbmParams {
    double mu = 0.0;     // drift per unit time
    double sigma = 1.0;  // volatility, > 0
    double x = 0.0;      // start point, >= 0
    double delta = 1.0;  // barrier offset, >= 0 (barrier sits at x + delta)
};

// Throws std::invalid_argument on violated parameter constraints.
void validate(const RbmParams& p);

struct KappaPair {
    double kappa_minus;
    double kappa_plus;
};

// Roots of sigma^2 k^2 / 2 - mu k - theta = 0,
// kappa_pm = (mu +- sqrt(mu^2 + 2 theta sigma^2)) / sigma^2.
KappaPair kappa_roots(const RbmParams& p, double theta);

// Laplace transform of the first hitting time of x + delta. Exact closed
// form; evaluated in an exponential rewrite whose exponents are all <= 0,
// so it never overflows however large theta * delta / sigma^2 gets.
// Returns 1 for theta = 0 or delta = 0.
double rbm_lt(const RbmParams& p, double theta);

// Same transform continued to complex theta (needed by Talbot inversion).
// Valid for Re(theta) in the right half plane reached by the Talbot contour.
std::complex<double> rbm_lt(const RbmParams& p, std::complex<double> theta);

// Driftless special case: 1 / cosh((delta/sigma) * sqrt(2 theta)).
double rbm_lt_driftless(double sigma, double delta, double theta);

// The mu -> 0 limit of the rival formula (sigma = 1): 1 / cosh(delta * sqrt(theta)).
double perry_lt_driftless(double delta, double theta);

}  // namespace passage
