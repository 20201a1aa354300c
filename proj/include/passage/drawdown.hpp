// Law of the maximum before a fixed drawdown for one-dimensional diffusions.
//
// For a diffusion dX = mu(X)dt + sigma(X)dW on [-a, inf) with characteristic
// gamma(x) = mu(x)/sigma(x)^2 and Phi(x) = exp(-2 int_0^x gamma), the maximum
// M^delta reached before the drawdown first hits delta satisfies
//
//   log P[M^delta >= xi] = - int_0^xi Phi(u) / int_{u-delta}^u Phi(s) ds du.
//
// The integrand is the local hazard rate; it is constant in xi exactly when
// gamma is constant, which is the exponential-law characterization this
// module's diagnostics probe numerically. dde_solve builds Phi functions
// that satisfy Phi' = Lambda (Phi(xi) - Phi(xi - delta)), the delay equation
// tying a prescribed constant hazard to a non-exponential Phi.
#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace passage {

struct DiffusionSpec {
    std::function<double(double)> mu;
    std::function<double(double)> sigma;  // > 0 on the domain
    double left_endpoint = -std::numeric_limits<double>::infinity();  // -a
    bool reflecting_left = false;  // boundary behaviour flag; the law only reads Phi
    std::string description;

    double gamma(double x) const {
        double s = sigma(x);
        return mu(x) / (s * s);
    }
};

enum class PhiSource { from_gamma, from_dde, closed_form };

struct PhiFunction {
    std::function<double(double)> eval;
    PhiSource source = PhiSource::closed_form;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    double operator()(double x) const { return eval(x); }
};

struct SurvivalCurve {
    std::vector<double> xi_grid;       // starts at 0
    std::vector<double> log_survival;  // log_survival[0] == 0, nonincreasing
    double delta = 0.0;
};

// Phi(x) = exp(-2 int_0^x gamma) with the running integral cached; Phi(0) = 1
// exactly. Throws if gamma evaluates non-finite.
PhiFunction phi_from_gamma(const DiffusionSpec& d);

// Evaluates the nested-integral law on xi_grid (0 is prepended when absent).
// delta must lie in (0, a] where -a is the lower end of phi's valid range.
SurvivalCurve drawdown_survival(const PhiFunction& phi, double delta,
                                const std::vector<double>& xi_grid);

// Local exponential rate Phi(xi) / int_{xi-delta}^{xi} Phi at a single point.
double hazard(const PhiFunction& phi, double delta, double xi);

struct ExponentialityDiagnostic {
    double lambda_hat;        // minus the least-squares slope of log-survival vs xi
    double max_abs_residual;  // max deviation from the fitted line
};

ExponentialityDiagnostic exponentiality_diagnostic(const SurvivalCurve& curve);

// Method-of-steps solution of Phi' = lambda (Phi(xi) - Phi(xi - delta)) on
// [0, xi_max], with `initial` giving Phi on [-delta, 0]. Continuous at the
// segment knots by construction; dense output via cubic Hermite interpolation
// on an RK4 grid.
PhiFunction dde_solve(const PhiFunction& initial, double lambda, double delta, double xi_max);

}  // namespace passage
