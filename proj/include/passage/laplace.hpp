// Numerical inversion of Laplace transforms.
//
// Two methods: Gaver-Stehfest (real evaluations only, modest accuracy,
// order limited by double-precision cancellation) and fixed Talbot
// (complex contour, near machine accuracy for transforms analytic off the
// negative real axis).
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace passage {

// Carrier for a transform F(theta). Talbot needs F at complex arguments;
// Gaver-Stehfest only ever calls it on the positive real axis.
struct LtFunction {
    std::function<std::complex<double>(std::complex<double>)> eval;
    std::string domain_note;

    double real(double theta) const { return eval(std::complex<double>(theta, 0.0)).real(); }

    static LtFunction from_real(std::function<double(double)> f, std::string note = {});
};

enum class InversionMethod { gaver_stehfest, talbot };

struct InversionConfig {
    InversionMethod method = InversionMethod::talbot;
    // Gaver-Stehfest: number of terms, even, <= 18 in double precision.
    // Talbot: number of contour nodes.
    int order = 32;
    std::vector<double> t_grid;
};

using GridValues = std::vector<std::pair<double, double>>;

// Pointwise density estimates f(t) for t in cfg.t_grid (all > 0).
GridValues invert_density(const LtFunction& f, const InversionConfig& cfg);

// CDF estimates, obtained by inverting theta -> F(theta)/theta, clipped to [0,1].
GridValues invert_cdf(const LtFunction& f, const InversionConfig& cfg);

// Single-point inversions used internally and by the CLI.
double gaver_stehfest(const LtFunction& f, double t, int order);
double talbot(const LtFunction& f, double t, int nodes);

}  // namespace passage
