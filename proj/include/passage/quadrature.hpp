// Adaptive quadrature helpers shared by the analytic modules.
//
// All integrals in this project are one-dimensional with smooth integrands;
// Gauss-Kronrod 15 with adaptive bisection covers them. CumulativeIntegral
// caches nodal antiderivative values on a lazily extended grid so that
// nested integrals (outer over an inner antiderivative) stay O(n) instead
// of O(n^2).
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace passage {

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, unsigned max_depth = 15) {
    if (a == b) return 0.0;
    using gk = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    double v = gk::integrate(f, a, b, max_depth, tol, &err);
    if (!std::isfinite(v)) throw std::runtime_error("quadrature: non-finite integral");
    return v;
}

// Antiderivative G(x) = \int_0^x f, cached at grid points spaced `step`
// on either side of 0. eval(x) = G(nearest cached node below x) + one
// adaptive panel over the remainder, so no interpolation error enters.
class CumulativeIntegral {
  public:
    CumulativeIntegral(std::function<double(double)> f, double step = 0.25, double tol = 1e-13)
        : f_(std::move(f)), step_(step), tol_(tol) {
        pos_.push_back(0.0);
        neg_.push_back(0.0);
    }

    double operator()(double x) const {
        if (x == 0.0) return 0.0;
        long k = static_cast<long>(std::floor(std::abs(x) / step_));
        if (x > 0.0) {
            extend(pos_, +1.0, k);
            double base = pos_[static_cast<size_t>(k)];
            double x0 = static_cast<double>(k) * step_;
            return base + integrate(f_, x0, x, tol_, kPanelDepth);
        }
        extend(neg_, -1.0, k);
        double base = neg_[static_cast<size_t>(k)];
        double x0 = -static_cast<double>(k) * step_;
        return base + integrate(f_, x0, x, tol_, kPanelDepth);
    }

  private:
    // Panels never exceed `step`, where GK15 is already exact for smooth
    // integrands; a shallow depth cap matters because the adaptive error
    // estimate degenerates on the near-empty panels produced by evaluation
    // points just past a cached node.
    static constexpr unsigned kPanelDepth = 5;

    void extend(std::vector<double>& table, double sign, long k) const {
        while (static_cast<long>(table.size()) <= k) {
            double a = sign * static_cast<double>(table.size() - 1) * step_;
            double b = a + sign * step_;
            table.push_back(table.back() + integrate(f_, a, b, tol_, kPanelDepth));
        }
    }

    std::function<double(double)> f_;
    double step_;
    double tol_;
    mutable std::vector<double> pos_;  // G(k*step), k = 0,1,...
    mutable std::vector<double> neg_;  // G(-k*step)
};

}  // namespace passage
