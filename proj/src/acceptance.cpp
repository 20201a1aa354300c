#include "passage/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "passage/drawdown.hpp"
#include "passage/laplace.hpp"
#include "passage/levy.hpp"
#include "passage/montecarlo.hpp"
#include "passage/rbm.hpp"

namespace passage {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

constexpr uint64_t kSuiteSeed = 20250826;

DiffusionSpec constant_gamma_spec(double c) {
    DiffusionSpec d;
    d.mu = [c](double) { return c; };
    d.sigma = [](double) { return 1.0; };
    d.description = "constant characteristic gamma = " + std::to_string(c);
    return d;
}

// gamma(x) = -1/(2(x+2)), so Phi(x) = (x+2)/2; domain [-1, inf).
DiffusionSpec linear_phi_spec() {
    DiffusionSpec d;
    d.mu = [](double x) { return -1.0 / (2.0 * (x + 2.0)); };
    d.sigma = [](double) { return 1.0; };
    d.left_endpoint = -1.0;
    d.description = "Phi(x) = (x+2)/2 family";
    return d;
}

double closed_form_bm_rate(double c, double delta) {
    return 2.0 * c / std::expm1(2.0 * c * delta);
}

CriterionResult c1_driftless_identity() {
    double max_err = 0.0;
    for (double sigma : {1.0, 2.0}) {
        for (double ratio : {0.5, 1.0, 2.0}) {
            for (double theta : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
                RbmParams p{0.0, sigma, 0.0, ratio * sigma};
                const double lhs = rbm_lt(p, theta);
                const double rhs = 1.0 / std::cosh(ratio * std::sqrt(2.0 * theta));
                max_err = std::max(max_err, std::abs(lhs - rhs));
            }
        }
    }
    return {1, "driftless-identity", max_err < 1e-12, fmt("max_abs_err=%.3e (<1e-12)", max_err)};
}

CriterionResult c2_perry_discrimination() {
    RbmParams p{0.0, 1.0, 0.0, 1.0};
    SimulationConfig cfg;
    cfg.n_paths = 1'000'000;
    cfg.dt = 1e-4;
    cfg.seed = kSuiteSeed;
    cfg.scheme = Scheme::reflect_abs;
    auto sample = simulate_rbm_first_passage(p, cfg);
    auto lt = empirical_lt(sample, 1.0);
    const double ours = rbm_lt_driftless(1.0, 1.0, 1.0);
    const double perry = perry_lt_driftless(1.0, 1.0);
    const double tol = 3.0 * lt.std_error + 2e-3;
    const double gap_ours = std::abs(lt.estimate - ours);
    const double gap_perry = std::abs(lt.estimate - perry);
    const bool pass = gap_ours <= tol && gap_perry >= 5.0 * lt.std_error;
    return {2, "perry-discrimination", pass,
            fmt("est=%.6f se=%.2e |est-%.4f|=%.2e (tol %.2e), |est-%.4f|=%.1f se", lt.estimate,
                lt.std_error, ours, gap_ours, tol, perry, gap_perry / lt.std_error)};
}

CriterionResult c3_drifted_rbm() {
    struct Case {
        double mu, sigma, x, delta;
    };
    const Case cases[] = {{1, 1, 0, 1}, {1, 1, 0.5, 1}, {0.5, 2, 0, 2}};
    bool pass = true;
    double worst = 0.0;  // worst gap/tol ratio
    for (const auto& c : cases) {
        RbmParams p{c.mu, c.sigma, c.x, c.delta};
        SimulationConfig cfg;
        cfg.n_paths = 100'000;
        cfg.dt = 1e-4;
        cfg.seed = kSuiteSeed + 1;
        auto sample = simulate_rbm_first_passage(p, cfg);
        for (double theta : {0.5, 1.0, 2.0}) {
            auto lt = empirical_lt(sample, theta);
            const double exact = rbm_lt(p, theta);
            const double tol = 3.0 * lt.std_error + 2e-3;
            const double gap = std::abs(lt.estimate - exact);
            worst = std::max(worst, gap / tol);
            pass = pass && gap <= tol;
        }
    }
    return {3, "drifted-rbm-lt", pass, fmt("worst |gap|/tol=%.3f (<1)", worst)};
}

CriterionResult c4_inversion_sanity() {
    LtFunction f{[](std::complex<double> s) { return std::exp(-std::sqrt(2.0 * s)); },
                 "transform of the BM level-1 hitting density"};
    double max_rel = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
        const double exact = std::exp(-1.0 / (2.0 * t)) / std::sqrt(2.0 * M_PI * t * t * t);
        const double est = talbot(f, t, 32);
        max_rel = std::max(max_rel, std::abs(est - exact) / exact);
    }

    RbmParams p{0.0, 1.0, 0.0, 1.0};
    LtFunction g{[p](std::complex<double> s) { return rbm_lt(p, s); }, "reflected BM transform"};
    double mass = 0.0;
    const double h = 0.02;
    double prev = talbot(g, h, 32);
    for (double t = 2 * h; t <= 40.0; t += h) {
        const double cur = talbot(g, t, 32);
        mass += 0.5 * (prev + cur) * h;
        prev = cur;
    }
    const bool pass = max_rel < 1e-6 && std::abs(mass - 1.0) < 1e-3;
    return {4, "inversion-sanity", pass,
            fmt("talbot max_rel=%.2e (<1e-6), density mass=%.6f (1 +- 1e-3)", max_rel, mass)};
}

CriterionResult c5_constant_gamma_curves() {
    bool pass = true;
    double worst_res = 0.0, worst_slope = 0.0;
    for (double c : {0.5, 1.0, 2.0}) {
        for (double delta : {0.5, 1.0}) {
            auto phi = phi_from_gamma(constant_gamma_spec(c));
            std::vector<double> grid;
            for (int i = 0; i <= 12; ++i) grid.push_back(0.25 * i);
            auto curve = drawdown_survival(phi, delta, grid);
            auto diag = exponentiality_diagnostic(curve);
            const double target = closed_form_bm_rate(c, delta);
            worst_res = std::max(worst_res, diag.max_abs_residual);
            worst_slope = std::max(worst_slope, std::abs(diag.lambda_hat - target));
            pass = pass && diag.max_abs_residual < 1e-7 &&
                   std::abs(diag.lambda_hat - target) < 1e-6;
        }
    }
    return {5, "constant-gamma-exponential", pass,
            fmt("max residual=%.2e (<1e-7), max slope err=%.2e (<1e-6)", worst_res, worst_slope)};
}

CriterionResult c6_cross_route_rate() {
    double worst = 0.0;
    for (double mu : {0.5, 1.0, 2.0}) {
        for (double sigma : {0.5, 1.0, 2.0}) {
            for (double delta : {0.25, 1.0, 4.0}) {
                auto phi = phi_from_gamma(constant_gamma_spec(mu / (sigma * sigma)));
                const double h = hazard(phi, delta, 0.5);
                const double r = drawdown_rate(LevyModel{BmDrift{mu, sigma}}, delta);
                worst = std::max(worst, std::abs(h - r) / r);
            }
        }
    }
    return {6, "cross-route-rate-equality", worst < 1e-10,
            fmt("max rel diff=%.2e (<1e-10)", worst)};
}

CriterionResult c7_diffusion_drawdown_mc() {
    SimulationConfig cfg;
    cfg.n_paths = 10'000;
    cfg.dt = 1e-4;
    cfg.seed = kSuiteSeed + 2;
    auto bm_sample = simulate_diffusion_drawdown(constant_gamma_spec(1.0), 1.0, cfg);
    auto ks = ks_exponential_test(bm_sample, closed_form_bm_rate(1.0, 1.0));

    cfg.seed = kSuiteSeed + 3;
    auto spec = linear_phi_spec();
    auto phi = phi_from_gamma(spec);
    auto curve = drawdown_survival(phi, 1.0, {0.5, 1.0, 2.0, 3.0});
    auto diag = exponentiality_diagnostic(curve);
    auto sample = simulate_diffusion_drawdown(spec, 1.0, cfg);

    bool mc_match = true;
    double worst_z = 0.0;
    const double n = static_cast<double>(sample.values.size());
    for (size_t i = 0; i < curve.xi_grid.size(); ++i) {
        const double xi = curve.xi_grid[i];
        if (xi != 0.5 && xi != 1.0 && xi != 2.0) continue;
        const double expect = std::exp(curve.log_survival[i]);
        const double emp =
            static_cast<double>(sample.values.end() -
                                std::lower_bound(sample.values.begin(), sample.values.end(), xi)) /
            n;
        const double se = std::sqrt(std::max(expect * (1.0 - expect), 1e-12) / n);
        const double z = std::abs(emp - expect) / se;
        worst_z = std::max(worst_z, z);
        mc_match = mc_match && z <= 3.0;
    }
    const bool pass = ks.p_value >= 0.01 && diag.max_abs_residual > 1e-3 && mc_match;
    return {7, "diffusion-drawdown-mc", pass,
            fmt("KS p=%.3f (>=0.01), nonconst residual=%.2e (>1e-3), worst |z|=%.2f (<=3)",
                ks.p_value, diag.max_abs_residual, worst_z)};
}

CriterionResult c8_scale_identity() {
    const LevyModel models[] = {LevyModel{BmDrift{1.0, 1.0}}, LevyModel{CppExp{2.0, 1.0, 1.0}},
                                LevyModel{CaballeroChaumont{1.5}}};
    double worst = 0.0;
    for (const auto& m : models)
        for (double theta : {0.5, 1.0, 2.0, 5.0})
            worst = std::max(worst, scale_laplace_check(m, theta).rel_err);
    return {8, "scale-laplace-identity", worst < 1e-6, fmt("max rel_err=%.2e (<1e-6)", worst)};
}

CriterionResult c9_caballero_closed_forms() {
    const double rate = drawdown_rate(LevyModel{CaballeroChaumont{1.5}}, 1.0);
    const double expect_rate = 0.5 / std::expm1(1.0);
    const double mean = 1.0 / rate;
    const double expect_mean = std::expm1(1.0) / 0.5;
    const double e1 = std::abs(rate - expect_rate) / expect_rate;
    const double e2 = std::abs(mean - expect_mean) / expect_mean;
    const bool pass = e1 < 1e-12 && e2 < 1e-12;
    return {9, "caballero-closed-forms", pass, fmt("rate rel err=%.2e, mean rel err=%.2e (<1e-12)", e1, e2)};
}

CriterionResult c10_cpp_event_driven() {
    const CppExp m{2.0, 1.0, 1.0};
    SimulationConfig cfg;
    cfg.scheme = Scheme::event_driven;
    cfg.n_paths = 100'000;
    cfg.seed = kSuiteSeed + 4;
    auto exits = simulate_cpp_two_sided_exit(m, 1.0, 1.0, cfg);
    const double expect = two_sided_exit(LevyModel{m}, 1.0, 1.0);
    const double z = std::abs(exits.frequency - expect) / exits.std_error;

    cfg.n_paths = 10'000;
    cfg.seed = kSuiteSeed + 5;
    auto sample = simulate_cpp_drawdown(m, 1.0, cfg);
    const double rate = drawdown_rate(LevyModel{m}, 1.0);
    auto ks = ks_exponential_test(sample, rate);
    const double printed = cpp_printed_rate(m, 1.0);

    const bool pass = z <= 3.0 && ks.p_value >= 0.01;
    return {10, "cpp-event-driven", pass,
            fmt("exit |z|=%.2f (<=3), KS p=%.3f (>=0.01); rate from W=%.6f, literature display=%.6f",
                z, ks.p_value, rate, printed)};
}

CriterionResult c11_dde_linear() {
    PhiFunction init;
    init.eval = [](double x) { return 0.5 * (x + 2.0); };
    init.lo = -1.0;
    init.hi = 0.0;
    auto phi = dde_solve(init, 1.0, 1.0, 5.0);
    double worst = 0.0;
    for (double x = 0.0; x <= 5.0; x += 0.01)
        worst = std::max(worst, std::abs(phi(x) - 0.5 * (x + 2.0)));
    return {11, "dde-method-of-steps", worst < 1e-12, fmt("max err=%.2e (<1e-12)", worst)};
}

CriterionResult c12_determinism() {
    RbmParams p{1.0, 1.0, 0.0, 1.0};
    SimulationConfig cfg;
    cfg.n_paths = 2000;
    cfg.dt = 1e-3;
    cfg.seed = 7;
    auto a = simulate_rbm_first_passage(p, cfg);
    cfg.n_workers = 2;
    auto b = simulate_rbm_first_passage(p, cfg);
    cfg.n_workers = 3;
    auto c = simulate_rbm_first_passage(p, cfg);

    SimulationConfig ecfg;
    ecfg.scheme = Scheme::event_driven;
    ecfg.n_paths = 5000;
    ecfg.seed = 11;
    auto d1 = simulate_cpp_drawdown(CppExp{2.0, 1.0, 1.0}, 1.0, ecfg);
    ecfg.n_workers = 4;
    auto d2 = simulate_cpp_drawdown(CppExp{2.0, 1.0, 1.0}, 1.0, ecfg);

    const bool pass = a.values == b.values && b.values == c.values &&
                      a.n_censored == b.n_censored && d1.values == d2.values;
    return {12, "determinism", pass,
            fmt("rbm workers 1/2/3 identical=%d, cpp workers 1/4 identical=%d",
                a.values == c.values, d1.values == d2.values)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& suite) {
    const bool analytic = suite == "analytic" || suite == "all";
    const bool mc = suite == "mc" || suite == "all";
    if (!analytic && !mc) throw std::invalid_argument("unknown suite: " + suite);
    std::vector<CriterionResult> out;
    if (analytic) out.push_back(c1_driftless_identity());
    if (mc) out.push_back(c2_perry_discrimination());
    if (mc) out.push_back(c3_drifted_rbm());
    if (analytic) out.push_back(c4_inversion_sanity());
    if (analytic) out.push_back(c5_constant_gamma_curves());
    if (analytic) out.push_back(c6_cross_route_rate());
    if (mc) out.push_back(c7_diffusion_drawdown_mc());
    if (analytic) out.push_back(c8_scale_identity());
    if (analytic) out.push_back(c9_caballero_closed_forms());
    if (mc) out.push_back(c10_cpp_event_driven());
    if (analytic) out.push_back(c11_dde_linear());
    if (mc) out.push_back(c12_determinism());
    return out;
}

}  // namespace passage
