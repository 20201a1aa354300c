// Simulation oracles: reflected-BM first passage, diffusion drawdown,
// event-driven compound-Poisson paths, empirical Laplace transforms and a
// one-sample Kolmogorov-Smirnov test against the exponential law.
//
// Determinism contract: every path draws from its own stream keyed by
// (seed, path index), so a fixed (seed, config) reproduces bit-identical
// samples regardless of worker count or SIMD width.
#pragma once

#include <cstdint>
#include <vector>

#include "passage/drawdown.hpp"
#include "passage/levy.hpp"
#include "passage/rbm.hpp"

namespace passage {

enum class Scheme {
    reflect_abs,   // X <- |X + mu dt + sigma sqrt(dt) Z|
    xi_sign,       // Euler on d(xi) = mu sign(xi) dt + sigma dB, X = |xi|
    event_driven,  // CppExp only, exact between jump epochs
};

struct SimulationConfig {
    uint64_t n_paths = 10000;
    double dt = 1e-3;        // grid schemes only
    double t_max = 1000.0;   // censoring horizon
    uint64_t seed = 0;
    Scheme scheme = Scheme::reflect_abs;
    unsigned n_workers = 1;
};

enum class SampleKind { first_passage_time, drawdown_max };

struct EmpiricalSample {
    std::vector<double> values;  // sorted ascending, uncensored draws only
    uint64_t n_total = 0;
    uint64_t n_censored = 0;
    uint64_t n_domain_exits = 0;  // diffusion drawdown: excursions left of -a
    SampleKind kind = SampleKind::first_passage_time;
    SimulationConfig config;

    double censoring_fraction() const {
        return n_total ? static_cast<double>(n_censored) / static_cast<double>(n_total) : 0.0;
    }
    // Run-quality gate: more than 0.1% censored paths.
    bool excessive_censoring() const { return censoring_fraction() > 1e-3; }
};

EmpiricalSample simulate_rbm_first_passage(const RbmParams& p, const SimulationConfig& cfg);

EmpiricalSample simulate_diffusion_drawdown(const DiffusionSpec& d, double delta,
                                            const SimulationConfig& cfg);

EmpiricalSample simulate_cpp_drawdown(const CppExp& m, double delta,
                                      const SimulationConfig& cfg);

struct ExitFrequency {
    uint64_t n_top = 0;
    uint64_t n_total = 0;
    double frequency = 0.0;
    double std_error = 0.0;
};

// Frequency of first exit from [-x, y] through the top, exact event-driven paths.
ExitFrequency simulate_cpp_two_sided_exit(const CppExp& m, double x, double y,
                                          const SimulationConfig& cfg);

struct LtEstimate {
    double estimate;        // mean of e^{-theta v}, censored paths contributing 0
    double std_error;       // CLT standard error
    double censored_bound;  // additive upper-bias bound n_cens e^{-theta t_max} / n
};

LtEstimate empirical_lt(const EmpiricalSample& s, double theta);

struct KsResult {
    double statistic;
    double p_value;
    uint64_t n;
};

// One-sample KS against CDF 1 - e^{-rate x}; asymptotic Kolmogorov p-value.
KsResult ks_exponential_test(const EmpiricalSample& s, double rate);

// Survival function of the Kolmogorov distribution, Q(t) = 2 sum (-1)^{k-1} e^{-2 k^2 t^2}.
double kolmogorov_survival(double t);

}  // namespace passage
