#include "passage/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "passage/kernels.hpp"
#include "passage/rng.hpp"

namespace passage {

namespace {

constexpr double kCensored = std::numeric_limits<double>::quiet_NaN();
constexpr size_t kLanes = 16;

void check_config(const SimulationConfig& cfg, bool grid_scheme) {
    if (cfg.n_paths < 1) throw std::invalid_argument("SimulationConfig: n_paths must be >= 1");
    if (grid_scheme && !(cfg.dt > 0.0))
        throw std::invalid_argument("SimulationConfig: dt must be > 0");
    if (!(cfg.t_max > 0.0)) throw std::invalid_argument("SimulationConfig: t_max must be > 0");
    if (cfg.n_workers < 1)
        throw std::invalid_argument("SimulationConfig: n_workers must be >= 1");
}

// Runs `body(path, rng)` for every path index, chunked over workers.
template <typename Body>
void for_each_path(const SimulationConfig& cfg, Body body) {
    const uint64_t n = cfg.n_paths;
    const unsigned workers = static_cast<unsigned>(
        std::min<uint64_t>(cfg.n_workers, n));
    auto run_chunk = [&](uint64_t begin, uint64_t end) {
        for (uint64_t p = begin; p < end; ++p) {
            Rng rng(cfg.seed, p);
            body(p, rng);
        }
    };
    if (workers == 1) {
        run_chunk(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const uint64_t b = w * chunk;
        const uint64_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(run_chunk, b, e);
    }
    for (auto& t : pool) t.join();
}

EmpiricalSample finalize(std::vector<double>&& results, SampleKind kind,
                         const SimulationConfig& cfg, uint64_t domain_exits = 0) {
    EmpiricalSample s;
    s.kind = kind;
    s.config = cfg;
    s.n_total = results.size();
    s.n_domain_exits = domain_exits;
    s.values.reserve(results.size());
    for (double v : results) {
        if (std::isnan(v))
            ++s.n_censored;
        else
            s.values.push_back(v);
    }
    std::sort(s.values.begin(), s.values.end());
    return s;
}

// Lane-refilled batch driver for the RBM grid schemes. Each lane holds one
// in-flight path with its own stream; a finished lane immediately loads the
// next path from the chunk, so the SIMD kernel always runs full batches.
//
// Grid monitoring alone misses barrier excursions between grid points and
// biases the passage time up by O(sqrt(dt)); a Brownian-bridge crossing
// test conditional on the step endpoints removes that term, leaving O(dt).
// The test only fires within a few step standard deviations of the
// barrier, so it costs one multiply-compare per lane per step.
void rbm_chunk(const RbmParams& p, const SimulationConfig& cfg, uint64_t begin, uint64_t end,
               std::vector<double>& results) {
    const kernels::StepKernels& k = kernels::active_kernels();
    const kernels::StepFn step =
        cfg.scheme == Scheme::reflect_abs ? k.reflect_abs : k.xi_sign;
    const double drift_dt = p.mu * cfg.dt;
    const double vol_sqdt = p.sigma * std::sqrt(cfg.dt);
    const double level = p.x + p.delta;
    const double var_dt = p.sigma * p.sigma * cfg.dt;
    // exp(-2 d1 d2 / var_dt) < 4e-18 outside this window
    const double bridge_window = 20.0 * var_dt;
    const uint64_t max_steps = static_cast<uint64_t>(cfg.t_max / cfg.dt);

    double x[kLanes];
    double prev[kLanes];
    double z[kLanes];
    bool hit[kLanes];
    uint64_t steps[kLanes];
    uint64_t path[kLanes];
    std::vector<Rng> rng;
    rng.reserve(kLanes);

    uint64_t next = begin;
    size_t active = 0;
    auto load = [&](size_t lane) {
        x[lane] = p.x;
        steps[lane] = 0;
        path[lane] = next;
        if (lane < rng.size())
            rng[lane] = Rng(cfg.seed, next);
        else
            rng.emplace_back(cfg.seed, next);
        ++next;
    };
    while (active < kLanes && next < end) load(active++);

    while (active > 0) {
        for (size_t i = 0; i < active; ++i) {
            z[i] = rng[i].next_normal();
            prev[i] = x[i];
        }
        const uint64_t hits = step(x, z, active, drift_dt, vol_sqdt, level);
        for (size_t i = 0; i < active; ++i) {
            ++steps[i];
            hit[i] = (hits >> i) & 1u;
            if (hit[i]) continue;
            // bridge crossing of +level; for the signed scheme also -level
            const double d1 = level - prev[i];
            const double d2 = level - x[i];
            if (d1 * d2 < bridge_window &&
                rng[i].next_uniform() < std::exp(-2.0 * d1 * d2 / var_dt)) {
                hit[i] = true;
                continue;
            }
            const double m1 = level + prev[i];
            const double m2 = level + x[i];
            if (m1 * m2 < bridge_window &&
                rng[i].next_uniform() < std::exp(-2.0 * m1 * m2 / var_dt)) {
                hit[i] = true;
            }
        }
        for (size_t i = 0; i < active;) {
            const bool censored = !hit[i] && steps[i] >= max_steps;
            if (!hit[i] && !censored) {
                ++i;
                continue;
            }
            results[path[i]] = hit[i] ? static_cast<double>(steps[i]) * cfg.dt : kCensored;
            if (next < end) {
                load(i);
                hit[i] = false;
                ++i;
            } else {
                // retire the lane: swap in the last active one
                --active;
                x[i] = x[active];
                steps[i] = steps[active];
                path[i] = path[active];
                rng[i] = rng[active];
                hit[i] = hit[active];
            }
        }
    }
}

}  // namespace

EmpiricalSample simulate_rbm_first_passage(const RbmParams& p, const SimulationConfig& cfg) {
    validate(p);
    check_config(cfg, true);
    if (cfg.scheme == Scheme::event_driven)
        throw std::invalid_argument("simulate_rbm_first_passage: grid schemes only");

    std::vector<double> results(cfg.n_paths, 0.0);
    if (p.delta > 0.0) {
        const unsigned workers =
            static_cast<unsigned>(std::min<uint64_t>(cfg.n_workers, cfg.n_paths));
        if (workers <= 1) {
            rbm_chunk(p, cfg, 0, cfg.n_paths, results);
        } else {
            std::vector<std::thread> pool;
            const uint64_t chunk = (cfg.n_paths + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const uint64_t b = w * chunk;
                const uint64_t e = std::min<uint64_t>(cfg.n_paths, b + chunk);
                if (b >= e) break;
                pool.emplace_back(rbm_chunk, std::cref(p), std::cref(cfg), b, e,
                                  std::ref(results));
            }
            for (auto& t : pool) t.join();
        }
    }
    return finalize(std::move(results), SampleKind::first_passage_time, cfg);
}

EmpiricalSample simulate_diffusion_drawdown(const DiffusionSpec& d, double delta,
                                            const SimulationConfig& cfg) {
    check_config(cfg, true);
    if (!(delta > 0.0))
        throw std::invalid_argument("simulate_diffusion_drawdown: delta must be > 0");
    if (cfg.scheme == Scheme::event_driven)
        throw std::invalid_argument("simulate_diffusion_drawdown: grid schemes only");

    const double sqdt = std::sqrt(cfg.dt);
    const uint64_t max_steps = static_cast<uint64_t>(cfg.t_max / cfg.dt);
    std::vector<double> results(cfg.n_paths, kCensored);
    std::vector<uint8_t> exited(cfg.n_paths, 0);

    for_each_path(cfg, [&](uint64_t pidx, Rng& rng) {
        double x = 0.0;
        double m = 0.0;
        for (uint64_t s = 0; s < max_steps; ++s) {
            x += d.mu(x) * cfg.dt + d.sigma(x) * sqdt * rng.next_normal();
            if (x < d.left_endpoint) {
                if (d.reflecting_left) {
                    x = 2.0 * d.left_endpoint - x;
                } else {
                    exited[pidx] = 1;
                }
            }
            if (x > m) m = x;
            if (m - x >= delta) {
                results[pidx] = m;
                return;
            }
        }
    });

    uint64_t domain_exits = 0;
    for (uint8_t e : exited) domain_exits += e;
    return finalize(std::move(results), SampleKind::drawdown_max, cfg, domain_exits);
}

EmpiricalSample simulate_cpp_drawdown(const CppExp& m, double delta,
                                      const SimulationConfig& cfg) {
    validate(LevyModel{m});
    check_config(cfg, false);
    if (cfg.scheme != Scheme::event_driven)
        throw std::invalid_argument("simulate_cpp_drawdown: event_driven scheme required");
    if (!(delta > 0.0))
        throw std::invalid_argument("simulate_cpp_drawdown: delta must be > 0");

    std::vector<double> results(cfg.n_paths, kCensored);
    for_each_path(cfg, [&](uint64_t pidx, Rng& rng) {
        // Between jumps the path is a line of slope c: the drawdown gap
        // shrinks to zero, after which the maximum advances. Crossings of
        // the drawdown level can only happen at jump epochs, so each
        // segment is resolved in closed form with no discretization error.
        double gap = 0.0;  // current drawdown M - X
        double max = 0.0;  // running maximum
        double t = 0.0;
        while (t < cfg.t_max) {
            const double wait = rng.next_exponential(m.lambda);
            t += wait;
            if (t >= cfg.t_max) return;  // censored
            const double close_time = gap / m.c;
            if (wait >= close_time) {
                max += m.c * (wait - close_time);
                gap = 0.0;
            } else {
                gap -= m.c * wait;
            }
            gap += rng.next_exponential(m.jump_mu);
            if (gap >= delta) {
                results[pidx] = max;
                return;
            }
        }
    });
    return finalize(std::move(results), SampleKind::drawdown_max, cfg);
}

ExitFrequency simulate_cpp_two_sided_exit(const CppExp& m, double x, double y,
                                          const SimulationConfig& cfg) {
    validate(LevyModel{m});
    check_config(cfg, false);
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("simulate_cpp_two_sided_exit: x and y must be > 0");

    std::vector<uint8_t> top(cfg.n_paths, 0);
    for_each_path(cfg, [&](uint64_t pidx, Rng& rng) {
        double pos = 0.0;
        double t = 0.0;
        while (t < cfg.t_max) {
            const double wait = rng.next_exponential(m.lambda);
            const double time_to_top = (y - pos) / m.c;
            if (wait >= time_to_top) {
                top[pidx] = 1;  // creeps up to y before the next jump
                return;
            }
            t += wait;
            pos += m.c * wait - rng.next_exponential(m.jump_mu);
            if (pos <= -x) return;  // jumped below -x
        }
    });

    ExitFrequency out;
    out.n_total = cfg.n_paths;
    for (uint8_t v : top) out.n_top += v;
    out.frequency = static_cast<double>(out.n_top) / static_cast<double>(out.n_total);
    out.std_error =
        std::sqrt(out.frequency * (1.0 - out.frequency) / static_cast<double>(out.n_total));
    return out;
}

LtEstimate empirical_lt(const EmpiricalSample& s, double theta) {
    if (s.kind != SampleKind::first_passage_time)
        throw std::invalid_argument("empirical_lt: needs a first-passage sample");
    if (!(theta >= 0.0)) throw std::invalid_argument("empirical_lt: theta must be >= 0");
    if (s.n_total == 0) throw std::invalid_argument("empirical_lt: empty sample");
    const double n = static_cast<double>(s.n_total);
    double sum = 0.0, sumsq = 0.0;
    for (double v : s.values) {
        const double c = std::exp(-theta * v);
        sum += c;
        sumsq += c * c;
    }
    const double mean = sum / n;
    const double var = std::max(0.0, sumsq / n - mean * mean);
    LtEstimate out;
    out.estimate = mean;
    out.std_error = std::sqrt(var / n);
    out.censored_bound =
        static_cast<double>(s.n_censored) * std::exp(-theta * s.config.t_max) / n;
    return out;
}

double kolmogorov_survival(double t) {
    if (t <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 200; ++k) {
        const double term = std::exp(-2.0 * k * k * t * t);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-300) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_exponential_test(const EmpiricalSample& s, double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("ks_exponential_test: rate must be > 0");
    const uint64_t n = s.values.size();
    if (n < 35) throw std::invalid_argument("ks_exponential_test: need n >= 35");
    double d = 0.0;
    for (uint64_t i = 0; i < n; ++i) {
        const double v = s.values[i];
        if (!(v >= 0.0))
            throw std::invalid_argument("ks_exponential_test: sample values must be >= 0");
        const double cdf = -std::expm1(-rate * v);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, cdf - lo, hi - cdf});
    }
    KsResult out;
    out.statistic = d;
    out.n = n;
    out.p_value = kolmogorov_survival(std::sqrt(static_cast<double>(n)) * d);
    return out;
}

}  // namespace passage
