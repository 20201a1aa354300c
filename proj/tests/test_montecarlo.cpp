#include <cmath>

#include <doctest.h>

#include "passage/montecarlo.hpp"
#include "passage/rng.hpp"

using namespace passage;

namespace {

DiffusionSpec bm_spec(double c) {
    DiffusionSpec d;
    d.mu = [c](double) { return c; };
    d.sigma = [](double) { return 1.0; };
    d.description = "BM with constant drift";
    return d;
}

}  // namespace

TEST_CASE("generator statistics") {
    Rng rng(123, 0);
    const int n = 1'000'000;
    double s1 = 0, s2 = 0, s4 = 0, su = 0, se = 0;
    for (int i = 0; i < n; ++i) {
        double z = rng.next_normal();
        s1 += z;
        s2 += z * z;
        s4 += z * z * z * z;
        su += rng.next_uniform();
        se += rng.next_exponential(2.0);
    }
    CHECK(s1 / n == doctest::Approx(0.0).epsilon(0.005).scale(1.0));
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(s4 / n == doctest::Approx(3.0).epsilon(0.03));
    CHECK(su / n == doctest::Approx(0.5).epsilon(0.005));
    CHECK(se / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("streams are decorrelated and reproducible") {
    Rng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
    bool same_ab = true, same_ac = true, same_ad = true;
    for (int i = 0; i < 64; ++i) {
        uint64_t va = a.next_u64();
        same_ab = same_ab && va == b.next_u64();
        same_ac = same_ac && va == c.next_u64();
        same_ad = same_ad && va == d.next_u64();
    }
    CHECK(same_ab);
    CHECK_FALSE(same_ac);
    CHECK_FALSE(same_ad);
}

TEST_CASE("rbm first passage: trivial and deterministic cases") {
    SimulationConfig cfg;
    cfg.n_paths = 100;
    cfg.dt = 1e-3;
    cfg.seed = 5;

    SUBCASE("delta = 0 means instant passage") {
        auto s = simulate_rbm_first_passage({0.5, 1.0, 0.0, 0.0}, cfg);
        CHECK(s.values.size() == 100);
        for (double v : s.values) CHECK(v == 0.0);
    }
    SUBCASE("same seed reproduces; different seed does not") {
        RbmParams p{0.0, 1.0, 0.0, 1.0};
        auto s1 = simulate_rbm_first_passage(p, cfg);
        auto s2 = simulate_rbm_first_passage(p, cfg);
        CHECK(s1.values == s2.values);
        cfg.seed = 6;
        auto s3 = simulate_rbm_first_passage(p, cfg);
        CHECK(s1.values != s3.values);
    }
    SUBCASE("worker count does not change the sample") {
        RbmParams p{1.0, 1.0, 0.0, 1.0};
        cfg.n_paths = 997;  // deliberately not divisible
        auto s1 = simulate_rbm_first_passage(p, cfg);
        cfg.n_workers = 3;
        auto s2 = simulate_rbm_first_passage(p, cfg);
        CHECK(s1.values == s2.values);
        CHECK(s1.n_censored == s2.n_censored);
    }
}

TEST_CASE("rbm transform estimate matches the closed form") {
    RbmParams p{0.0, 1.0, 0.0, 1.0};
    SimulationConfig cfg;
    cfg.n_paths = 20'000;
    cfg.dt = 1e-3;
    cfg.seed = 101;
    auto s = simulate_rbm_first_passage(p, cfg);
    CHECK_FALSE(s.excessive_censoring());
    auto lt = empirical_lt(s, 0.5);
    // 1/cosh(1) up to Monte Carlo noise plus barrier-monitoring bias
    CHECK(std::abs(lt.estimate - 0.6480542736638855) < 3.0 * lt.std_error + 0.01);

    SUBCASE("both grid schemes estimate the same quantity") {
        cfg.scheme = Scheme::xi_sign;
        cfg.seed = 102;
        auto s2 = simulate_rbm_first_passage(p, cfg);
        auto lt2 = empirical_lt(s2, 0.5);
        CHECK(std::abs(lt.estimate - lt2.estimate) <
              3.0 * std::hypot(lt.std_error, lt2.std_error) + 0.01);
    }
    SUBCASE("coarser grids overshoot the passage time") {
        // bridge crossing detection leaves an O(dt) upward bias in tau
        // (hits are stamped at the end of the step), visible at dt = 0.1
        cfg.dt = 0.1;
        cfg.seed = 103;
        auto coarse = simulate_rbm_first_passage(p, cfg);
        auto ltc = empirical_lt(coarse, 0.5);
        CHECK(ltc.estimate < 0.6480542736638855 - 0.008);
        CHECK(std::abs(ltc.estimate - 0.6480542736638855) >
              std::abs(lt.estimate - 0.6480542736638855));
    }
}

TEST_CASE("empirical transform bookkeeping") {
    EmpiricalSample s;
    s.values = {1.0, 1.0, 1.0};
    s.n_total = 4;
    s.n_censored = 1;
    s.config.t_max = 10.0;
    auto lt = empirical_lt(s, 2.0);
    // censored path contributes zero to the mean
    CHECK(lt.estimate == doctest::Approx(0.75 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(lt.censored_bound == doctest::Approx(0.25 * std::exp(-20.0)).epsilon(1e-12));
    CHECK(lt.std_error > 0.0);
    CHECK(s.censoring_fraction() == doctest::Approx(0.25));
    CHECK(s.excessive_censoring());
    CHECK_THROWS(empirical_lt(s, -1.0));
}

TEST_CASE("diffusion drawdown sampler") {
    SimulationConfig cfg;
    cfg.n_paths = 5'000;
    cfg.dt = 1e-3;
    cfg.seed = 21;
    SUBCASE("driftless: maximum is exponential with mean delta") {
        auto s = simulate_diffusion_drawdown(bm_spec(0.0), 1.0, cfg);
        CHECK_FALSE(s.excessive_censoring());
        double mean = 0.0;
        for (double v : s.values) mean += v;
        mean /= static_cast<double>(s.values.size());
        CHECK(mean == doctest::Approx(1.0).epsilon(0.08));
        auto ks = ks_exponential_test(s, 1.0);
        CHECK(ks.statistic < 0.05);  // loose: Euler discretization bias is real
    }
    SUBCASE("left boundary accounting") {
        auto spec = bm_spec(0.0);
        spec.left_endpoint = -0.2;
        auto s = simulate_diffusion_drawdown(spec, 1.0, cfg);
        CHECK(s.n_domain_exits > 0);  // excursions past -0.2 are flagged
        spec.reflecting_left = true;
        auto r = simulate_diffusion_drawdown(spec, 1.0, cfg);
        CHECK(r.n_domain_exits == 0);
    }
    SUBCASE("worker determinism") {
        auto s1 = simulate_diffusion_drawdown(bm_spec(1.0), 0.5, cfg);
        cfg.n_workers = 4;
        auto s2 = simulate_diffusion_drawdown(bm_spec(1.0), 0.5, cfg);
        CHECK(s1.values == s2.values);
    }
}

TEST_CASE("compound-Poisson drawdown sampler") {
    const CppExp m{2.0, 1.0, 1.0};
    SimulationConfig cfg;
    cfg.scheme = Scheme::event_driven;
    cfg.n_paths = 5'000;
    cfg.seed = 31;
    SUBCASE("maximum matches the scale-function rate") {
        auto s = simulate_cpp_drawdown(m, 1.0, cfg);
        CHECK_FALSE(s.excessive_censoring());
        const double rate = drawdown_rate(LevyModel{m}, 1.0);
        double mean = 0.0;
        for (double v : s.values) {
            CHECK(v > 0.0);  // the path creeps upward before the first jump
            mean += v;
        }
        mean /= static_cast<double>(s.values.size());
        const double expect = 1.0 / rate;
        CHECK(std::abs(mean - expect) < 5.0 * expect / std::sqrt(5000.0));
    }
    SUBCASE("vanishing jump rate censors everything") {
        CppExp quiet{2.0, 1e-9, 1.0};
        cfg.n_paths = 50;
        auto s = simulate_cpp_drawdown(quiet, 1.0, cfg);
        CHECK(s.n_censored == 50);
        CHECK(s.values.empty());
    }
    SUBCASE("grid scheme is rejected") {
        cfg.scheme = Scheme::reflect_abs;
        CHECK_THROWS(simulate_cpp_drawdown(m, 1.0, cfg));
    }
}

TEST_CASE("compound-Poisson two-sided exit") {
    const CppExp m{2.0, 1.0, 1.0};
    SimulationConfig cfg;
    cfg.scheme = Scheme::event_driven;
    cfg.n_paths = 20'000;
    cfg.seed = 41;
    auto exits = simulate_cpp_two_sided_exit(m, 1.0, 1.0, cfg);
    const double expect = two_sided_exit(LevyModel{m}, 1.0, 1.0);
    CHECK(std::abs(exits.frequency - expect) < 4.0 * exits.std_error);
    CHECK(exits.n_total == 20'000);
}

TEST_CASE("ks test behaviour") {
    EmpiricalSample s;
    const int n = 1000;
    // exact exponential quantiles: the statistic stays near its floor
    for (int i = 1; i <= n; ++i)
        s.values.push_back(-std::log(1.0 - static_cast<double>(i) / (n + 1)));
    s.n_total = n;
    auto ks = ks_exponential_test(s, 1.0);
    CHECK(ks.p_value > 0.5);
    // a 30% rate error is decisively rejected at this n
    auto bad = ks_exponential_test(s, 1.3);
    CHECK(bad.p_value < 1e-6);

    CHECK(kolmogorov_survival(0.0) == 1.0);
    // classic critical point: Q(1.36) ~ 0.049
    CHECK(kolmogorov_survival(1.36) == doctest::Approx(0.049).epsilon(0.02));
    CHECK(kolmogorov_survival(3.0) < 1e-6);

    EmpiricalSample tiny;
    tiny.values = {1.0};
    tiny.n_total = 1;
    CHECK_THROWS(ks_exponential_test(tiny, 1.0));
    CHECK_THROWS(ks_exponential_test(s, 0.0));
}

TEST_CASE("configuration validation") {
    SimulationConfig cfg;
    cfg.n_paths = 0;
    CHECK_THROWS(simulate_rbm_first_passage({0.0, 1.0, 0.0, 1.0}, cfg));
    cfg.n_paths = 10;
    cfg.dt = 0.0;
    CHECK_THROWS(simulate_rbm_first_passage({0.0, 1.0, 0.0, 1.0}, cfg));
    cfg.dt = 1e-3;
    cfg.scheme = Scheme::event_driven;
    CHECK_THROWS(simulate_rbm_first_passage({0.0, 1.0, 0.0, 1.0}, cfg));
    CHECK_THROWS(simulate_diffusion_drawdown(bm_spec(0.0), -1.0, cfg));
}
