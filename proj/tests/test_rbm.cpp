#include <cmath>

#include <doctest.h>

#include "passage/rbm.hpp"

using namespace passage;

TEST_CASE("kappa roots") {
    // sqrt(2 * 0.5) = 1
    auto k = kappa_roots({0.0, 1.0, 0.0, 1.0}, 0.5);
    CHECK(k.kappa_minus == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(k.kappa_plus == doctest::Approx(1.0).epsilon(1e-14));

    k = kappa_roots({1.0, 1.0, 0.0, 1.0}, 0.0);
    CHECK(k.kappa_minus == doctest::Approx(0.0));
    CHECK(k.kappa_plus == doctest::Approx(2.0));

    // sqrt(1 + 8) = 3
    k = kappa_roots({1.0, 2.0, 0.0, 1.0}, 1.0);
    CHECK(k.kappa_minus == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(k.kappa_plus == doctest::Approx(1.0).epsilon(1e-14));

    SUBCASE("roots satisfy the quadratic") {
        RbmParams p{0.7, 1.3, 0.2, 0.5};
        for (double theta : {0.0, 0.3, 2.0, 50.0}) {
            auto kk = kappa_roots(p, theta);
            for (double kap : {kk.kappa_minus, kk.kappa_plus}) {
                double res = 0.5 * p.sigma * p.sigma * kap * kap - p.mu * kap - theta;
                CHECK(std::abs(res) < 1e-12 * std::max(1.0, theta));
            }
            CHECK(kk.kappa_minus <= kk.kappa_plus);
        }
    }

    CHECK_THROWS(kappa_roots({0.0, 0.0, 0.0, 1.0}, 1.0));
    CHECK_THROWS(kappa_roots({0.0, 1.0, 0.0, 1.0}, -1.0));
}

TEST_CASE("transform special values") {
    CHECK(rbm_lt({0.3, 1.2, 0.1, 2.0}, 0.0) == 1.0);
    CHECK(rbm_lt({0.3, 1.2, 0.1, 0.0}, 5.0) == 1.0);
    CHECK(rbm_lt_driftless(1.0, 1.0, 0.0) == doctest::Approx(1.0));

    // 1/cosh(1)
    CHECK(rbm_lt_driftless(1.0, 1.0, 0.5) == doctest::Approx(0.6480542736638855).epsilon(1e-12));
    CHECK(rbm_lt({0.0, 1.0, 0.0, 1.0}, 0.5) ==
          doctest::Approx(0.6480542736638855).epsilon(1e-12));
    // scale invariance in delta/sigma
    CHECK(rbm_lt_driftless(2.0, 2.0, 0.5) == doctest::Approx(rbm_lt_driftless(1.0, 1.0, 0.5)));
}

TEST_CASE("rival driftless formula and the discriminating gap") {
    CHECK(perry_lt_driftless(1.0, 0.0) == doctest::Approx(1.0));
    CHECK(perry_lt_driftless(1.0, 1.0) == doctest::Approx(0.6480542736638855).epsilon(1e-12));
    // at theta = 1 the two formulas differ by ~0.19
    CHECK(perry_lt_driftless(1.0, 2.0) == doctest::Approx(1.0 / std::cosh(std::sqrt(2.0))));
    CHECK(rbm_lt_driftless(1.0, 1.0, 1.0) == doctest::Approx(1.0 / std::cosh(std::sqrt(2.0))));
    CHECK(perry_lt_driftless(1.0, 1.0) - rbm_lt_driftless(1.0, 1.0, 1.0) > 0.18);
}

TEST_CASE("monotonicity and complete-monotonicity spot check") {
    RbmParams p{0.5, 1.5, 0.3, 1.0};
    double prev = rbm_lt(p, 1e-3);
    CHECK(prev <= 1.0);
    for (double theta = 0.1; theta < 20.0; theta += 0.37) {
        double cur = rbm_lt(p, theta);
        CHECK(cur < prev);
        prev = cur;
    }
    // second finite difference in theta is nonnegative
    const double h = 1e-3;
    for (double theta = 0.1; theta < 10.0; theta += 0.5) {
        double d2 = rbm_lt(p, theta - h) - 2.0 * rbm_lt(p, theta) + rbm_lt(p, theta + h);
        CHECK(d2 >= -1e-12);
    }
}

TEST_CASE("drift to zero recovers the driftless formula") {
    RbmParams p{1e-6, 1.0, 0.0, 1.0};
    for (double theta : {0.2, 1.0, 3.0}) {
        CHECK(std::abs(rbm_lt(p, theta) - rbm_lt_driftless(1.0, 1.0, theta)) < 1e-4);
    }
}

TEST_CASE("no overflow for extreme arguments") {
    RbmParams p{2.0, 0.1, 5.0, 50.0};
    double v = rbm_lt(p, 1e6);
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
}

TEST_CASE("complex evaluation agrees with real on the positive axis") {
    RbmParams p{1.0, 1.0, 0.5, 1.0};
    for (double theta : {0.3, 1.0, 4.0}) {
        auto z = rbm_lt(p, std::complex<double>(theta, 0.0));
        CHECK(z.real() == doctest::Approx(rbm_lt(p, theta)).epsilon(1e-13));
        CHECK(std::abs(z.imag()) < 1e-14);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(rbm_lt({0.0, -1.0, 0.0, 1.0}, 1.0));
    CHECK_THROWS(rbm_lt({0.0, 1.0, -0.1, 1.0}, 1.0));
    CHECK_THROWS(rbm_lt({0.0, 1.0, 0.0, -1.0}, 1.0));
    CHECK_THROWS(rbm_lt({0.0, 1.0, 0.0, 1.0}, -0.5));
    CHECK_THROWS(rbm_lt_driftless(0.0, 1.0, 1.0));
}
