#include <cmath>

#include <doctest.h>

#include "passage/levy.hpp"

using namespace passage;

namespace {
const LevyModel bm = BmDrift{1.0, 1.0};
const LevyModel cpp_m = CppExp{2.0, 1.0, 1.0};
const LevyModel cab = CaballeroChaumont{1.5};
}  // namespace

TEST_CASE("laplace exponents") {
    CHECK(levy_exponent(bm, 2.0) == doctest::Approx(4.0));
    // c theta - lambda theta/(jump_mu + theta) = 4 - 2/3
    CHECK(levy_exponent(cpp_m, 2.0) == doctest::Approx(4.0 - 2.0 / 3.0).epsilon(1e-14));
    // Gamma(theta+beta)/(Gamma(theta) Gamma(beta)) at theta=1, beta=1.5:
    // Gamma(2.5)/Gamma(1.5) = 1.5
    CHECK(levy_exponent(cab, 1.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("scale function values") {
    // BM: W(x) = (1 - e^{-2 mu x / sigma^2}) / mu
    CHECK(scale_w(bm, 1.0) == doctest::Approx(-std::expm1(-2.0)).epsilon(1e-14));
    CHECK(scale_w_prime(bm, 1.0) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
    // CPP with c=2, lambda=1, jump_mu=1: W(x) = (2 - e^{-x/2}) / 2
    CHECK(scale_w(cpp_m, 1.0) ==
          doctest::Approx((2.0 - std::exp(-0.5)) / 2.0).epsilon(1e-14));
    CHECK(scale_w_prime(cpp_m, 1.0) == doctest::Approx(0.25 * std::exp(-0.5)).epsilon(1e-14));
    // (1 - e^{-1})^{1/2}
    CHECK(scale_w(cab, 1.0) ==
          doctest::Approx(std::sqrt(-std::expm1(-1.0))).epsilon(1e-14));
    CHECK(scale_w(cab, 1.0) == doctest::Approx(0.79506).epsilon(1e-5));
}

TEST_CASE("scale functions satisfy the transform identity") {
    for (double theta : {0.5, 1.0, 3.0}) {
        for (const auto& m : {bm, cpp_m, cab}) {
            auto chk = scale_laplace_check(m, theta);
            CHECK(chk.rel_err < 1e-9);
        }
    }
}

TEST_CASE("derivatives match finite differences") {
    const double h = 1e-6;
    for (double x : {0.3, 1.0, 2.5}) {
        for (const auto& m : {bm, cpp_m, cab}) {
            double fd = (scale_w(m, x + h) - scale_w(m, x - h)) / (2.0 * h);
            CHECK(scale_w_prime(m, x) == doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("drawdown rates") {
    // 2/(e^2 - 1)
    CHECK(drawdown_rate(bm, 1.0) == doctest::Approx(0.3130352854993313).epsilon(1e-13));
    // (beta-1) e^{-delta} / (1 - e^{-delta}) = 1/(2(e-1))
    CHECK(drawdown_rate(cab, 1.0) == doctest::Approx(0.29098835343466321).epsilon(1e-12));
    CHECK(drawdown_survival_levy(bm, 1.0, 2.0) ==
          doctest::Approx(std::exp(-2.0 * 0.3130352854993313)).epsilon(1e-12));
    // rates fall as the allowed drawdown grows
    for (const auto& m : {bm, cpp_m, cab}) {
        CHECK(drawdown_rate(m, 2.0) < drawdown_rate(m, 0.5));
    }
}

TEST_CASE("the printed compound-Poisson rate disagrees with the derived one") {
    const CppExp p{2.0, 1.0, 1.0};
    const double derived = drawdown_rate(cpp_m, 1.0);
    const double printed = cpp_printed_rate(p, 1.0);
    CHECK(derived == doctest::Approx(0.5 * std::exp(-0.5) / (2.0 - std::exp(-0.5))));
    CHECK(printed == doctest::Approx(0.5 / (std::exp(0.5) - 1.0)).epsilon(1e-14));
    CHECK(std::abs(printed - derived) > 0.1);
}

TEST_CASE("two-sided exit") {
    // W(1)/W(2) = (1 - e^{-2})/(1 - e^{-4}) = 1/(1 + e^{-2})
    CHECK(two_sided_exit(bm, 1.0, 1.0) ==
          doctest::Approx(0.8807970779778823).epsilon(1e-13));
    for (const auto& m : {bm, cpp_m, cab}) {
        double p = two_sided_exit(m, 0.7, 1.3);
        CHECK(p > 0.0);
        CHECK(p < 1.0);
        CHECK(two_sided_exit(m, 1.4, 1.3) > p);  // more room below helps
    }
}

TEST_CASE("boundary behaviour at zero") {
    auto b = boundary_asymptotics(bm);
    CHECK(b.w_at_zero == 0.0);
    CHECK_FALSE(b.w_prime_at_zero_is_infinite);
    b = boundary_asymptotics(cpp_m);
    CHECK(b.w_at_zero == doctest::Approx(0.5));
    b = boundary_asymptotics(cab);
    CHECK(b.w_at_zero == 0.0);
    CHECK(b.w_prime_at_zero_is_infinite);
}

TEST_CASE("model validation") {
    CHECK_THROWS(validate(LevyModel{BmDrift{-1.0, 1.0}}));
    CHECK_THROWS(validate(LevyModel{BmDrift{1.0, 0.0}}));
    CHECK_THROWS(validate(LevyModel{CppExp{1.0, 2.0, 1.0}}));  // drifts to -inf
    CHECK_THROWS(validate(LevyModel{CaballeroChaumont{1.0}}));
    CHECK_THROWS(validate(LevyModel{CaballeroChaumont{2.0}}));
    CHECK_THROWS(scale_w(bm, 0.0));
    CHECK_THROWS(drawdown_rate(bm, -1.0));
}
