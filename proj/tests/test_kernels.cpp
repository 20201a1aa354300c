#include <cmath>
#include <cstring>
#include <vector>

#include <doctest.h>

#include "passage/kernels.hpp"
#include "passage/rng.hpp"

using namespace passage;

namespace {

struct Batch {
    std::vector<double> x, z;
};

Batch random_batch(uint64_t seed, size_t n) {
    Rng rng(seed, 0);
    Batch b;
    b.x.resize(n);
    b.z.resize(n);
    for (size_t i = 0; i < n; ++i) {
        b.x[i] = 3.0 * (rng.next_uniform() - 0.3);
        b.z[i] = rng.next_normal();
    }
    return b;
}

}  // namespace

TEST_CASE("scalar reflect_abs semantics") {
    double x[4] = {0.5, -0.1, 2.0, 0.0};
    double z[4] = {1.0, -2.0, 0.0, 0.5};
    const double drift = 0.01, vol = 0.1, level = 1.9;
    double expect[4];
    for (int i = 0; i < 4; ++i) expect[i] = std::fabs((x[i] + drift) + vol * z[i]);
    uint64_t mask = kernels::scalar_kernels().reflect_abs(x, z, 4, drift, vol, level);
    for (int i = 0; i < 4; ++i) CHECK(x[i] == expect[i]);
    CHECK(mask == 0b0100);  // only lane 2 reaches 1.9
}

TEST_CASE("scalar xi_sign semantics") {
    double x[3] = {0.5, -0.5, 0.0};
    double z[3] = {0.0, 0.0, 0.0};
    // drift is added along sign(xi); vol contribution zero here
    kernels::scalar_kernels().xi_sign(x, z, 3, 0.25, 0.1, 10.0);
    CHECK(x[0] == 0.75);
    CHECK(x[1] == -0.75);
    CHECK(x[2] == 0.25);  // sign(0) treated as +
}

TEST_CASE("active kernels match scalar bit for bit") {
    const auto& scalar = kernels::scalar_kernels();
    const auto& active = kernels::active_kernels();
    for (uint64_t seed : {1ull, 2ull, 99ull}) {
        for (size_t n : {1ull, 3ull, 4ull, 7ull, 16ull, 33ull, 64ull}) {
            auto ref = random_batch(seed, n);
            auto alt = ref;
            uint64_t m1 = scalar.reflect_abs(ref.x.data(), ref.z.data(), n, 0.013, 0.07, 1.2);
            uint64_t m2 = active.reflect_abs(alt.x.data(), alt.z.data(), n, 0.013, 0.07, 1.2);
            CHECK(m1 == m2);
            CHECK(std::memcmp(ref.x.data(), alt.x.data(), n * sizeof(double)) == 0);

            ref = random_batch(seed + 7, n);
            alt = ref;
            m1 = scalar.xi_sign(ref.x.data(), ref.z.data(), n, 0.013, 0.07, 1.2);
            m2 = active.xi_sign(alt.x.data(), alt.z.data(), n, 0.013, 0.07, 1.2);
            CHECK(m1 == m2);
            CHECK(std::memcmp(ref.x.data(), alt.x.data(), n * sizeof(double)) == 0);
        }
    }
}

#if defined(__x86_64__)
TEST_CASE("avx2 kernels match scalar bit for bit when available") {
    if (!kernels::avx2_available()) return;
    const auto& scalar = kernels::scalar_kernels();
    const auto& avx2 = kernels::avx2_kernels();
    for (uint64_t seed : {11ull, 12ull}) {
        for (size_t n : {5ull, 8ull, 31ull, 64ull}) {
            auto ref = random_batch(seed, n);
            auto alt = ref;
            uint64_t m1 = scalar.reflect_abs(ref.x.data(), ref.z.data(), n, -0.02, 0.3, 0.9);
            uint64_t m2 = avx2.reflect_abs(alt.x.data(), alt.z.data(), n, -0.02, 0.3, 0.9);
            CHECK(m1 == m2);
            CHECK(std::memcmp(ref.x.data(), alt.x.data(), n * sizeof(double)) == 0);

            ref = random_batch(seed + 3, n);
            alt = ref;
            m1 = scalar.xi_sign(ref.x.data(), ref.z.data(), n, 0.05, 0.2, 1.5);
            m2 = avx2.xi_sign(alt.x.data(), alt.z.data(), n, 0.05, 0.2, 1.5);
            CHECK(m1 == m2);
            CHECK(std::memcmp(ref.x.data(), alt.x.data(), n * sizeof(double)) == 0);
        }
    }
}
#endif

TEST_CASE("hit mask covers exactly the lanes at or above level") {
    auto b = random_batch(42, 64);
    auto vals = b;
    uint64_t mask =
        kernels::active_kernels().reflect_abs(vals.x.data(), vals.z.data(), 64, 0.0, 1.0, 1.0);
    for (size_t i = 0; i < 64; ++i) {
        bool hit = vals.x[i] >= 1.0;
        CHECK(((mask >> i) & 1u) == (hit ? 1u : 0u));
    }
}
