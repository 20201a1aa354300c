// AVX2 variants of the step kernels. Compiled with -mavx2 in its own TU;
// only reached after a runtime cpuid check. Multiplies and adds mirror the
// scalar reference exactly (no FMA), so lanes are bit-identical to scalar.
#include "passage/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>

namespace passage::kernels {

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

namespace {

uint64_t reflect_abs_avx2(double* x, const double* z, size_t n, double drift_dt,
                          double vol_sqdt, double level) {
    const __m256d vdrift = _mm256_set1_pd(drift_dt);
    const __m256d vvol = _mm256_set1_pd(vol_sqdt);
    const __m256d vlevel = _mm256_set1_pd(level);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
    uint64_t hits = 0;
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vz = _mm256_loadu_pd(z + i);
        __m256d t = _mm256_add_pd(_mm256_add_pd(vx, vdrift), _mm256_mul_pd(vvol, vz));
        t = _mm256_and_pd(t, absmask);
        _mm256_storeu_pd(x + i, t);
        const int m = _mm256_movemask_pd(_mm256_cmp_pd(t, vlevel, _CMP_GE_OQ));
        hits |= static_cast<uint64_t>(m) << i;
    }
    for (; i < n; ++i) {
        const double t = std::fabs((x[i] + drift_dt) + vol_sqdt * z[i]);
        x[i] = t;
        if (t >= level) hits |= uint64_t{1} << i;
    }
    return hits;
}

uint64_t xi_sign_avx2(double* x, const double* z, size_t n, double mu_dt, double vol_sqdt,
                      double level) {
    const __m256d vmu = _mm256_set1_pd(mu_dt);
    const __m256d vvol = _mm256_set1_pd(vol_sqdt);
    const __m256d vlevel = _mm256_set1_pd(level);
    const __m256d signmask = _mm256_set1_pd(-0.0);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
    uint64_t hits = 0;
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vz = _mm256_loadu_pd(z + i);
        // sign(x) * mu_dt realized as flipping mu_dt's sign bit by x's.
        __m256d drift = _mm256_xor_pd(vmu, _mm256_and_pd(vx, signmask));
        __m256d t = _mm256_add_pd(_mm256_add_pd(vx, drift), _mm256_mul_pd(vvol, vz));
        _mm256_storeu_pd(x + i, t);
        const __m256d at = _mm256_and_pd(t, absmask);
        const int m = _mm256_movemask_pd(_mm256_cmp_pd(at, vlevel, _CMP_GE_OQ));
        hits |= static_cast<uint64_t>(m) << i;
    }
    for (; i < n; ++i) {
        const double drift = std::signbit(x[i]) ? -mu_dt : mu_dt;
        const double t = (x[i] + drift) + vol_sqdt * z[i];
        x[i] = t;
        if (std::fabs(t) >= level) hits |= uint64_t{1} << i;
    }
    return hits;
}

}  // namespace

const StepKernels& avx2_kernels() {
    static const StepKernels k{"avx2", reflect_abs_avx2, xi_sign_avx2};
    return k;
}

}  // namespace passage::kernels

#endif  // __x86_64__
