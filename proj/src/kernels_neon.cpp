// NEON variants of the step kernels for aarch64. Same operation order as
// the scalar reference; bit-identical lanes.
#include "passage/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace passage::kernels::neon {

namespace {

uint64_t reflect_abs_neon(double* x, const double* z, size_t n, double drift_dt,
                          double vol_sqdt, double level) {
    const float64x2_t vdrift = vdupq_n_f64(drift_dt);
    const float64x2_t vvol = vdupq_n_f64(vol_sqdt);
    const float64x2_t vlevel = vdupq_n_f64(level);
    uint64_t hits = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vx = vld1q_f64(x + i);
        float64x2_t vz = vld1q_f64(z + i);
        float64x2_t t = vaddq_f64(vaddq_f64(vx, vdrift), vmulq_f64(vvol, vz));
        t = vabsq_f64(t);
        vst1q_f64(x + i, t);
        uint64x2_t ge = vcgeq_f64(t, vlevel);
        if (vgetq_lane_u64(ge, 0)) hits |= uint64_t{1} << i;
        if (vgetq_lane_u64(ge, 1)) hits |= uint64_t{1} << (i + 1);
    }
    for (; i < n; ++i) {
        const double t = std::fabs((x[i] + drift_dt) + vol_sqdt * z[i]);
        x[i] = t;
        if (t >= level) hits |= uint64_t{1} << i;
    }
    return hits;
}

uint64_t xi_sign_neon(double* x, const double* z, size_t n, double mu_dt, double vol_sqdt,
                      double level) {
    const float64x2_t vmu = vdupq_n_f64(mu_dt);
    const float64x2_t vvol = vdupq_n_f64(vol_sqdt);
    const float64x2_t vlevel = vdupq_n_f64(level);
    const uint64x2_t signmask = vdupq_n_u64(0x8000000000000000ULL);
    uint64_t hits = 0;
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vx = vld1q_f64(x + i);
        float64x2_t vz = vld1q_f64(z + i);
        uint64x2_t signs = vandq_u64(vreinterpretq_u64_f64(vx), signmask);
        float64x2_t drift =
            vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(vmu), signs));
        float64x2_t t = vaddq_f64(vaddq_f64(vx, drift), vmulq_f64(vvol, vz));
        vst1q_f64(x + i, t);
        uint64x2_t ge = vcgeq_f64(vabsq_f64(t), vlevel);
        if (vgetq_lane_u64(ge, 0)) hits |= uint64_t{1} << i;
        if (vgetq_lane_u64(ge, 1)) hits |= uint64_t{1} << (i + 1);
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

const StepKernels& kernels() {
    static const StepKernels k{"neon", reflect_abs_neon, xi_sign_neon};
    return k;
}

}  // namespace passage::kernels::neon

#endif  // __aarch64__
