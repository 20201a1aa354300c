// Inner-loop step kernels for the Monte Carlo engine.
//
// Scalar reference implementations plus SIMD variants (AVX2 on x86-64,
// NEON on aarch64) selected at runtime. All variants perform elementwise
// identical IEEE operations (no FMA contraction), so scalar and SIMD
// results are bit-identical; the test suite asserts this.
#pragma once

#include <cstddef>
#include <cstdint>

namespace passage::kernels {

// reflect_abs: x[i] <- |x[i] + drift_dt + vol_sqdt * z[i]|.
// xi_sign:     xi[i] <- xi[i] + sign(xi[i]) * mu_dt + vol_sqdt * z[i].
// Both return a bitmask of lanes whose (absolute) value reached `level`.
// n must be <= 64.
using StepFn = uint64_t (*)(double* x, const double* z, size_t n, double drift_dt,
                            double vol_sqdt, double level);

struct StepKernels {
    const char* name;
    StepFn reflect_abs;
    StepFn xi_sign;
};

const StepKernels& scalar_kernels();

// Best available variant for this CPU. The environment variable
// PASSAGE_KERNELS=scalar forces the reference implementation.
const StepKernels& active_kernels();

#if defined(__x86_64__)
bool avx2_available();
const StepKernels& avx2_kernels();
#endif

}  // namespace passage::kernels
