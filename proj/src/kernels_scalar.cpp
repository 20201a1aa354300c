#include "passage/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace passage::kernels {

namespace {

uint64_t reflect_abs_scalar(double* x, const double* z, size_t n, double drift_dt,
                            double vol_sqdt, double level) {
    uint64_t hits = 0;
    for (size_t i = 0; i < n; ++i) {
        const double t = std::fabs((x[i] + drift_dt) + vol_sqdt * z[i]);
        x[i] = t;
        if (t >= level) hits |= uint64_t{1} << i;
    }
    return hits;
}

uint64_t xi_sign_scalar(double* x, const double* z, size_t n, double mu_dt,
                        double vol_sqdt, double level) {
    uint64_t hits = 0;
    for (size_t i = 0; i < n; ++i) {
        const double drift = std::signbit(x[i]) ? -mu_dt : mu_dt;
        const double t = (x[i] + drift) + vol_sqdt * z[i];
        x[i] = t;
        if (std::fabs(t) >= level) hits |= uint64_t{1} << i;
    }
    return hits;
}

}  // namespace

const StepKernels& scalar_kernels() {
    static const StepKernels k{"scalar", reflect_abs_scalar, xi_sign_scalar};
    return k;
}

#if defined(__aarch64__)
namespace neon {
const StepKernels& kernels();
}
#endif

const StepKernels& active_kernels() {
    static const StepKernels* chosen = []() -> const StepKernels* {
        const char* env = std::getenv("PASSAGE_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
#if defined(__x86_64__)
        if (avx2_available()) return &avx2_kernels();
#elif defined(__aarch64__)
        return &neon::kernels();
#endif
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace passage::kernels
