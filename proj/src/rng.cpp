#include "passage/rng.hpp"

#include <array>

namespace passage {

namespace {

// 128-layer ziggurat tables for the standard normal (Marsaglia-Tsang
// layout, 31-bit integer comparisons).
struct ZigguratTables {
    std::array<uint32_t, 128> kn;
    std::array<double, 128> wn;
    std::array<double, 128> fn;

    ZigguratTables() {
        const double m1 = 2147483648.0;
        double dn = 3.442619855899;
        double tn = dn;
        const double vn = 9.91256303526217e-3;
        double q = vn / std::exp(-0.5 * dn * dn);
        kn[0] = static_cast<uint32_t>((dn / q) * m1);
        kn[1] = 0;
        wn[0] = q / m1;
        wn[127] = dn / m1;
        fn[0] = 1.0;
        fn[127] = std::exp(-0.5 * dn * dn);
        for (int i = 126; i >= 1; --i) {
            dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
            kn[i + 1] = static_cast<uint32_t>((dn / tn) * m1);
            tn = dn;
            fn[i] = std::exp(-0.5 * dn * dn);
            wn[i] = dn / m1;
        }
    }
};

const ZigguratTables zt;
constexpr double kTailStart = 3.442619855899;

}  // namespace

double Rng::normal_tail(double sign) {
    double x, y;
    do {
        x = -std::log(next_uniform()) / kTailStart;
        y = -std::log(next_uniform());
    } while (y + y < x * x);
    return sign * (kTailStart + x);
}

double Rng::next_normal() {
    for (;;) {
        const int32_t hz = static_cast<int32_t>(next_u64());
        const uint32_t iz = static_cast<uint32_t>(hz) & 127u;
        const uint32_t az = static_cast<uint32_t>(std::abs(static_cast<int64_t>(hz)));
        if (az < zt.kn[iz]) return hz * zt.wn[iz];
        if (iz == 0) return normal_tail(hz < 0 ? -1.0 : 1.0);
        const double x = hz * zt.wn[iz];
        if (zt.fn[iz] + next_uniform() * (zt.fn[iz - 1] - zt.fn[iz]) <
            std::exp(-0.5 * x * x))
            return x;
    }
}

}  // namespace passage
