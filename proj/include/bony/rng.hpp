#pragma once

#include <cstdint>

#include "bony/common.hpp"

namespace bony {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based generator: value i of stream s is a pure function of
// (seed, s, i), so parallel and serial sweeps produce identical numbers.
class CounterRng {
public:
    CounterRng(uint64_t seed, uint64_t stream)
        : key_(splitmix64(splitmix64(seed + 0x632BE59BD9B4E019ULL) ^
                          (stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL))) {}

    uint64_t bits(uint64_t counter) const {
        return splitmix64(key_ ^ splitmix64(counter * 0xA24BAED4963EE407ULL + 1));
    }

    // Uniform in [0,1).
    double uniform(uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo,hi).
    double uniform(uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }

    // Uniform point in the closed unit ball of R^d (rejection from the cube).
    Vec in_unit_ball(uint64_t counter, int d) const {
        Vec x(d);
        uint64_t sub = 0;
        for (;;) {
            for (int i = 0; i < d; ++i)
                x[i] = 2.0 * uniform(counter * 131 + 17 * sub + static_cast<uint64_t>(i)) - 1.0;
            if (x.norm2() <= 1.0) return x;
            ++sub;
        }
    }

    // Uniform direction on the unit sphere of R^d.
    Vec direction(uint64_t counter, int d) const {
        // Box-Muller pairs; good enough isotropy for sampling sup-norms.
        Vec x(d);
        for (int i = 0; i < d; ++i) {
            double u1 = uniform(counter * 257 + 2 * static_cast<uint64_t>(i));
            double u2 = uniform(counter * 257 + 2 * static_cast<uint64_t>(i) + 1);
            if (u1 < 1e-300) u1 = 1e-300;
            x[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        }
        double n = x.norm();
        if (n < 1e-12) { x[0] = 1.0; n = 1.0; }
        for (int i = 0; i < d; ++i) x[i] /= n;
        return x;
    }

private:
    uint64_t key_;
};

} // namespace bony
