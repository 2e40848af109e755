#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

namespace lasa {

// Seedable generator wrapping std::mt19937_64 with self-contained draw
// helpers, so streams do not depend on standard-library distribution
// internals. Multi-chain runs derive stream c from seed + c.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n) by masked rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0};
        mask >>= std::countl_zero(n - 1);
        std::uint64_t draw;
        do {
            draw = engine_() & mask;
        } while (draw >= n);
        return draw;
    }

    double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; draws two uniforms per call.
    double normal(double mean = 0.0, double sd = 1.0) {
        double u1;
        do {
            u1 = uniform();
        } while (u1 == 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * r * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace lasa
