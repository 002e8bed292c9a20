#pragma once

#include <cstdint>
#include <random>

#include "sparsehalf/circle.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

// Seeded generator with platform-independent derived draws (the standard
// distributions are implementation-defined, so reductions are done here).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform-ish integer in [0, bound); bound must be positive.  The
    // modulo bias is irrelevant for test-instance sampling but the result
    // is identical on every platform.
    int uniform(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    int uniform_between(int lo, int hi) { return lo + uniform(hi - lo + 1); }

    // Random rational in [0, 1) with denominator in [1, max_den].
    Rational rational(int max_den) {
        int den = uniform_between(1, max_den);
        int num = uniform(den);
        return {num, den};
    }

    CirclePoint point(int max_den) { return CirclePoint(rational(max_den)); }

private:
    std::mt19937_64 gen_;
};

}  // namespace sparsehalf
