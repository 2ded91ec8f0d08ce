#ifndef ARGSHIFT_RNG_HPP
#define ARGSHIFT_RNG_HPP

#include <cstdint>
#include <random>

#include "argshift/rational.hpp"

namespace argshift {

// Default seed for every randomized operation.  Fixed so that repeated runs
// are byte-identical; override with --seed / an explicit argument.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Thin deterministic wrapper over std::mt19937_64.  We draw values with a
// plain modulus instead of uniform_int_distribution because the latter is
// implementation-defined; the tiny modulo bias is irrelevant here, the
// cross-platform reproducibility is not.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish integer in [lo, hi], lo <= hi.
    long long uniform(long long lo, long long hi) {
        const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ULL;
        return lo + static_cast<long long>(engine_() % span);
    }

    // Integer coordinate in {-bound..bound} as a rational.
    Rat coordinate(long long bound) { return Rat(static_cast<long>(uniform(-bound, bound))); }

  private:
    std::mt19937_64 engine_;
};

} // namespace argshift

#endif
