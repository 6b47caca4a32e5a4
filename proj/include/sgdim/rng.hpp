#ifndef SGDIM_RNG_HPP
#define SGDIM_RNG_HPP

// Seeded generator for reduction coefficients and randomized suites.
// mt19937_64's output sequence is pinned by the standard, and values are
// folded with plain modulo, so a seed yields the same draws on every
// platform (the standard distributions make no such promise).

#include <cstdint>
#include <random>

namespace sgdim {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

    // inclusive bounds
    long range(long lo, long hi) {
        return lo + long(below(std::uint64_t(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace sgdim

#endif
