#pragma once

#include <cstdint>
#include <random>

namespace xhe {

// Deterministic random source. Every randomized operation in the library
// takes one of these explicitly; there is no hidden global state. A fixed
// seed yields the same draw sequence on every platform (mt19937_64 output
// is standard-specified, and bounds are applied by rejection, not by
// std::uniform_int_distribution, whose mapping is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw from [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        // rejection threshold = 2^64 mod bound
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v >= threshold) return v % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace xhe
