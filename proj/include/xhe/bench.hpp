#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xhe/mceliece.hpp"

namespace xhe::bench {

/// Parameters for one benchmark run.
struct Options {
    std::vector<std::size_t> sizes{100, 1000, 10000, 100000};
    unsigned parity_bits = 3;
    std::uint64_t seed = 0;
    unsigned repetitions = 5;
};

/// One row per item count. Each timing is the median over repetitions
/// of the whole loop, taken after a warm-up pass, so one-off jitter
/// drops out.
struct Row {
    std::size_t n_items;
    double enc_total_ms;     // n_items homomorphic encryptions
    double dec_total_ms;     // n_items individual decryptions
    double agg_dec_total_ms; // XOR fold of n_items ciphertexts + one decryption
};

struct Report {
    std::vector<Row> rows;
    std::string environment;
    unsigned parity_bits = 0;
    std::uint64_t seed = 0;

    std::string to_csv() const;
    std::string to_markdown() const;
};

/// Runs the timing experiment: for each size, draw that many k-bit random
/// plaintexts, then time (a) encrypting them all, (b) decrypting every
/// ciphertext individually, and (c) aggregating all ciphertexts and
/// decrypting the single result. (b) grows linearly with the item count
/// while the decryption inside (c) is one pipeline pass no matter how
/// many ciphertexts were folded; the gap between those two columns is
/// the point of the homomorphic mode.
Report run(const Options& opts);

} // namespace xhe::bench
