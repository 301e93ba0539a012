#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "xhe/gf2.hpp"

namespace xhe {

/// Binary Hamming code with parameters n = 2^r - 1, k = n - r.
///
/// generator (G) is k x n, parity_check (H) is n x r and acts on the
/// right (syndrome = word * H), decode_matrix (R) is n x k with
/// G * R = I. Valid codewords are exactly the words with zero syndrome,
/// and a single flipped bit at position i produces syndrome row i of H.
///
/// Fields are plain so key material loaded from explicit matrices can be
/// inspected; use build_hamming / load_code to construct, both of which
/// establish the invariants (G*H = 0, G*R = I, H rows distinct and
/// nonzero, complete syndrome table).
struct HammingCode {
    BitMatrix generator;
    BitMatrix parity_check;
    BitMatrix decode_matrix;
    /// Indexed by syndrome value (bits of word*H read LSB-first);
    /// entry is the error position, or kNoEntry. Index 0 is unused.
    std::vector<std::uint32_t> syndrome_position;

    static constexpr std::uint32_t kNoEntry = 0xffffffff;

    std::size_t n() const { return generator.cols(); }
    std::size_t k() const { return generator.rows(); }
    std::size_t parity_bits() const { return parity_check.cols(); }

    bool operator==(const HammingCode&) const = default;
};

/// Canonical construction: row i of H is the binary representation of
/// i + 1 (least-significant bit in column 0), message bits occupy the
/// positions that are not one less than a power of two, and R selects
/// those positions back out. parity_bits must be >= 2.
HammingCode build_hamming(unsigned parity_bits);

/// Accept an explicit (G, H, R) triple after verifying every invariant;
/// CodeInvariantError otherwise.
HammingCode load_code(BitMatrix generator, BitMatrix parity_check,
                      BitMatrix decode_matrix);

/// msg * G. msg must have length k.
BitVector encode(const HammingCode& code, const BitVector& msg);

/// word * H. word must have length n.
BitVector syndrome(const HammingCode& code, const BitVector& word);

struct CorrectionResult {
    BitVector word;                        // zero-syndrome word
    std::optional<std::uint32_t> position; // flipped bit, if any
};

/// Zero syndrome: word returned unchanged. Otherwise flip the position
/// the syndrome table names; UncorrectableError when the table has no
/// entry (possible only for corrupted code objects, never for a code
/// built by build_hamming or load_code).
CorrectionResult correct(const HammingCode& code, const BitVector& word);

/// word * R, requiring a zero syndrome (run correct() first);
/// UncorrectableError otherwise. decode(encode(m)) == m.
BitVector decode(const HammingCode& code, const BitVector& word);

} // namespace xhe
