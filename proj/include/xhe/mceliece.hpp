#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xhe/gf2.hpp"
#include "xhe/hamming.hpp"

namespace xhe {

/// Truncated content hash identifying a keypair. Carried by ciphertexts
/// so that mixing material from different keys fails loudly instead of
/// decrypting to garbage.
struct KeyId {
    std::array<std::uint8_t, 16> bytes{};

    std::string to_hex() const;
    bool operator==(const KeyId&) const = default;
};

/// (S, code, P): scrambler, Hamming code and coordinate permutation.
/// The scrambler inverse is precomputed; all members are immutable after
/// construction and safe to share across threads.
struct PrivateKey {
    BitMatrix scrambler;      // S, k x k, invertible
    BitMatrix scrambler_inv;  // S^-1
    HammingCode code;         // G, H, R
    Permutation permutation;  // P, size n
    KeyId key_id;

    std::size_t n() const { return code.n(); }
    std::size_t k() const { return code.k(); }
};

/// The published matrix S*G*P plus the error budget t. Everything needed
/// to encrypt; reveals the code only in scrambled, permuted form.
struct PublicKey {
    BitMatrix matrix;       // S*G*P, k x n
    unsigned parity_bits;   // r, with n = 2^r - 1
    unsigned error_weight;  // t: max injectable error weight per block (1)
    KeyId key_id;

    std::size_t n() const { return matrix.cols(); }
    std::size_t k() const { return matrix.rows(); }
};

enum class CipherMode : std::uint8_t {
    classic = 1,      // x * psi + e, weight(e) <= t
    homomorphic = 2,  // x * psi, error-free, XOR-aggregatable
};

/// Sequence of n-bit blocks. Messages longer than k bits are chunked into
/// ceil(len/k) blocks, zero-padded at the tail; plaintext_bit_len records
/// the original length so decryption can truncate. Zero padding is
/// XOR-compatible, so aggregation stays correct blockwise.
struct Ciphertext {
    std::vector<BitVector> blocks;
    CipherMode mode;
    std::uint64_t plaintext_bit_len;
    KeyId key_id;

    bool operator==(const Ciphertext&) const = default;
};

/// Truncated SHA-256 over a domain tag, the dimensions and the packed
/// public matrix. Same inputs, same id, on every platform.
KeyId compute_key_id(const BitMatrix& public_matrix, unsigned parity_bits);

/// Fresh keypair: S is rejection-sampled invertible, P uniform, the code
/// canonical for the given parity_bits. Deterministic for a fixed seed
/// (S is drawn first, then P).
std::pair<PrivateKey, PublicKey> generate_keypair(unsigned parity_bits, Rng& rng);

/// Keypair from explicit material. Validates everything: S square and
/// invertible, code invariants, dimensions consistent with P.
std::pair<PrivateKey, PublicKey> load_keypair(BitMatrix scrambler,
                                              HammingCode code,
                                              Permutation permutation);

/// x * psi + e per block, with e a fresh uniform weight-1 vector.
Ciphertext encrypt_classic(const PublicKey& pk, const BitVector& msg, Rng& rng);

/// Test hook: classic encryption with forced error positions, one entry
/// per block (nullopt = no error). Lets known-answer tests pin e.
Ciphertext encrypt_classic_with_errors(
    const PublicKey& pk, const BitVector& msg,
    std::span<const std::optional<std::uint32_t>> error_positions);

/// x * psi per block, no error term. Deterministic and linear, which is
/// exactly what makes XOR aggregation work.
Ciphertext encrypt_homomorphic(const PublicKey& pk, const BitVector& msg);

/// Blockwise XOR fold. Requires every input homomorphic, same key and
/// shape; needs no key material. Classic ciphertexts are rejected: their
/// error terms would accumulate past the correction budget.
Ciphertext aggregate(std::span<const Ciphertext> cs);

/// Per block: apply P^-1, correct via the syndrome table (a no-op for
/// homomorphic blocks), apply R, apply S^-1; concatenate and truncate to
/// plaintext_bit_len. One pipeline pass per block, regardless of how many
/// ciphertexts were aggregated into the input.
BitVector decrypt(const PrivateKey& sk, const Ciphertext& c);

/// End-to-end check of the aggregation property on the given plaintexts:
/// decrypt(aggregate(Enc(x_i))) must equal the XOR fold of the x_i, and
/// aggregate(Enc(x_i)) must equal Enc(fold) as ciphertext bits.
bool homomorphic_check(const PublicKey& pk, const PrivateKey& sk,
                       std::span<const BitVector> xs);

namespace stats {

/// Number of per-block decode pipelines run since the last reset. Lets
/// tests assert that decrypting an aggregate costs one pipeline per
/// block, independent of how many ciphertexts were folded into it.
std::uint64_t decode_pipeline_invocations();
void reset_decode_pipeline_invocations();

} // namespace stats

} // namespace xhe
