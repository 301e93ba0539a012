#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "xhe/mceliece.hpp"

namespace xhe::codec {

// Wire format, identical for files and byte streams. Every file starts
// with a fixed 40-byte header:
//
//   offset size field
//   0      4    magic "XHE1"
//   4      1    version (currently 1)
//   5      1    kind: 1 public key, 2 private key, 3 ciphertext
//   6      1    r (parity bits; n = 2^r - 1, k = n - r)
//   7      1    mode: 0 for keys; 1 classic, 2 homomorphic for ciphertexts
//   8      2    n, big-endian
//   10     2    k, big-endian
//   12     4    block count, big-endian (0 for keys)
//   16     8    plaintext bit length, big-endian (0 for keys)
//   24     16   key id
//
// Matrix payloads are row-major with each row padded to whole bytes,
// most-significant bit first; padding bits must be zero. All multi-byte
// integers are big-endian. Readers validate every field and every
// algebraic invariant of the loaded object, so corrupt input never
// yields a usable value.
//
// Payloads:
//   public key:  psi (k x n)
//   private key: S (k x k), G (k x n), H (n x r), R (n x k),
//                then P as n 16-bit big-endian indices. The scrambler
//                inverse and syndrome table are recomputed on load, and
//                the key id is recomputed from S*G*P and checked.
//   ciphertext:  blocks, each n bits padded to whole bytes.

inline constexpr char kPublicKeyExtension[] = ".xpk";
inline constexpr char kPrivateKeyExtension[] = ".xsk";
inline constexpr char kCiphertextExtension[] = ".xct";

std::vector<std::uint8_t> serialize_public(const PublicKey& pk);
PublicKey deserialize_public(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> serialize_private(const PrivateKey& sk);
PrivateKey deserialize_private(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> serialize_ciphertext(const Ciphertext& c);
Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes);

// Whole-file helpers used by the CLI; IoError on failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

} // namespace xhe::codec
