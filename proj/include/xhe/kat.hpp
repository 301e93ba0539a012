#pragma once

#include <utility>

#include "xhe/mceliece.hpp"

namespace xhe::kat {

// Known-answer material: one fixed (7,4) keypair with hand-checked
// vectors for every stage of the pipeline. The selftest replays these;
// golden tests assert against them bit for bit.

const BitMatrix& scrambler();       // S, 4x4 invertible
const HammingCode& code();          // (G, H, R) for n=7, k=4
const Permutation& permutation();   // P over 7 coordinates
const BitMatrix& public_matrix();   // S*G*P

const BitVector& message_a();       // 0100
const BitVector& message_b();       // 1000
const BitVector& cipher_a();        // message_a * psi = 1000101
const BitVector& cipher_b();        // message_b * psi = 0110101
const BitVector& cipher_sum();      // cipher_a ^ cipher_b = 1110000
const BitVector& message_sum();     // message_a ^ message_b = 1100

/// Keypair assembled from the material above via load_keypair.
std::pair<PrivateKey, PublicKey> keypair();

} // namespace xhe::kat
