#include "xhe/mceliece.hpp"

#include <algorithm>
#include <atomic>

#include <openssl/evp.h>

namespace xhe {

namespace {

std::atomic<std::uint64_t> g_decode_pipelines{0};

void put_u16be(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v));
}

} // namespace

KeyId compute_key_id(const BitMatrix& public_matrix, unsigned parity_bits) {
    std::vector<std::uint8_t> buf;
    buf.reserve(9 + public_matrix.packed_size());
    buf.insert(buf.end(), {'X', 'H', 'E', 'K'});
    buf.push_back(std::uint8_t(parity_bits));
    put_u16be(buf, std::uint16_t(public_matrix.cols()));
    put_u16be(buf, std::uint16_t(public_matrix.rows()));
    public_matrix.pack_into(buf);

    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int md_len = 0;
    if (EVP_Digest(buf.data(), buf.size(), md, &md_len, EVP_sha256(), nullptr) != 1 ||
        md_len < 16)
        throw Error("key id digest failed");
    KeyId id;
    std::copy_n(md, id.bytes.size(), id.bytes.begin());
    return id;
}

namespace {

// Shared tail of generate_keypair / load_keypair. Assumes the code
// invariants already hold; validates S against the code dimensions.
std::pair<PrivateKey, PublicKey> make_keypair(BitMatrix scrambler,
                                              HammingCode code,
                                              Permutation permutation) {
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (scrambler.rows() != k || scrambler.cols() != k)
        throw DimensionError("scrambler must be " + std::to_string(k) + "x" +
                             std::to_string(k));
    if (permutation.size() != n)
        throw DimensionError("permutation must have size " + std::to_string(n));
    BitMatrix scrambler_inv = scrambler.inverted(); // SingularMatrixError if not

    // psi = S*G with columns rearranged by P
    const BitMatrix sg = scrambler * code.generator;
    BitMatrix psi(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        const BitVector permuted = permutation.apply(sg.row_vector(i));
        for (std::size_t j = 0; j < n; ++j)
            if (permuted.get(j)) psi.set(i, j, true);
    }

    const unsigned parity_bits = unsigned(code.parity_bits());
    const KeyId id = compute_key_id(psi, parity_bits);
    PrivateKey sk{std::move(scrambler), std::move(scrambler_inv), std::move(code),
                  std::move(permutation), id};
    PublicKey pk{std::move(psi), parity_bits, 1, id};
    return {std::move(sk), std::move(pk)};
}

std::vector<BitVector> chunk_message(const BitVector& msg, std::size_t k) {
    if (msg.empty()) throw DimensionError("message must contain at least one bit");
    const std::size_t count = (msg.size() + k - 1) / k;
    std::vector<BitVector> blocks(count, BitVector(k));
    for (std::size_t i = 0; i < msg.size(); ++i)
        if (msg.get(i)) blocks[i / k].set(i % k, true);
    return blocks;
}

Ciphertext encrypt_blocks(const PublicKey& pk, const BitVector& msg,
                          CipherMode mode) {
    std::vector<BitVector> blocks = chunk_message(msg, pk.k());
    for (auto& b : blocks) b = b * pk.matrix;
    return Ciphertext{std::move(blocks), mode, msg.size(), pk.key_id};
}

} // namespace

std::string KeyId::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 0xf];
    }
    return s;
}

std::pair<PrivateKey, PublicKey> generate_keypair(unsigned parity_bits, Rng& rng) {
    HammingCode code = build_hamming(parity_bits);
    BitMatrix scrambler = BitMatrix::random_invertible(code.k(), rng);
    Permutation permutation = Permutation::random(code.n(), rng);
    return make_keypair(std::move(scrambler), std::move(code), std::move(permutation));
}

std::pair<PrivateKey, PublicKey> load_keypair(BitMatrix scrambler,
                                              HammingCode code,
                                              Permutation permutation) {
    // re-run the code checks: callers can hand-assemble a HammingCode
    HammingCode verified = load_code(std::move(code.generator),
                                     std::move(code.parity_check),
                                     std::move(code.decode_matrix));
    return make_keypair(std::move(scrambler), std::move(verified),
                        std::move(permutation));
}

Ciphertext encrypt_classic(const PublicKey& pk, const BitVector& msg, Rng& rng) {
    Ciphertext c = encrypt_blocks(pk, msg, CipherMode::classic);
    for (auto& block : c.blocks) block.flip(rng.below(pk.n()));
    return c;
}

Ciphertext encrypt_classic_with_errors(
    const PublicKey& pk, const BitVector& msg,
    std::span<const std::optional<std::uint32_t>> error_positions) {
    Ciphertext c = encrypt_blocks(pk, msg, CipherMode::classic);
    if (error_positions.size() != c.blocks.size())
        throw DimensionError("one error position entry per block required");
    for (std::size_t i = 0; i < c.blocks.size(); ++i)
        if (error_positions[i]) {
            if (*error_positions[i] >= pk.n())
                throw DimensionError("error position out of range");
            c.blocks[i].flip(*error_positions[i]);
        }
    return c;
}

Ciphertext encrypt_homomorphic(const PublicKey& pk, const BitVector& msg) {
    return encrypt_blocks(pk, msg, CipherMode::homomorphic);
}

Ciphertext aggregate(std::span<const Ciphertext> cs) {
    if (cs.empty()) throw AggregationError("nothing to aggregate");
    for (const auto& c : cs)
        if (c.mode != CipherMode::homomorphic)
            throw AggregationError("only homomorphic ciphertexts can be aggregated; "
                                   "classic error terms would exceed the correction "
                                   "budget");
    const Ciphertext& first = cs.front();
    for (const auto& c : cs.subspan(1)) {
        if (c.key_id != first.key_id)
            throw KeyMismatchError("ciphertexts come from different keys");
        if (c.blocks.size() != first.blocks.size() ||
            c.plaintext_bit_len != first.plaintext_bit_len)
            throw AggregationError("ciphertext shapes differ");
    }
    Ciphertext out = first;
    for (const auto& c : cs.subspan(1))
        for (std::size_t b = 0; b < out.blocks.size(); ++b)
            out.blocks[b] ^= c.blocks[b];
    return out;
}

BitVector decrypt(const PrivateKey& sk, const Ciphertext& c) {
    if (c.key_id != sk.key_id)
        throw KeyMismatchError("ciphertext key id " + c.key_id.to_hex() +
                               " does not match this private key");
    if (c.blocks.empty()) throw DimensionError("ciphertext has no blocks");
    const std::size_t n = sk.n();
    const std::size_t k = sk.k();
    if (c.plaintext_bit_len == 0 || c.plaintext_bit_len > c.blocks.size() * k)
        throw DimensionError("plaintext length inconsistent with block count");

    BitVector out(c.plaintext_bit_len);
    std::size_t written = 0;
    for (const auto& block : c.blocks) {
        if (block.size() != n)
            throw DimensionError("ciphertext block has wrong length");
        g_decode_pipelines.fetch_add(1, std::memory_order_relaxed);
        const BitVector unpermuted = sk.permutation.apply_inverse(block);
        const CorrectionResult fixed = correct(sk.code, unpermuted);
        const BitVector scrambled = decode(sk.code, fixed.word);
        const BitVector plain = scrambled * sk.scrambler_inv;
        for (std::size_t j = 0; j < k && written < c.plaintext_bit_len; ++j, ++written)
            if (plain.get(j)) out.set(written, true);
    }
    return out;
}

bool homomorphic_check(const PublicKey& pk, const PrivateKey& sk,
                       std::span<const BitVector> xs) {
    if (xs.empty()) throw DimensionError("homomorphic_check needs at least one input");
    BitVector folded = xs.front();
    std::vector<Ciphertext> cs;
    cs.reserve(xs.size());
    for (const auto& x : xs) cs.push_back(encrypt_homomorphic(pk, x));
    for (const auto& x : xs.subspan(1)) folded ^= x;

    const Ciphertext combined = aggregate(cs);
    return decrypt(sk, combined) == folded &&
           combined == encrypt_homomorphic(pk, folded);
}

namespace stats {

std::uint64_t decode_pipeline_invocations() {
    return g_decode_pipelines.load(std::memory_order_relaxed);
}

void reset_decode_pipeline_invocations() {
    g_decode_pipelines.store(0, std::memory_order_relaxed);
}

} // namespace stats

} // namespace xhe
