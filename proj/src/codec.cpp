#include "xhe/codec.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <string>

namespace xhe::codec {

namespace {

constexpr std::uint8_t kMagic[4] = {'X', 'H', 'E', '1'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 40;

enum class Kind : std::uint8_t { public_key = 1, private_key = 2, ciphertext = 3 };

struct Header {
    Kind kind;
    std::uint8_t r;
    std::uint8_t mode;
    std::uint16_t n;
    std::uint16_t k;
    std::uint32_t block_count;
    std::uint64_t plaintext_bit_len;
    KeyId key_id;
};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(std::uint8_t(v >> s));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) out.push_back(std::uint8_t(v >> s));
}

// Bounds-checked big-endian reader.
class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::span<const std::uint8_t> take(std::size_t count) {
        if (bytes_.size() - pos_ < count)
            throw CodecError("truncated input: need " + std::to_string(count) +
                             " bytes at offset " + std::to_string(pos_));
        auto s = bytes_.subspan(pos_, count);
        pos_ += count;
        return s;
    }

    std::uint8_t u8() { return take(1)[0]; }

    std::uint16_t u16() {
        auto s = take(2);
        return std::uint16_t(s[0]) << 8 | s[1];
    }

    std::uint32_t u32() {
        auto s = take(4);
        std::uint32_t v = 0;
        for (auto b : s) v = v << 8 | b;
        return v;
    }

    std::uint64_t u64() {
        auto s = take(8);
        std::uint64_t v = 0;
        for (auto b : s) v = v << 8 | b;
        return v;
    }

    void expect_end() const {
        if (pos_ != bytes_.size())
            throw CodecError("trailing data after payload (" +
                             std::to_string(bytes_.size() - pos_) + " bytes)");
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> make_header(Kind kind, std::uint8_t r, std::uint16_t n,
                                      std::uint16_t k, std::uint8_t mode,
                                      std::uint32_t block_count,
                                      std::uint64_t plaintext_bit_len,
                                      const KeyId& key_id) {
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize);
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(std::uint8_t(kind));
    out.push_back(r);
    out.push_back(mode);
    put_u16(out, n);
    put_u16(out, k);
    put_u32(out, block_count);
    put_u64(out, plaintext_bit_len);
    out.insert(out.end(), key_id.bytes.begin(), key_id.bytes.end());
    return out;
}

Header parse_header(Reader& in, Kind expected_kind) {
    const auto magic = in.take(4);
    if (std::memcmp(magic.data(), kMagic, 4) != 0)
        throw CodecError("bad magic: not an XHE file");
    const std::uint8_t version = in.u8();
    if (version != kVersion)
        throw CodecError("unknown format version " + std::to_string(version));
    Header h;
    const std::uint8_t kind = in.u8();
    if (kind < 1 || kind > 3) throw CodecError("unknown object kind");
    h.kind = Kind(kind);
    if (h.kind != expected_kind) throw CodecError("file holds a different object kind");
    h.r = in.u8();
    h.mode = in.u8();
    h.n = in.u16();
    h.k = in.u16();
    h.block_count = in.u32();
    h.plaintext_bit_len = in.u64();
    const auto id = in.take(16);
    std::copy(id.begin(), id.end(), h.key_id.bytes.begin());

    if (h.r < 2 || h.r > 16 || h.n != (std::uint32_t(1) << h.r) - 1 ||
        h.k != h.n - h.r)
        throw CodecError("dimensions are not a consistent Hamming (n, k) pair");
    if (h.kind == Kind::ciphertext) {
        if (h.mode != 1 && h.mode != 2) throw CodecError("invalid ciphertext mode");
        if (h.block_count == 0) throw CodecError("ciphertext must have blocks");
        const std::uint64_t want_blocks =
            (h.plaintext_bit_len + h.k - 1) / h.k; // ceil
        if (h.plaintext_bit_len == 0 || want_blocks != h.block_count)
            throw CodecError("plaintext length inconsistent with block count");
    } else {
        if (h.mode != 0 || h.block_count != 0 || h.plaintext_bit_len != 0)
            throw CodecError("key header carries ciphertext fields");
    }
    return h;
}

BitMatrix read_matrix(Reader& in, std::size_t rows, std::size_t cols) {
    return BitMatrix::unpack(in.take(rows * ((cols + 7) / 8)), rows, cols);
}

} // namespace

std::vector<std::uint8_t> serialize_public(const PublicKey& pk) {
    std::vector<std::uint8_t> out =
        make_header(Kind::public_key, std::uint8_t(pk.parity_bits),
                    std::uint16_t(pk.n()), std::uint16_t(pk.k()), 0, 0, 0,
                    pk.key_id);
    pk.matrix.pack_into(out);
    return out;
}

PublicKey deserialize_public(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    const Header h = parse_header(in, Kind::public_key);
    BitMatrix psi = read_matrix(in, h.k, h.n);
    in.expect_end();
    if (compute_key_id(psi, h.r) != h.key_id)
        throw CodecError("key id does not match key content");
    return PublicKey{std::move(psi), h.r, 1, h.key_id};
}

std::vector<std::uint8_t> serialize_private(const PrivateKey& sk) {
    const auto& code = sk.code;
    std::vector<std::uint8_t> out =
        make_header(Kind::private_key, std::uint8_t(code.parity_bits()),
                    std::uint16_t(sk.n()), std::uint16_t(sk.k()), 0, 0, 0,
                    sk.key_id);
    sk.scrambler.pack_into(out);
    code.generator.pack_into(out);
    code.parity_check.pack_into(out);
    code.decode_matrix.pack_into(out);
    for (std::size_t i = 0; i < sk.permutation.size(); ++i)
        put_u16(out, std::uint16_t(sk.permutation.dest_of(i)));
    return out;
}

PrivateKey deserialize_private(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    const Header h = parse_header(in, Kind::private_key);
    BitMatrix scrambler = read_matrix(in, h.k, h.k);
    BitMatrix generator = read_matrix(in, h.k, h.n);
    BitMatrix parity_check = read_matrix(in, h.n, h.r);
    BitMatrix decode_matrix = read_matrix(in, h.n, h.k);
    std::vector<std::uint32_t> dest(h.n);
    for (auto& d : dest) d = in.u16();
    in.expect_end();

    // Rebuild through the validating constructors: code invariants,
    // scrambler invertibility, permutation bijectivity. Derived material
    // (S^-1, syndrome table) is recomputed, never trusted from the wire.
    try {
        auto [sk, pk] = load_keypair(
            std::move(scrambler),
            load_code(std::move(generator), std::move(parity_check),
                      std::move(decode_matrix)),
            Permutation(std::move(dest)));
        if (pk.key_id != h.key_id)
            throw CodecError("key id does not match key content");
        return std::move(sk);
    } catch (const CodecError&) {
        throw;
    } catch (const Error& e) {
        throw CodecError(std::string("invalid private key: ") + e.what());
    }
}

std::vector<std::uint8_t> serialize_ciphertext(const Ciphertext& c) {
    if (c.blocks.empty()) throw CodecError("ciphertext must have blocks");
    const std::size_t n = c.blocks.front().size();
    unsigned parity_bits = 0;
    while ((std::size_t(1) << parity_bits) - 1 < n) ++parity_bits;
    if ((std::size_t(1) << parity_bits) - 1 != n)
        throw CodecError("block length is not a Hamming codeword length");
    const std::size_t k = n - parity_bits;
    std::vector<std::uint8_t> out = make_header(
        Kind::ciphertext, std::uint8_t(parity_bits), std::uint16_t(n),
        std::uint16_t(k), std::uint8_t(c.mode),
        std::uint32_t(c.blocks.size()), c.plaintext_bit_len, c.key_id);
    for (const auto& b : c.blocks) {
        if (b.size() != n) throw CodecError("ciphertext blocks have unequal lengths");
        b.pack_into(out);
    }
    return out;
}

Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    const Header h = parse_header(in, Kind::ciphertext);
    const std::size_t block_bytes = (h.n + 7) / 8;
    std::vector<BitVector> blocks;
    blocks.reserve(h.block_count);
    for (std::uint32_t b = 0; b < h.block_count; ++b)
        blocks.push_back(BitVector::unpack(in.take(block_bytes), h.n));
    in.expect_end();
    return Ciphertext{std::move(blocks), CipherMode(h.mode), h.plaintext_bit_len,
                      h.key_id};
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (f.bad()) throw IoError("read failed on " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            std::streamsize(bytes.size()));
    if (!f) throw IoError("write failed on " + path.string());
}

} // namespace xhe::codec

