#include "xhe/gf2.hpp"

#include <algorithm>
#include <bit>

namespace xhe {

namespace {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// XOR src into dst, word-wise.
inline void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

inline std::uint64_t tail_mask(std::size_t bits) {
    const std::size_t rem = bits & 63;
    return rem == 0 ? ~std::uint64_t(0) : (std::uint64_t(1) << rem) - 1;
}

} // namespace

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view s) {
    BitVector out;
    std::vector<bool> bits;
    for (char c : s) {
        if (c == '0' || c == '1') bits.push_back(c == '1');
        else if (c == ' ' || c == '\t') continue;
        else throw Error("bit string may contain only '0', '1' and spaces");
    }
    out = BitVector(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out.set(i, bits[i]);
    return out;
}

BitVector BitVector::random(std::size_t len, Rng& rng) {
    BitVector out(len);
    for (auto& w : out.words_) w = rng.next_u64();
    if (!out.words_.empty()) out.words_.back() &= tail_mask(len);
    return out;
}

void BitVector::set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (i & 63);
    if (v) words_[i >> 6] |= bit;
    else words_[i >> 6] &= ~bit;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
}

BitVector BitVector::operator^(const BitVector& other) const {
    BitVector out = *this;
    out ^= other;
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_)
        throw DimensionError("vector xor: lengths differ (" + std::to_string(len_) +
                             " vs " + std::to_string(other.len_) + ")");
    xor_words(words_.data(), other.words_.data(), words_.size());
    return *this;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) s += get(i) ? '1' : '0';
    return s;
}

void BitVector::pack_into(std::vector<std::uint8_t>& out) const {
    const std::size_t nbytes = (len_ + 7) / 8;
    for (std::size_t b = 0; b < nbytes; ++b) {
        std::uint8_t byte = 0;
        const std::size_t hi = std::min(len_, b * 8 + 8);
        for (std::size_t i = b * 8; i < hi; ++i)
            if (get(i)) byte |= std::uint8_t(0x80 >> (i - b * 8));
        out.push_back(byte);
    }
}

BitVector BitVector::unpack(std::span<const std::uint8_t> bytes, std::size_t len) {
    const std::size_t nbytes = (len + 7) / 8;
    if (bytes.size() != nbytes)
        throw CodecError("bit payload size mismatch: expected " +
                         std::to_string(nbytes) + " bytes, got " +
                         std::to_string(bytes.size()));
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (bytes[i / 8] & (0x80 >> (i % 8))) out.set(i, true);
    // padding bits must be zero, otherwise two distinct byte strings would
    // decode to the same value and corruption could pass unnoticed
    if (len % 8 != 0) {
        const std::uint8_t pad = bytes[nbytes - 1] & std::uint8_t(0xff >> (len % 8));
        if (pad != 0) throw CodecError("nonzero padding bits in bit payload");
    }
    return out;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)),
      words_(rows * words_per_row_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_string(std::string_view s) {
    std::vector<BitVector> rows;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find_first_of(";\n", start);
        if (end == std::string_view::npos) end = s.size();
        const auto piece = s.substr(start, end - start);
        if (piece.find_first_of("01") != std::string_view::npos)
            rows.push_back(BitVector::from_string(piece));
        start = end + 1;
    }
    if (rows.empty()) throw Error("matrix string has no rows");
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw DimensionError("matrix string rows have unequal lengths");
        for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r].get(c));
    }
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    const std::uint64_t mask = tail_mask(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = m.row_words_mut(r);
        for (auto& w : row) w = rng.next_u64();
        row[row.size() - 1] &= mask;
    }
    return m;
}

BitMatrix BitMatrix::random_invertible(std::size_t k, Rng& rng) {
    if (k == 0) throw DimensionError("invertible matrix needs k >= 1");
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        BitMatrix m = random(k, k, rng);
        if (m.rank() == k) return m;
    }
    throw Error("random_invertible: attempt cap exceeded");
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (c & 63);
    auto& word = words_[r * words_per_row_ + (c >> 6)];
    if (v) word |= bit;
    else word &= ~bit;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(words_.data() + r * words_per_row_, words_per_row_,
                v.words().data());
    return v;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionError("matrix product: " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " times " +
                             std::to_string(other.rows_) + "x" +
                             std::to_string(other.cols_));
    BitMatrix out(rows_, other.cols_);
    // out.row(i) = XOR of other.row(k) over all k with a[i][k] == 1
    for (std::size_t i = 0; i < rows_; ++i) {
        auto dst = out.row_words_mut(i);
        const auto src = row_words(i);
        for (std::size_t kw = 0; kw < words_per_row_; ++kw) {
            std::uint64_t w = src[kw];
            while (w) {
                const std::size_t k = kw * 64 + std::countr_zero(w);
                w &= w - 1;
                xor_words(dst.data(), other.words_.data() + k * other.words_per_row_,
                          other.words_per_row_);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::operator^(const BitMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix xor: shapes differ");
    BitMatrix out = *this;
    xor_words(out.words_.data(), other.words_.data(), words_.size());
    return out;
}

BitVector operator*(const BitVector& x, const BitMatrix& a) {
    if (x.size() != a.rows())
        throw DimensionError("vector-matrix product: length " +
                             std::to_string(x.size()) + " vs " +
                             std::to_string(a.rows()) + " rows");
    BitVector out(a.cols());
    auto dst = out.words();
    const auto xs = x.words();
    for (std::size_t kw = 0; kw < xs.size(); ++kw) {
        std::uint64_t w = xs[kw];
        while (w) {
            const std::size_t k = kw * 64 + std::countr_zero(w);
            w &= w - 1;
            xor_words(dst.data(), a.words_.data() + k * a.words_per_row_,
                      a.words_per_row_);
        }
    }
    return out;
}

BitMatrix BitMatrix::inverted() const {
    if (rows_ != cols_)
        throw DimensionError("only square matrices can be inverted");
    const std::size_t n = rows_;
    BitMatrix work = *this;
    BitMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        // pivot: first row at or below the diagonal with a 1 in this column
        std::size_t pivot = col;
        while (pivot < n && !work.get(pivot, col)) ++pivot;
        if (pivot == n)
            throw SingularMatrixError("matrix is singular (no pivot in column " +
                                      std::to_string(col) + ")");
        if (pivot != col) {
            std::swap_ranges(work.words_.begin() + pivot * work.words_per_row_,
                             work.words_.begin() + (pivot + 1) * work.words_per_row_,
                             work.words_.begin() + col * work.words_per_row_);
            std::swap_ranges(inv.words_.begin() + pivot * inv.words_per_row_,
                             inv.words_.begin() + (pivot + 1) * inv.words_per_row_,
                             inv.words_.begin() + col * inv.words_per_row_);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row != col && work.get(row, col)) {
                xor_words(work.words_.data() + row * work.words_per_row_,
                          work.words_.data() + col * work.words_per_row_,
                          work.words_per_row_);
                xor_words(inv.words_.data() + row * inv.words_per_row_,
                          inv.words_.data() + col * inv.words_per_row_,
                          inv.words_per_row_);
            }
        }
    }
    return inv;
}

std::size_t BitMatrix::rank() const {
    BitMatrix work = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && !work.get(pivot, col)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            std::swap_ranges(work.words_.begin() + pivot * work.words_per_row_,
                             work.words_.begin() + (pivot + 1) * work.words_per_row_,
                             work.words_.begin() + r * work.words_per_row_);
        for (std::size_t row = r + 1; row < rows_; ++row)
            if (work.get(row, col))
                xor_words(work.words_.data() + row * work.words_per_row_,
                          work.words_.data() + r * work.words_per_row_,
                          work.words_per_row_);
        ++r;
    }
    return r;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r, true);
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
}

bool BitMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_);
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) s += '\n';
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    }
    return s;
}

void BitMatrix::pack_into(std::vector<std::uint8_t>& out) const {
    for (std::size_t r = 0; r < rows_; ++r) row_vector(r).pack_into(out);
}

BitMatrix BitMatrix::unpack(std::span<const std::uint8_t> bytes,
                            std::size_t rows, std::size_t cols) {
    const std::size_t row_bytes = (cols + 7) / 8;
    if (bytes.size() != rows * row_bytes)
        throw CodecError("matrix payload size mismatch: expected " +
                         std::to_string(rows * row_bytes) + " bytes, got " +
                         std::to_string(bytes.size()));
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const BitVector row = BitVector::unpack(bytes.subspan(r * row_bytes, row_bytes), cols);
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row.get(c));
    }
    return m;
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint32_t> dest) : dest_(std::move(dest)) {
    if (dest_.empty()) throw DimensionError("permutation needs n >= 1");
    std::vector<bool> seen(dest_.size(), false);
    for (auto d : dest_) {
        if (d >= dest_.size() || seen[d])
            throw DimensionError("permutation map is not a bijection");
        seen[d] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> dest(n);
    for (std::size_t i = 0; i < n; ++i) dest[i] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(dest));
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
    std::vector<std::uint32_t> dest(n);
    for (std::size_t i = 0; i < n; ++i) dest[i] = static_cast<std::uint32_t>(i);
    // Fisher-Yates
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = rng.below(i + 1);
        std::swap(dest[i], dest[j]);
    }
    return Permutation(std::move(dest));
}

BitVector Permutation::apply(const BitVector& x) const {
    if (x.size() != dest_.size())
        throw DimensionError("permutation apply: length mismatch");
    BitVector out(x.size());
    for (std::size_t i = 0; i < dest_.size(); ++i)
        if (x.get(i)) out.set(dest_[i], true);
    return out;
}

BitVector Permutation::apply_inverse(const BitVector& x) const {
    if (x.size() != dest_.size())
        throw DimensionError("permutation apply: length mismatch");
    BitVector out(x.size());
    for (std::size_t i = 0; i < dest_.size(); ++i)
        if (x.get(dest_[i])) out.set(i, true);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(dest_.size());
    for (std::size_t i = 0; i < dest_.size(); ++i)
        inv[dest_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv));
}

BitMatrix Permutation::dense() const {
    BitMatrix m(dest_.size(), dest_.size());
    for (std::size_t i = 0; i < dest_.size(); ++i) m.set(i, dest_[i], true);
    return m;
}

} // namespace xhe
