#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xhe/errors.hpp"
#include "xhe/rng.hpp"

namespace xhe {

/// Row vector over GF(2), packed 64 bits per word (bit i lives at word
/// i/64, bit position i%64). Unused tail bits of the last word are kept
/// zero so that equality and weight are plain word operations.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parse from '0'/'1' characters; spaces are ignored ("1 0 1" == "101").
    static BitVector from_string(std::string_view s);
    static BitVector random(std::size_t len, Rng& rng);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const;
    bool is_zero() const;

    BitVector operator^(const BitVector& other) const;
    BitVector& operator^=(const BitVector& other);
    bool operator==(const BitVector&) const = default;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// Append ceil(len/8) bytes, most-significant bit first; pad bits zero.
    void pack_into(std::vector<std::uint8_t>& out) const;
    /// Inverse of pack_into. Rejects nonzero padding bits.
    static BitVector unpack(std::span<const std::uint8_t> bytes, std::size_t len);

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over GF(2), each row packed into 64-bit words.
/// Addition is XOR, multiplication is AND with XOR accumulation; the
/// kernels below work a word at a time.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Rows separated by ';' or newline, bits as '0'/'1', spaces ignored.
    static BitMatrix from_string(std::string_view s);
    static BitMatrix random(std::size_t rows, std::size_t cols, Rng& rng);
    /// Rejection-sample uniform k x k matrices until one has full rank.
    /// Acceptance probability tends to ~0.289, so the attempt cap is
    /// never reached in practice; hitting it raises Error.
    static BitMatrix random_invertible(std::size_t k, Rng& rng);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v);

    BitVector row_vector(std::size_t r) const;

    BitMatrix operator*(const BitMatrix& other) const;
    BitMatrix operator^(const BitMatrix& other) const;
    bool operator==(const BitMatrix&) const = default;

    /// Gauss-Jordan inverse; SingularMatrixError when rank < n.
    BitMatrix inverted() const;
    std::size_t rank() const;
    BitMatrix transposed() const;

    bool is_zero() const;
    bool is_identity() const;

    std::string to_string() const;

    /// Row-major bytes, each row padded to whole bytes, MSB first.
    void pack_into(std::vector<std::uint8_t>& out) const;
    std::size_t packed_size() const { return rows_ * ((cols_ + 7) / 8); }
    static BitMatrix unpack(std::span<const std::uint8_t> bytes,
                            std::size_t rows, std::size_t cols);

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

private:
    std::span<std::uint64_t> row_words_mut(std::size_t r) {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> words_;

    friend BitVector operator*(const BitVector& x, const BitMatrix& a);
};

/// Row vector times matrix: length a.rows() in, a.cols() out.
BitVector operator*(const BitVector& x, const BitMatrix& a);

/// Permutation of n coordinates, stored as an index map rather than a
/// dense 0/1 matrix so applying it (or its inverse) is O(n). Convention:
/// dense()[i][dest_of(i)] == 1, i.e. apply() moves the bit at position i
/// to position dest_of(i), matching x * dense() exactly. Equivalently,
/// column j of the dense form has its single 1 in row inverse().dest_of(j).
class Permutation {
public:
    /// Takes the destination map; DimensionError if not a bijection.
    explicit Permutation(std::vector<std::uint32_t> dest);

    static Permutation identity(std::size_t n);
    /// Uniform permutation via Fisher-Yates.
    static Permutation random(std::size_t n, Rng& rng);

    std::size_t size() const { return dest_.size(); }
    std::uint32_t dest_of(std::size_t i) const { return dest_[i]; }
    std::span<const std::uint32_t> mapping() const { return dest_; }

    /// out[dest_of(i)] = x[i]; equals x * dense().
    BitVector apply(const BitVector& x) const;
    /// out[i] = x[dest_of(i)]; equals x * dense(inverse()).
    BitVector apply_inverse(const BitVector& x) const;

    Permutation inverse() const;
    BitMatrix dense() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> dest_;
};

} // namespace xhe
