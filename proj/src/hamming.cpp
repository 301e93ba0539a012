#include "xhe/hamming.hpp"

#include <string>

namespace xhe {

namespace {

std::uint64_t syndrome_value(const BitVector& s) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < s.size(); ++b)
        if (s.get(b)) v |= std::uint64_t(1) << b;
    return v;
}

// Builds the syndrome -> position table from H, enforcing that rows are
// nonzero and pairwise distinct.
std::vector<std::uint32_t> build_syndrome_table(const BitMatrix& parity_check) {
    const std::size_t n = parity_check.rows();
    const std::size_t r = parity_check.cols();
    std::vector<std::uint32_t> table(std::size_t(1) << r, HammingCode::kNoEntry);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t v = syndrome_value(parity_check.row_vector(i));
        if (v == 0)
            throw CodeInvariantError("parity-check row " + std::to_string(i) +
                                     " is zero");
        if (table[v] != HammingCode::kNoEntry)
            throw CodeInvariantError("parity-check rows " +
                                     std::to_string(table[v]) + " and " +
                                     std::to_string(i) + " are equal");
        table[v] = static_cast<std::uint32_t>(i);
    }
    return table;
}

} // namespace

HammingCode build_hamming(unsigned parity_bits) {
    if (parity_bits < 2)
        throw DimensionError("hamming code needs at least 2 parity bits");
    if (parity_bits > 16)
        throw DimensionError("hamming code parameter too large (max 16 parity bits)");
    const std::size_t n = (std::size_t(1) << parity_bits) - 1;
    const std::size_t k = n - parity_bits;

    // positions p with p+1 a power of two hold parity; the rest carry data
    std::vector<std::size_t> data_pos;
    data_pos.reserve(k);
    for (std::size_t p = 0; p < n; ++p)
        if ((p + 1) & p) data_pos.push_back(p);

    BitMatrix generator(k, n);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t label = data_pos[j] + 1;
        generator.set(j, data_pos[j], true);
        for (unsigned b = 0; b < parity_bits; ++b)
            if ((label >> b) & 1) generator.set(j, (std::size_t(1) << b) - 1, true);
    }

    BitMatrix parity_check(n, parity_bits);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned b = 0; b < parity_bits; ++b)
            if (((i + 1) >> b) & 1) parity_check.set(i, b, true);

    BitMatrix decode_matrix(n, k);
    for (std::size_t j = 0; j < k; ++j) decode_matrix.set(data_pos[j], j, true);

    auto table = build_syndrome_table(parity_check);
    return HammingCode{std::move(generator), std::move(parity_check),
                       std::move(decode_matrix), std::move(table)};
}

HammingCode load_code(BitMatrix generator, BitMatrix parity_check,
                      BitMatrix decode_matrix) {
    const std::size_t k = generator.rows();
    const std::size_t n = generator.cols();
    const std::size_t r = parity_check.cols();
    if (r < 2 || r > 16 || n != (std::size_t(1) << r) - 1 || k != n - r)
        throw CodeInvariantError("code dimensions are not a Hamming (n, k) pair");
    if (parity_check.rows() != n || decode_matrix.rows() != n ||
        decode_matrix.cols() != k)
        throw CodeInvariantError("code matrices have inconsistent shapes");
    if (!(generator * parity_check).is_zero())
        throw CodeInvariantError("G * H is not zero");
    if (!(generator * decode_matrix).is_identity())
        throw CodeInvariantError("G * R is not the identity");
    auto table = build_syndrome_table(parity_check);
    return HammingCode{std::move(generator), std::move(parity_check),
                       std::move(decode_matrix), std::move(table)};
}

BitVector encode(const HammingCode& code, const BitVector& msg) {
    if (msg.size() != code.k())
        throw DimensionError("encode: message length " + std::to_string(msg.size()) +
                             ", expected " + std::to_string(code.k()));
    return msg * code.generator;
}

BitVector syndrome(const HammingCode& code, const BitVector& word) {
    if (word.size() != code.n())
        throw DimensionError("syndrome: word length " + std::to_string(word.size()) +
                             ", expected " + std::to_string(code.n()));
    return word * code.parity_check;
}

CorrectionResult correct(const HammingCode& code, const BitVector& word) {
    const BitVector s = syndrome(code, word);
    if (s.is_zero()) return {word, std::nullopt};
    const std::uint64_t v = syndrome_value(s);
    const std::uint32_t pos =
        v < code.syndrome_position.size() ? code.syndrome_position[v]
                                          : HammingCode::kNoEntry;
    if (pos == HammingCode::kNoEntry)
        throw UncorrectableError("syndrome " + std::to_string(v) +
                                 " has no correction entry");
    BitVector fixed = word;
    fixed.flip(pos);
    return {std::move(fixed), pos};
}

BitVector decode(const HammingCode& code, const BitVector& word) {
    if (!syndrome(code, word).is_zero())
        throw UncorrectableError("decode requires a zero-syndrome word; "
                                 "run correction first");
    return word * code.decode_matrix;
}

} // namespace xhe
