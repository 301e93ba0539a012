#include "doctest.h"

#include "xhe/hamming.hpp"
#include "xhe/kat.hpp"

using namespace xhe;

namespace {

// All 2^k messages of a small code.
std::vector<BitVector> all_messages(std::size_t k) {
    std::vector<BitVector> out;
    out.reserve(std::size_t(1) << k);
    for (std::size_t v = 0; v < (std::size_t(1) << k); ++v) {
        BitVector m(k);
        for (std::size_t j = 0; j < k; ++j)
            if ((v >> j) & 1) m.set(j, true);
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

TEST_CASE("construction dimensions") {
    CHECK(build_hamming(3).n() == 7);
    CHECK(build_hamming(3).k() == 4);
    CHECK(build_hamming(2).n() == 3);
    CHECK(build_hamming(2).k() == 1);
    CHECK(build_hamming(4).n() == 15);
    CHECK(build_hamming(4).k() == 11);
    CHECK_THROWS_AS(build_hamming(1), DimensionError);
    CHECK_THROWS_AS(build_hamming(0), DimensionError);
    CHECK_THROWS_AS(build_hamming(17), DimensionError);
}

TEST_CASE("canonical construction reproduces the fixture triple") {
    const HammingCode canonical = build_hamming(3);
    CHECK(canonical.generator == kat::code().generator);
    CHECK(canonical.parity_check == kat::code().parity_check);
    CHECK(canonical.decode_matrix == kat::code().decode_matrix);
}

TEST_CASE("algebraic invariants at several sizes") {
    for (unsigned r : {2u, 3u, 4u, 5u, 8u}) {
        const HammingCode code = build_hamming(r);
        CHECK(code.generator * code.parity_check == BitMatrix(code.k(), r));
        CHECK(code.generator * code.decode_matrix == BitMatrix::identity(code.k()));
        for (std::size_t i = 0; i < code.n(); ++i) {
            const BitVector row_i = code.parity_check.row_vector(i);
            CHECK_FALSE(row_i.is_zero());
            for (std::size_t j = i + 1; j < code.n(); ++j)
                CHECK_FALSE(row_i == code.parity_check.row_vector(j));
        }
    }
}

TEST_CASE("explicit material is verified on load") {
    const HammingCode& good = kat::code();
    CHECK(load_code(good.generator, good.parity_check, good.decode_matrix) == good);

    BitMatrix bad_g = good.generator;
    bad_g.set(0, 0, !bad_g.get(0, 0));
    CHECK_THROWS_AS(load_code(bad_g, good.parity_check, good.decode_matrix),
                    CodeInvariantError);

    BitMatrix bad_h = good.parity_check; // duplicate a row
    for (std::size_t c = 0; c < 3; ++c) bad_h.set(1, c, bad_h.get(0, c));
    CHECK_THROWS_AS(load_code(good.generator, bad_h, good.decode_matrix),
                    CodeInvariantError);

    BitMatrix bad_r = good.decode_matrix;
    bad_r.set(2, 0, !bad_r.get(2, 0));
    CHECK_THROWS_AS(load_code(good.generator, good.parity_check, bad_r),
                    CodeInvariantError);

    CHECK_THROWS_AS(load_code(good.generator, good.parity_check,
                              BitMatrix(6, 4)),
                    CodeInvariantError);
}

TEST_CASE("encode known answers") {
    const HammingCode& code = kat::code();
    // the scrambled aggregate of the worked example encodes to the
    // un-permuted aggregate ciphertext
    const BitVector scrambled = kat::message_sum() * kat::scrambler();
    CHECK(scrambled == BitVector::from_string("0100"));
    CHECK(encode(code, scrambled) == BitVector::from_string("1001100"));

    CHECK(encode(code, BitVector(4)).is_zero());
    for (std::size_t i = 0; i < 4; ++i) {
        BitVector unit(4);
        unit.set(i, true);
        CHECK(encode(code, unit) == code.generator.row_vector(i));
    }
    CHECK_THROWS_AS(encode(code, BitVector(3)), DimensionError);
}

TEST_CASE("syndrome known answers") {
    const HammingCode& code = kat::code();
    CHECK(syndrome(code, BitVector::from_string("1001100")).is_zero());
    CHECK_THROWS_AS(syndrome(code, BitVector(6)), DimensionError);
    for (const auto& msg : all_messages(4)) {
        const BitVector word = encode(code, msg);
        CHECK(syndrome(code, word).is_zero());
        for (std::size_t p = 0; p < 7; ++p) {
            BitVector corrupted = word;
            corrupted.flip(p);
            CHECK(syndrome(code, corrupted) == code.parity_check.row_vector(p));
        }
    }
}

TEST_CASE("zero syndrome words are exactly the code") {
    const HammingCode code = build_hamming(3);
    std::size_t zero_syndromes = 0;
    for (std::size_t v = 0; v < 128; ++v) {
        BitVector w(7);
        for (std::size_t j = 0; j < 7; ++j)
            if ((v >> j) & 1) w.set(j, true);
        if (!syndrome(code, w).is_zero()) continue;
        ++zero_syndromes;
        // must be the encoding of its own decode
        CHECK(encode(code, decode(code, w)) == w);
    }
    CHECK(zero_syndromes == 16);
}

TEST_CASE("single error correction is exhaustive at r=3") {
    const HammingCode& code = kat::code();
    for (const auto& msg : all_messages(4)) {
        const BitVector word = encode(code, msg);
        const CorrectionResult clean = correct(code, word);
        CHECK(clean.word == word);
        CHECK_FALSE(clean.position.has_value());
        for (std::uint32_t p = 0; p < 7; ++p) {
            BitVector corrupted = word;
            corrupted.flip(p);
            const CorrectionResult fixed = correct(code, corrupted);
            CHECK(fixed.word == word);
            CHECK(fixed.position == p);
        }
    }
    const CorrectionResult zero = correct(code, BitVector(7));
    CHECK(zero.word.is_zero());
    CHECK_FALSE(zero.position.has_value());
}

TEST_CASE("correction fails loudly on a corrupted code object") {
    HammingCode broken = build_hamming(3);
    for (auto& entry : broken.syndrome_position) entry = HammingCode::kNoEntry;
    BitVector word = encode(broken, BitVector::from_string("1010"));
    word.flip(2);
    CHECK_THROWS_AS(correct(broken, word), UncorrectableError);
}

TEST_CASE("decode known answers and contract") {
    const HammingCode& code = kat::code();
    CHECK(decode(code, BitVector::from_string("1001100")) ==
          BitVector::from_string("0100"));
    CHECK(decode(code, BitVector::from_string("1001100")) *
              kat::scrambler().inverted() ==
          kat::message_sum());
    CHECK(decode(code, BitVector(7)).is_zero());
    for (const auto& msg : all_messages(4))
        CHECK(decode(code, encode(code, msg)) == msg);

    BitVector not_codeword(7);
    not_codeword.set(0, true);
    CHECK_THROWS_AS(decode(code, not_codeword), UncorrectableError);
}

TEST_CASE("encode decode roundtrip at larger sizes") {
    Rng rng(77);
    for (unsigned r : {4u, 5u}) {
        const HammingCode code = build_hamming(r);
        for (int trial = 0; trial < 1000; ++trial) {
            const BitVector msg = BitVector::random(code.k(), rng);
            const BitVector word = encode(code, msg);
            CHECK(decode(code, word) == msg);
            BitVector corrupted = word;
            corrupted.flip(rng.below(code.n()));
            const CorrectionResult fixed = correct(code, corrupted);
            CHECK(decode(code, fixed.word) == msg);
        }
    }
}
