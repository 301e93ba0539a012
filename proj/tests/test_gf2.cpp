#include "doctest.h"

#include "xhe/gf2.hpp"
#include "xhe/kat.hpp"

using namespace xhe;

TEST_CASE("bit vector string roundtrip and accessors") {
    BitVector v = BitVector::from_string("1 0 1 1");
    CHECK(v.size() == 4);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.to_string() == "1011");
    CHECK(v.weight() == 3);
    v.flip(1);
    CHECK(v.weight() == 4);
    v.set(0, false);
    CHECK(v.to_string() == "0111");
    CHECK_FALSE(v.is_zero());
    CHECK(BitVector(5).is_zero());
}

TEST_CASE("vector xor known answer") {
    // the aggregation step of the worked example
    CHECK((kat::cipher_a() ^ kat::cipher_b()) == kat::cipher_sum());
}

TEST_CASE("vector xor algebra") {
    Rng rng(11);
    const BitVector u = BitVector::random(70, rng);
    CHECK((u ^ u).is_zero());
    CHECK((u ^ BitVector(70)) == u);
    CHECK_THROWS_AS(u ^ BitVector(69), DimensionError);
}

TEST_CASE("matrix product known answer: scrambled permuted generator") {
    const BitMatrix product =
        kat::scrambler() * kat::code().generator * kat::permutation().dense();
    CHECK(product == kat::public_matrix());
}

TEST_CASE("matrix product identity and dimensions") {
    Rng rng(3);
    const BitMatrix a = BitMatrix::random(4, 9, rng);
    CHECK(BitMatrix::identity(4) * a == a);
    CHECK_THROWS_AS(a * a, DimensionError);
}

TEST_CASE("vector-matrix product known answers") {
    CHECK(kat::message_a() * kat::public_matrix() == kat::cipher_a());
    CHECK(kat::message_b() * kat::public_matrix() == kat::cipher_b());
    CHECK((BitVector(4) * kat::public_matrix()).is_zero());
    CHECK_THROWS_AS(BitVector(5) * kat::public_matrix(), DimensionError);
}

TEST_CASE("vector-matrix product is linear") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const BitMatrix a = BitMatrix::random(13, 70, rng);
        const BitVector x = BitVector::random(13, rng);
        const BitVector y = BitVector::random(13, rng);
        CHECK((x ^ y) * a == ((x * a) ^ (y * a)));
    }
}

TEST_CASE("matrix product is associative") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d1 = 1 + rng.below(16);
        const std::size_t d2 = 1 + rng.below(16);
        const std::size_t d3 = 1 + rng.below(16);
        const std::size_t d4 = 1 + rng.below(16);
        const BitMatrix a = BitMatrix::random(d1, d2, rng);
        const BitMatrix b = BitMatrix::random(d2, d3, rng);
        const BitMatrix c = BitMatrix::random(d3, d4, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("inverse of the fixture scrambler") {
    const BitMatrix inv = kat::scrambler().inverted();
    CHECK(inv == BitMatrix::from_string("1101;1100;0111;1001"));
    CHECK(kat::scrambler() * inv == BitMatrix::identity(4));
    CHECK(inv * kat::scrambler() == BitMatrix::identity(4));
}

TEST_CASE("inverse edge cases") {
    CHECK(BitMatrix::identity(6).inverted() == BitMatrix::identity(6));
    CHECK_THROWS_AS(BitMatrix(3, 3).inverted(), SingularMatrixError);
    CHECK_THROWS_AS(BitMatrix(2, 3).inverted(), DimensionError);
}

TEST_CASE("inverse round trips on random invertible matrices") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const BitMatrix a = BitMatrix::random_invertible(8, rng);
        const BitMatrix inv = a.inverted();
        CHECK(a * inv == BitMatrix::identity(8));
        CHECK(inv * a == BitMatrix::identity(8));
    }
}

TEST_CASE("rank") {
    CHECK(kat::scrambler().rank() == 4);
    CHECK(BitMatrix::identity(9).rank() == 9);
    CHECK(BitMatrix(4, 4).rank() == 0);
    CHECK(BitMatrix::from_string("101;101").rank() == 1);
}

TEST_CASE("random invertible matrices always have full rank") {
    Rng rng(42);
    CHECK(BitMatrix::random_invertible(4, rng).rank() == 4);
    Rng one(99);
    CHECK(BitMatrix::random_invertible(1, one) == BitMatrix::from_string("1"));
    Rng many(7);
    for (int trial = 0; trial < 1000; ++trial)
        CHECK(BitMatrix::random_invertible(8, many).rank() == 8);
}

TEST_CASE("random permutations are bijections") {
    Rng rng(12);
    const Permutation p = Permutation::random(3, rng);
    bool seen[3] = {};
    for (std::size_t i = 0; i < 3; ++i) seen[p.dest_of(i)] = true;
    CHECK((seen[0] && seen[1] && seen[2]));
    CHECK(Permutation::random(1, rng) == Permutation::identity(1));
}

TEST_CASE("dense permutation has one 1 per row and column") {
    Rng rng(31);
    const Permutation p = Permutation::random(9, rng);
    const BitMatrix d = p.dense();
    for (std::size_t i = 0; i < 9; ++i) {
        std::size_t row_sum = 0, col_sum = 0;
        for (std::size_t j = 0; j < 9; ++j) {
            row_sum += d.get(i, j);
            col_sum += d.get(j, i);
        }
        CHECK(row_sum == 1);
        CHECK(col_sum == 1);
    }
}

TEST_CASE("permutation apply matches dense multiplication") {
    // the un-permuted aggregate of the worked example
    const BitVector expected = BitVector::from_string("1001100");
    const Permutation& p = kat::permutation();
    CHECK(p.apply_inverse(kat::cipher_sum()) == expected);
    CHECK(kat::cipher_sum() * p.inverse().dense() == expected);

    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Permutation q = Permutation::random(33, rng);
        const BitVector x = BitVector::random(33, rng);
        CHECK(q.apply(x) == x * q.dense());
        CHECK(q.apply_inverse(q.apply(x)) == x);
        CHECK(q.apply(q.apply_inverse(x)) == x);
    }
    CHECK(Permutation::identity(5).apply(BitVector::from_string("10110")) ==
          BitVector::from_string("10110"));
}

TEST_CASE("permutation rejects non-bijections and length mismatches") {
    CHECK_THROWS_AS(Permutation({0, 0, 2}), DimensionError);
    CHECK_THROWS_AS(Permutation({0, 3}), DimensionError);
    CHECK_THROWS_AS(Permutation({}), DimensionError);
    CHECK_THROWS_AS(Permutation::identity(3).apply(BitVector(4)), DimensionError);
}

TEST_CASE("fixed seeds reproduce identical draws") {
    Rng a(1234), b(1234);
    CHECK(BitMatrix::random(6, 6, a) == BitMatrix::random(6, 6, b));
    CHECK(BitMatrix::random_invertible(6, a) == BitMatrix::random_invertible(6, b));
    CHECK(Permutation::random(40, a) == Permutation::random(40, b));
    CHECK(BitVector::random(100, a) == BitVector::random(100, b));
}

TEST_CASE("bit packing golden bytes") {
    std::vector<std::uint8_t> bytes;
    kat::cipher_sum().pack_into(bytes); // 1110000 -> one byte, MSB first
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0xe0);

    bytes.clear();
    BitMatrix::from_string("1").pack_into(bytes);
    REQUIRE(bytes.size() == 1);
    CHECK(bytes[0] == 0x80);
}

TEST_CASE("bit unpacking validates length and padding") {
    const std::uint8_t clean[] = {0xe0};
    CHECK(BitVector::unpack(clean, 7) == kat::cipher_sum());
    const std::uint8_t dirty[] = {0xe1}; // padding bit set
    CHECK_THROWS_AS(BitVector::unpack(dirty, 7), CodecError);
    CHECK_THROWS_AS(BitVector::unpack(clean, 9), CodecError);

    std::vector<std::uint8_t> packed;
    const BitMatrix m = kat::public_matrix();
    m.pack_into(packed);
    CHECK(BitMatrix::unpack(packed, 4, 7) == m);
    packed[0] ^= 0x01;
    CHECK_THROWS_AS(BitMatrix::unpack(packed, 4, 7), CodecError);
}
