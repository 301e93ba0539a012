#include "xhe/kat.hpp"

namespace xhe::kat {

const BitMatrix& scrambler() {
    static const BitMatrix m = BitMatrix::from_string(
        "1101;"
        "1001;"
        "0111;"
        "1100");
    return m;
}

const HammingCode& code() {
    static const HammingCode c = load_code(
        BitMatrix::from_string("1110000;"
                               "1001100;"
                               "0101010;"
                               "1101001"),
        BitMatrix::from_string("100;"
                               "010;"
                               "110;"
                               "001;"
                               "101;"
                               "011;"
                               "111"),
        BitMatrix::from_string("0000;"
                               "0000;"
                               "1000;"
                               "0000;"
                               "0100;"
                               "0010;"
                               "0001"));
    return c;
}

const Permutation& permutation() {
    // dense form: row i has its 1 in column dest[i]
    static const Permutation p({1, 3, 6, 0, 2, 5, 4});
    return p;
}

const BitMatrix& public_matrix() {
    static const BitMatrix m = BitMatrix::from_string(
        "0110101;"
        "1000101;"
        "1010110;"
        "1011001");
    return m;
}

const BitVector& message_a() {
    static const BitVector v = BitVector::from_string("0100");
    return v;
}

const BitVector& message_b() {
    static const BitVector v = BitVector::from_string("1000");
    return v;
}

const BitVector& cipher_a() {
    static const BitVector v = BitVector::from_string("1000101");
    return v;
}

const BitVector& cipher_b() {
    static const BitVector v = BitVector::from_string("0110101");
    return v;
}

const BitVector& cipher_sum() {
    static const BitVector v = BitVector::from_string("1110000");
    return v;
}

const BitVector& message_sum() {
    static const BitVector v = BitVector::from_string("1100");
    return v;
}

std::pair<PrivateKey, PublicKey> keypair() {
    return load_keypair(scrambler(), code(), permutation());
}

} // namespace xhe::kat
