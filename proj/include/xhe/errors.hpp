#pragma once

#include <stdexcept>
#include <string>

namespace xhe {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands are not conformable (matrix dims, vector lengths, empty input).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Matrix has no inverse over GF(2).
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// Code material violates an algebraic invariant (G*H != 0, G*R != I, ...).
class CodeInvariantError : public Error {
public:
    using Error::Error;
};

// Syndrome has no entry in the correction table, or a word that must be
// a codeword is not one.
class UncorrectableError : public Error {
public:
    using Error::Error;
};

// Ciphertexts cannot be combined (mode or shape mismatch, empty input).
class AggregationError : public Error {
public:
    using Error::Error;
};

// Key ids disagree between a ciphertext and the key material in use.
class KeyMismatchError : public Error {
public:
    using Error::Error;
};

// Wire bytes are malformed: truncation, bad magic, failed validation.
class CodecError : public Error {
public:
    using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace xhe
