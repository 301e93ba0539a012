"""McEliece-style cryptosystem over GF(2) with an XOR-additive homomorphic mode.

Toy dimensions, research construction: do not use for real secrets.
"""

from ._xhe import (
    AggregationError,
    CipherMode,
    Ciphertext,
    CodecError,
    CodeInvariantError,
    DimensionError,
    Error,
    IoError,
    KeyMismatchError,
    PrivateKey,
    PublicKey,
    SingularMatrixError,
    UncorrectableError,
    aggregate,
    decrypt,
    encrypt_classic,
    encrypt_homomorphic,
    generate_keypair,
    selftest,
)

__all__ = [
    "AggregationError",
    "CipherMode",
    "Ciphertext",
    "CodecError",
    "CodeInvariantError",
    "DimensionError",
    "Error",
    "IoError",
    "KeyMismatchError",
    "PrivateKey",
    "PublicKey",
    "SingularMatrixError",
    "UncorrectableError",
    "aggregate",
    "decrypt",
    "encrypt_classic",
    "encrypt_homomorphic",
    "generate_keypair",
    "selftest",
]
