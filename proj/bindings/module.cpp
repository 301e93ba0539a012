// Python bindings: byte-oriented wrappers over the core library. Messages
// go in and come out as bytes objects (bit length = 8 * byte length,
// most-significant bit first, matching the wire format).
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xhe/codec.hpp"
#include "xhe/selftest.hpp"

namespace py = pybind11;

namespace {

using namespace xhe;

BitVector message_from_bytes(const py::bytes& data) {
    const std::string buf = data;
    return BitVector::unpack(
        std::span(reinterpret_cast<const std::uint8_t*>(buf.data()), buf.size()),
        buf.size() * 8);
}

py::bytes to_py_bytes(const std::vector<std::uint8_t>& v) {
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

py::bytes bits_to_py_bytes(const BitVector& bits) {
    std::vector<std::uint8_t> packed;
    bits.pack_into(packed);
    return to_py_bytes(packed);
}

std::vector<std::uint8_t> py_bytes_to_vec(const py::bytes& data) {
    const std::string buf = data;
    return std::vector<std::uint8_t>(buf.begin(), buf.end());
}

} // namespace

PYBIND11_MODULE(_xhe, m) {
    m.doc() = "McEliece-style cryptosystem over GF(2) with an XOR-additive "
              "homomorphic mode";

    // Base first: pybind11 tries translators newest-first, so subclasses
    // registered later win over the base.
    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionError>(m, "DimensionError", error);
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", error);
    py::register_exception<CodeInvariantError>(m, "CodeInvariantError", error);
    py::register_exception<UncorrectableError>(m, "UncorrectableError", error);
    py::register_exception<AggregationError>(m, "AggregationError", error);
    py::register_exception<KeyMismatchError>(m, "KeyMismatchError", error);
    py::register_exception<CodecError>(m, "CodecError", error);
    py::register_exception<IoError>(m, "IoError", error);

    py::enum_<CipherMode>(m, "CipherMode")
        .value("CLASSIC", CipherMode::classic)
        .value("HOMOMORPHIC", CipherMode::homomorphic);

    py::class_<PublicKey>(m, "PublicKey")
        .def_property_readonly("n", &PublicKey::n)
        .def_property_readonly("k", &PublicKey::k)
        .def_property_readonly("key_id",
                               [](const PublicKey& pk) { return pk.key_id.to_hex(); })
        .def("to_bytes",
             [](const PublicKey& pk) { return to_py_bytes(codec::serialize_public(pk)); })
        .def_static("from_bytes", [](const py::bytes& data) {
            return codec::deserialize_public(py_bytes_to_vec(data));
        })
        .def("__repr__", [](const PublicKey& pk) {
            return "<PublicKey n=" + std::to_string(pk.n()) +
                   " k=" + std::to_string(pk.k()) + " id=" + pk.key_id.to_hex() + ">";
        });

    py::class_<PrivateKey>(m, "PrivateKey")
        .def_property_readonly("n", &PrivateKey::n)
        .def_property_readonly("k", &PrivateKey::k)
        .def_property_readonly("key_id",
                               [](const PrivateKey& sk) { return sk.key_id.to_hex(); })
        .def("to_bytes",
             [](const PrivateKey& sk) { return to_py_bytes(codec::serialize_private(sk)); })
        .def_static("from_bytes", [](const py::bytes& data) {
            return codec::deserialize_private(py_bytes_to_vec(data));
        })
        .def("__repr__", [](const PrivateKey& sk) {
            return "<PrivateKey n=" + std::to_string(sk.n()) +
                   " k=" + std::to_string(sk.k()) + " id=" + sk.key_id.to_hex() + ">";
        });

    py::class_<Ciphertext>(m, "Ciphertext")
        .def_property_readonly("mode", [](const Ciphertext& c) { return c.mode; })
        .def_property_readonly("block_count",
                               [](const Ciphertext& c) { return c.blocks.size(); })
        .def_property_readonly("plaintext_bit_len",
                               [](const Ciphertext& c) { return c.plaintext_bit_len; })
        .def_property_readonly("key_id",
                               [](const Ciphertext& c) { return c.key_id.to_hex(); })
        .def("to_bytes",
             [](const Ciphertext& c) { return to_py_bytes(codec::serialize_ciphertext(c)); })
        .def_static("from_bytes", [](const py::bytes& data) {
            return codec::deserialize_ciphertext(py_bytes_to_vec(data));
        })
        .def(py::self == py::self)
        .def("__repr__", [](const Ciphertext& c) {
            return std::string("<Ciphertext ") +
                   (c.mode == CipherMode::classic ? "classic" : "homomorphic") +
                   " blocks=" + std::to_string(c.blocks.size()) + ">";
        });

    m.def(
        "generate_keypair",
        [](unsigned r, std::uint64_t seed) {
            Rng rng(seed);
            return generate_keypair(r, rng);
        },
        py::arg("r"), py::arg("seed"),
        "Deterministic keypair for the given parity-bit count and seed; "
        "returns (private_key, public_key).");

    m.def(
        "encrypt_classic",
        [](const PublicKey& pk, const py::bytes& data, std::uint64_t seed) {
            const BitVector msg = message_from_bytes(data);
            Rng rng(seed);
            return encrypt_classic(pk, msg, rng);
        },
        py::arg("pk"), py::arg("data"), py::arg("seed") = 0,
        "Encrypt bytes with a fresh weight-1 error per block.");

    m.def(
        "encrypt_homomorphic",
        [](const PublicKey& pk, const py::bytes& data) {
            return encrypt_homomorphic(pk, message_from_bytes(data));
        },
        py::arg("pk"), py::arg("data"),
        "Error-free encryption; results can be aggregated by XOR.");

    m.def(
        "aggregate",
        [](const std::vector<Ciphertext>& cts) { return aggregate(cts); },
        py::arg("ciphertexts"),
        "XOR-fold homomorphic ciphertexts into one; decrypting the result "
        "yields the XOR of the plaintexts.");

    m.def(
        "decrypt",
        [](const PrivateKey& sk, const Ciphertext& ct) {
            return bits_to_py_bytes(decrypt(sk, ct));
        },
        py::arg("sk"), py::arg("ct"),
        "Decrypt to bytes (the plaintext bit length is padded up to whole "
        "bytes with zero bits when not byte-aligned).");

    m.def(
        "selftest",
        []() {
            const selftest::Report report = selftest::run();
            std::vector<std::pair<std::string, bool>> out;
            out.reserve(report.checks.size());
            for (const auto& check : report.checks)
                out.emplace_back(check.name, check.passed);
            return out;
        },
        "Replay the built-in known-answer pipeline; returns [(name, ok)].");
}
