#include "xhe/selftest.hpp"

#include <functional>

#include "xhe/kat.hpp"

namespace xhe::selftest {

namespace {

// Runs one named check, turning thrown errors into failures so a broken
// fixture reports the stage it broke at instead of aborting the run.
void run_check(Report& report, const std::string& name,
               const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body(); // empty string = pass
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report.checks.push_back({name, detail.empty(), std::move(detail)});
}

std::string compare_vec(const BitVector& got, const BitVector& want) {
    if (got == want) return {};
    return "got " + got.to_string() + ", want " + want.to_string();
}

BitVector index_to_message(std::size_t value, std::size_t k) {
    BitVector m(k);
    for (std::size_t j = 0; j < k; ++j)
        if ((value >> j) & 1) m.set(j, true);
    return m;
}

} // namespace

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const Check* Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

Report run() {
    return run_with(kat::scrambler(), kat::code(), kat::permutation());
}

Report run_with(const BitMatrix& scrambler, const HammingCode& code,
                const Permutation& permutation) {
    Report report;

    std::optional<PrivateKey> sk_slot;
    std::optional<PublicKey> pk_slot;
    run_check(report, "public-matrix", [&] {
        auto pair = load_keypair(scrambler, code, permutation);
        sk_slot = std::move(pair.first);
        pk_slot = std::move(pair.second);
        if (pk_slot->matrix != kat::public_matrix())
            return "scrambler*generator*permutation differs from the reference "
                   "public matrix";
        return "";
    });
    if (!sk_slot) return report; // nothing else can run
    const PrivateKey& sk = *sk_slot;
    const PublicKey& pk = *pk_slot;

    run_check(report, "cipher-vector-a", [&] {
        return compare_vec(encrypt_homomorphic(pk, kat::message_a()).blocks[0],
                           kat::cipher_a());
    });
    run_check(report, "cipher-vector-b", [&] {
        return compare_vec(encrypt_homomorphic(pk, kat::message_b()).blocks[0],
                           kat::cipher_b());
    });

    const Ciphertext cs[] = {encrypt_homomorphic(pk, kat::message_a()),
                             encrypt_homomorphic(pk, kat::message_b())};
    run_check(report, "cipher-aggregate", [&] {
        return compare_vec(aggregate(cs).blocks[0], kat::cipher_sum());
    });
    run_check(report, "aggregate-decrypt", [&] {
        return compare_vec(decrypt(sk, aggregate(cs)), kat::message_sum());
    });
    run_check(report, "plaintext-fold", [&] {
        return compare_vec(kat::message_a() ^ kat::message_b(), kat::message_sum());
    });
    run_check(report, "classic-zero-error-vector", [&] {
        const std::optional<std::uint32_t> no_error[] = {std::nullopt};
        return compare_vec(
            encrypt_classic_with_errors(pk, kat::message_a(), no_error).blocks[0],
            kat::cipher_a());
    });

    const std::size_t k = pk.k();
    const std::size_t n = pk.n();
    run_check(report, "homomorphic-roundtrip-exhaustive", [&] {
        for (std::size_t v = 0; v < (std::size_t(1) << k); ++v) {
            const BitVector msg = index_to_message(v, k);
            if (decrypt(sk, encrypt_homomorphic(pk, msg)) != msg)
                return "plaintext " + msg.to_string() + " failed to roundtrip";
        }
        return std::string{};
    });
    run_check(report, "classic-roundtrip-exhaustive", [&] {
        for (std::size_t v = 0; v < (std::size_t(1) << k); ++v) {
            const BitVector msg = index_to_message(v, k);
            for (std::uint32_t pos = 0; pos <= n; ++pos) {
                // pos == n encodes the error-free case
                const std::optional<std::uint32_t> e[] = {
                    pos < n ? std::optional<std::uint32_t>(pos) : std::nullopt};
                if (decrypt(sk, encrypt_classic_with_errors(pk, msg, e)) != msg)
                    return "plaintext " + msg.to_string() + ", error position " +
                           (pos < n ? std::to_string(pos) : "none") +
                           " failed to roundtrip";
            }
        }
        return std::string{};
    });

    return report;
}

} // namespace xhe::selftest
