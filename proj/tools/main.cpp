// Command-line front end: keygen, encrypt, decrypt, aggregate, selftest,
// bench. Exit codes: 0 ok, 2 usage, 3 key mismatch, 4 uncorrectable or
// corrupt data, 5 io.
#include <cstdint>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "xhe/bench.hpp"
#include "xhe/codec.hpp"
#include "xhe/selftest.hpp"

namespace {

using namespace xhe;

constexpr int kExitUsage = 2;
constexpr int kExitKeyMismatch = 3;
constexpr int kExitCorrupt = 4;
constexpr int kExitIo = 5;

int fail(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

BitVector bits_from_bytes(std::span<const std::uint8_t> bytes) {
    return BitVector::unpack(bytes, bytes.size() * 8);
}

void write_text(const std::string& path, const std::string& text) {
    codec::write_file(path, std::span(
        reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

int cmd_keygen(unsigned r, std::uint64_t seed, const std::string& prefix) {
    Rng rng(seed);
    auto [sk, pk] = generate_keypair(r, rng);
    const std::string sk_path = prefix + codec::kPrivateKeyExtension;
    const std::string pk_path = prefix + codec::kPublicKeyExtension;
    codec::write_file(sk_path, codec::serialize_private(sk));
    codec::write_file(pk_path, codec::serialize_public(pk));
    std::cout << "key id " << pk.key_id.to_hex() << "\n"
              << "r=" << r << " n=" << pk.n() << " k=" << pk.k() << "\n"
              << "wrote " << sk_path << " and " << pk_path << "\n";
    return 0;
}

int cmd_encrypt(const std::string& pk_path, const std::string& in_path,
                const std::string& mode, std::uint64_t seed,
                const std::string& out_path) {
    const PublicKey pk = codec::deserialize_public(codec::read_file(pk_path));
    const BitVector msg = bits_from_bytes(codec::read_file(in_path));
    std::optional<Ciphertext> ct;
    if (mode == "classic") {
        Rng rng(seed);
        ct = encrypt_classic(pk, msg, rng);
    } else {
        ct = encrypt_homomorphic(pk, msg);
    }
    codec::write_file(out_path, codec::serialize_ciphertext(*ct));
    std::cout << "wrote " << out_path << " (" << ct->blocks.size()
              << " blocks, " << mode << ")\n";
    return 0;
}

int cmd_decrypt(const std::string& sk_path, const std::string& in_path,
                const std::string& out_path) {
    const PrivateKey sk = codec::deserialize_private(codec::read_file(sk_path));
    const Ciphertext ct = codec::deserialize_ciphertext(codec::read_file(in_path));
    const BitVector pt = decrypt(sk, ct);
    std::vector<std::uint8_t> bytes;
    pt.pack_into(bytes);
    codec::write_file(out_path, bytes);
    std::cout << "wrote " << out_path << " (" << pt.size() << " bits)\n";
    return 0;
}

int cmd_aggregate(const std::vector<std::string>& in_paths,
                  const std::string& out_path) {
    std::vector<Ciphertext> cts;
    cts.reserve(in_paths.size());
    for (const auto& p : in_paths)
        cts.push_back(codec::deserialize_ciphertext(codec::read_file(p)));
    codec::write_file(out_path, codec::serialize_ciphertext(aggregate(cts)));
    std::cout << "wrote " << out_path << " (" << in_paths.size()
              << " inputs folded)\n";
    return 0;
}

int cmd_selftest() {
    const selftest::Report report = selftest::run();
    for (const auto& check : report.checks)
        std::cout << (check.passed ? "ok   " : "FAIL ") << check.name
                  << (check.detail.empty() ? "" : ": " + check.detail) << "\n";
    if (!report.all_passed()) return kExitCorrupt;
    std::cout << report.checks.size() << " checks passed\n";
    return 0;
}

int cmd_bench(const bench::Options& opts, const std::string& csv_path) {
    const bench::Report report = bench::run(opts);
    std::cout << report.to_markdown();
    if (!csv_path.empty()) {
        write_text(csv_path, report.to_csv());
        std::cout << "\nwrote " << csv_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"McEliece-style cryptosystem with XOR-homomorphic aggregation"};
    app.require_subcommand(1);

    unsigned kg_r = 3;
    std::uint64_t kg_seed = 0;
    std::string kg_out = "key";
    auto* keygen = app.add_subcommand("keygen", "generate a keypair");
    keygen->add_option("--r", kg_r, "parity bits; n=2^r-1, k=n-r")
        ->required()
        ->check(CLI::Range(2u, 16u));
    keygen->add_option("--seed", kg_seed, "rng seed")->required();
    keygen->add_option("--out", kg_out, "output path prefix")
        ->capture_default_str();

    std::string enc_pk, enc_in, enc_mode, enc_out;
    std::uint64_t enc_seed = 0;
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file blockwise");
    encrypt->add_option("--pk", enc_pk, "public key file")->required();
    encrypt->add_option("--in", enc_in, "plaintext file")->required();
    encrypt->add_option("--mode", enc_mode, "classic or homo")
        ->required()
        ->check(CLI::IsMember({"classic", "homo"}));
    encrypt->add_option("--seed", enc_seed, "rng seed for classic error bits");
    encrypt->add_option("--out", enc_out, "ciphertext file")->required();

    std::string dec_sk, dec_in, dec_out;
    auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    decrypt->add_option("--sk", dec_sk, "private key file")->required();
    decrypt->add_option("--in", dec_in, "ciphertext file")->required();
    decrypt->add_option("--out", dec_out, "plaintext file")->required();

    std::vector<std::string> agg_in;
    std::string agg_out;
    auto* aggregate = app.add_subcommand(
        "aggregate", "XOR-fold homomorphic ciphertexts into one");
    aggregate->add_option("--in", agg_in, "input ciphertext files")->required();
    aggregate->add_option("--out", agg_out, "output ciphertext file")->required();

    auto* selftest = app.add_subcommand(
        "selftest", "replay the built-in known-answer pipeline");

    bench::Options bench_opts;
    std::string bench_csv;
    auto* bench_cmd = app.add_subcommand("bench", "timing experiment");
    bench_cmd->add_option("--sizes", bench_opts.sizes, "item counts, ascending")
        ->delimiter(',');
    bench_cmd->add_option("--r", bench_opts.parity_bits, "parity bits")
        ->capture_default_str()
        ->check(CLI::Range(2u, 16u));
    bench_cmd->add_option("--seed", bench_opts.seed, "rng seed")
        ->capture_default_str();
    bench_cmd->add_option("--csv", bench_csv, "also write rows as csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage; // 0 is --help/--version
    }

    try {
        if (app.got_subcommand(keygen)) return cmd_keygen(kg_r, kg_seed, kg_out);
        if (app.got_subcommand(encrypt))
            return cmd_encrypt(enc_pk, enc_in, enc_mode, enc_seed, enc_out);
        if (app.got_subcommand(decrypt)) return cmd_decrypt(dec_sk, dec_in, dec_out);
        if (app.got_subcommand(aggregate)) return cmd_aggregate(agg_in, agg_out);
        if (app.got_subcommand(selftest)) return cmd_selftest();
        if (app.got_subcommand(bench_cmd)) return cmd_bench(bench_opts, bench_csv);
    } catch (const KeyMismatchError& e) {
        return fail(e, kExitKeyMismatch);
    } catch (const UncorrectableError& e) {
        return fail(e, kExitCorrupt);
    } catch (const CodecError& e) {
        return fail(e, kExitCorrupt);
    } catch (const CodeInvariantError& e) {
        return fail(e, kExitCorrupt);
    } catch (const SingularMatrixError& e) {
        return fail(e, kExitCorrupt);
    } catch (const IoError& e) {
        return fail(e, kExitIo);
    } catch (const Error& e) {
        // DimensionError, AggregationError: bad arguments or bad mode mix.
        return fail(e, kExitUsage);
    }
    return kExitUsage;
}
