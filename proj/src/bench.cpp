#include "xhe/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace xhe::bench {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps the timed loops observable so the optimizer cannot drop them.
volatile std::uint64_t g_sink = 0;

void consume(const BitVector& v) { g_sink = g_sink ^ v.words()[0]; }

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

template <typename F>
double time_once_ms(F&& body) {
    const auto start = Clock::now();
    body();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

template <typename F>
double measure_ms(unsigned repetitions, F&& body) {
    body(); // warm-up
    std::vector<double> samples;
    samples.reserve(repetitions);
    for (unsigned i = 0; i < repetitions; ++i)
        samples.push_back(time_once_ms(body));
    return median(std::move(samples));
}

std::string describe_environment() {
    std::string env;
#if defined(__VERSION__)
    env += "compiler ";
    env += __VERSION__;
#else
    env += "unknown compiler";
#endif
#if defined(__linux__)
    env += ", linux";
#elif defined(__APPLE__)
    env += ", macos";
#elif defined(_WIN32)
    env += ", windows";
#endif
    env += ", " + std::to_string(sizeof(void*) * 8) + "-bit";
    return env;
}

} // namespace

Report run(const Options& opts) {
    if (opts.sizes.empty())
        throw DimensionError("bench needs at least one size");
    for (std::size_t i = 1; i < opts.sizes.size(); ++i)
        if (opts.sizes[i] <= opts.sizes[i - 1])
            throw DimensionError("bench sizes must be strictly increasing");
    if (opts.repetitions == 0)
        throw DimensionError("bench needs at least one repetition");

    Rng rng(opts.seed);
    auto [sk, pk] = generate_keypair(opts.parity_bits, rng);

    Report report;
    report.environment = describe_environment();
    report.parity_bits = opts.parity_bits;
    report.seed = opts.seed;

    for (const std::size_t n_items : opts.sizes) {
        std::vector<BitVector> plaintexts;
        plaintexts.reserve(n_items);
        for (std::size_t i = 0; i < n_items; ++i)
            plaintexts.push_back(BitVector::random(pk.k(), rng));

        // Fixed inputs for the decryption cells, built outside any timer.
        std::vector<Ciphertext> ciphertexts;
        ciphertexts.reserve(n_items);
        for (const auto& x : plaintexts)
            ciphertexts.push_back(encrypt_homomorphic(pk, x));

        Row row;
        row.n_items = n_items;
        row.enc_total_ms = measure_ms(opts.repetitions, [&] {
            for (const auto& x : plaintexts)
                consume(encrypt_homomorphic(pk, x).blocks.front());
        });
        row.dec_total_ms = measure_ms(opts.repetitions, [&] {
            for (const auto& c : ciphertexts) consume(decrypt(sk, c));
        });
        row.agg_dec_total_ms = measure_ms(opts.repetitions, [&] {
            consume(decrypt(sk, aggregate(ciphertexts)));
        });
        report.rows.push_back(row);
    }
    return report;
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << "n_items,enc_total_ms,dec_total_ms,agg_dec_total_ms\n";
    for (const auto& row : rows)
        out << row.n_items << ',' << row.enc_total_ms << ','
            << row.dec_total_ms << ',' << row.agg_dec_total_ms << '\n';
    return out.str();
}

std::string Report::to_markdown() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "r=" << parity_bits << ", seed=" << seed << ", " << environment
        << "\n\n";
    out << "Encryption time (ms)\n\n";
    out << "| items | homomorphic encrypt, total |\n|---|---|\n";
    for (const auto& row : rows)
        out << "| " << row.n_items << " | " << row.enc_total_ms << " |\n";
    out << "\nDecryption time (ms)\n\n";
    out << "| items | per-item decrypt, total | aggregate + one decrypt |\n"
        << "|---|---|---|\n";
    for (const auto& row : rows)
        out << "| " << row.n_items << " | " << row.dec_total_ms << " | "
            << row.agg_dec_total_ms << " |\n";
    return out.str();
}

} // namespace xhe::bench
