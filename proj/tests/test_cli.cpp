// Drives the installed binary end to end through a shell. The binary
// path arrives via XHE_CLI_PATH (set by ctest).
#include "doctest.h"

#ifndef _WIN32

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "xhe/codec.hpp"
#include "xhe/rng.hpp"

namespace fs = std::filesystem;
using namespace xhe;

namespace {

std::string cli() {
    const char* path = std::getenv("XHE_CLI_PATH");
    REQUIRE_MESSAGE(path != nullptr, "XHE_CLI_PATH must point at the binary");
    return path;
}

int run(const std::string& args) {
    const std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

struct Workspace {
    fs::path dir;

    Workspace() {
        dir = fs::temp_directory_path() /
              ("xhe_cli_" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }

    std::string p(const std::string& name) const { return (dir / name).string(); }

    std::string random_file(const std::string& name, std::size_t size,
                            std::uint64_t seed) const {
        Rng rng(seed);
        std::vector<std::uint8_t> bytes(size);
        for (auto& b : bytes) b = std::uint8_t(rng.below(256));
        codec::write_file(p(name), bytes);
        return p(name);
    }
};

} // namespace

TEST_CASE("keygen is deterministic and validates r") {
    Workspace ws;
    CHECK(run("keygen --r 3 --seed 7 --out " + ws.p("a")) == 0);
    CHECK(run("keygen --r 3 --seed 7 --out " + ws.p("b")) == 0);
    CHECK(codec::read_file(ws.p("a.xsk")) == codec::read_file(ws.p("b.xsk")));
    CHECK(codec::read_file(ws.p("a.xpk")) == codec::read_file(ws.p("b.xpk")));
    CHECK(run("keygen --r 3 --seed 8 --out " + ws.p("c")) == 0);
    CHECK(codec::read_file(ws.p("a.xpk")) != codec::read_file(ws.p("c.xpk")));

    CHECK(run("keygen --r 1 --seed 0 --out " + ws.p("bad")) == 2);
    CHECK(run("keygen --r 17 --seed 0 --out " + ws.p("bad")) == 2);
    CHECK(run("keygen --seed 0 --out " + ws.p("bad")) == 2); // --r required
}

TEST_CASE("classic encrypt decrypt roundtrip on a binary file") {
    Workspace ws;
    REQUIRE(run("keygen --r 3 --seed 1 --out " + ws.p("k")) == 0);
    const std::string input = ws.random_file("msg.bin", 1024, 99);
    CHECK(run("encrypt --pk " + ws.p("k.xpk") + " --in " + input +
              " --mode classic --seed 5 --out " + ws.p("msg.xct")) == 0);
    CHECK(run("decrypt --sk " + ws.p("k.xsk") + " --in " + ws.p("msg.xct") +
              " --out " + ws.p("back.bin")) == 0);
    CHECK(codec::read_file(input) == codec::read_file(ws.p("back.bin")));
}

TEST_CASE("pipeline aggregate reproduces the xor of the inputs") {
    Workspace ws;
    REQUIRE(run("keygen --r 4 --seed 2 --out " + ws.p("k")) == 0);
    std::vector<std::uint8_t> fold(64, 0);
    std::string agg_inputs;
    for (int i = 0; i < 3; ++i) {
        const std::string name = "m" + std::to_string(i);
        const std::string input = ws.random_file(name + ".bin", 64, 7 + i);
        const std::vector<std::uint8_t> bytes = codec::read_file(input);
        for (std::size_t j = 0; j < fold.size(); ++j) fold[j] ^= bytes[j];
        REQUIRE(run("encrypt --pk " + ws.p("k.xpk") + " --in " + input +
                    " --mode homo --out " + ws.p(name + ".xct")) == 0);
        agg_inputs += " " + ws.p(name + ".xct");
    }
    CHECK(run("aggregate --in" + agg_inputs + " --out " + ws.p("agg.xct")) == 0);
    CHECK(run("decrypt --sk " + ws.p("k.xsk") + " --in " + ws.p("agg.xct") +
              " --out " + ws.p("fold.bin")) == 0);
    CHECK(codec::read_file(ws.p("fold.bin")) == fold);
}

TEST_CASE("aggregating a single file reproduces its payload") {
    Workspace ws;
    REQUIRE(run("keygen --r 3 --seed 3 --out " + ws.p("k")) == 0);
    const std::string input = ws.random_file("m.bin", 16, 1);
    REQUIRE(run("encrypt --pk " + ws.p("k.xpk") + " --in " + input +
                " --mode homo --out " + ws.p("m.xct")) == 0);
    CHECK(run("aggregate --in " + ws.p("m.xct") + " --out " + ws.p("same.xct")) == 0);
    CHECK(codec::read_file(ws.p("m.xct")) == codec::read_file(ws.p("same.xct")));
}

TEST_CASE("error paths map to distinct exit codes") {
    Workspace ws;
    REQUIRE(run("keygen --r 3 --seed 1 --out " + ws.p("k1")) == 0);
    REQUIRE(run("keygen --r 3 --seed 2 --out " + ws.p("k2")) == 0);
    const std::string input = ws.random_file("m.bin", 32, 5);
    REQUIRE(run("encrypt --pk " + ws.p("k1.xpk") + " --in " + input +
                " --mode classic --out " + ws.p("m.xct")) == 0);
    REQUIRE(run("encrypt --pk " + ws.p("k1.xpk") + " --in " + input +
                " --mode homo --out " + ws.p("h.xct")) == 0);

    // wrong key -> 3
    CHECK(run("decrypt --sk " + ws.p("k2.xsk") + " --in " + ws.p("m.xct") +
              " --out " + ws.p("no.bin")) == 3);
    // classic ciphertexts cannot be aggregated -> 2
    CHECK(run("aggregate --in " + ws.p("m.xct") + " " + ws.p("m.xct") +
              " --out " + ws.p("no.xct")) == 2);
    // mode mix -> 2
    CHECK(run("aggregate --in " + ws.p("m.xct") + " " + ws.p("h.xct") +
              " --out " + ws.p("no.xct")) == 2);
    // cross-key aggregation -> 3
    REQUIRE(run("encrypt --pk " + ws.p("k2.xpk") + " --in " + input +
                " --mode homo --out " + ws.p("h2.xct")) == 0);
    CHECK(run("aggregate --in " + ws.p("h.xct") + " " + ws.p("h2.xct") +
              " --out " + ws.p("no.xct")) == 3);

    // corrupt private key -> 4
    std::vector<std::uint8_t> sk_bytes = codec::read_file(ws.p("k1.xsk"));
    sk_bytes[45] ^= 0x10;
    codec::write_file(ws.p("bad.xsk"), sk_bytes);
    CHECK(run("decrypt --sk " + ws.p("bad.xsk") + " --in " + ws.p("m.xct") +
              " --out " + ws.p("no.bin")) == 4);

    // unreadable input -> 5
    CHECK(run("decrypt --sk " + ws.p("k1.xsk") + " --in " + ws.p("absent.xct") +
              " --out " + ws.p("no.bin")) == 5);

    // bad usage -> 2
    CHECK(run("encrypt --pk " + ws.p("k1.xpk") + " --in " + input +
              " --mode sideways --out " + ws.p("no.xct")) == 2);
    CHECK(run("frobnicate") == 2);
}

TEST_CASE("selftest command passes") {
    CHECK(run("selftest") == 0);
}

TEST_CASE("bench command emits a csv and validates sizes") {
    Workspace ws;
    CHECK(run("bench --sizes 5,10 --csv " + ws.p("rows.csv")) == 0);
    const std::vector<std::uint8_t> csv = codec::read_file(ws.p("rows.csv"));
    const std::string text(csv.begin(), csv.end());
    CHECK(text.find("n_items,enc_total_ms,dec_total_ms,agg_dec_total_ms") == 0);
    CHECK(text.find("\n5,") != std::string::npos);
    CHECK(text.find("\n10,") != std::string::npos);

    CHECK(run("bench --sizes 10,5") == 2);  // not ascending
    CHECK(run("bench --sizes 10,10") == 2); // not strictly ascending
}

#endif // _WIN32
