#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include <json.hpp>

#include "subprocess.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli() {
    const char* path = std::getenv("AIT_CLI");
    REQUIRE(path != nullptr);
    return testproc::shell_quote(path);
}

testproc::run_result run_cli(const std::string& args) { return testproc::run(cli() + " " + args); }

struct temp_dir {
    fs::path path;
    temp_dir() {
        path = fs::temp_directory_path() /
               ("ait_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~temp_dir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream os(p, std::ios::binary);
    os << content;
}

std::string read_file(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("cli: k emits the documented JSON") {
    const auto r = run_cli("k --machine A --string 1010 --limit 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"k\":8,\"witness\":\"10011100\",\"status\":\"Exact\"}\n");

    // The default limit is the literal bound, which keeps the result Exact.
    const auto defaulted = run_cli("k --machine A --string 1010");
    CHECK(defaulted.output == r.output);

    const auto missing = run_cli("k --machine A --string 1010 --limit 6");
    CHECK(missing.exit_code == 0);
    const auto j = json::parse(missing.output);
    CHECK(j["k"].is_null());
    CHECK(j["status"] == "NoProgramWithin(6)");
}

TEST_CASE("cli: prob and kraft print exact fractions") {
    const auto r = run_cli("prob --machine A --string \"\" --limit 20");
    CHECK(r.exit_code == 0);
    const auto j = json::parse(r.output);
    CHECK(j["fraction"] == "349525/2^20");
    CHECK(std::abs(j["decimal"].get<double>() - 1.0 / 3.0) < 1.0 / (1 << 18));

    const auto kraft = run_cli("kraft --machine A --limit 4");
    const auto jk = json::parse(kraft.output);
    CHECK(jk["fraction"] == "7/2^4");
    CHECK(jk["le_one"] == true);
}

TEST_CASE("cli: cond and info") {
    const auto cond = run_cli("cond --string 111 --given 111 --limit 9");
    CHECK(json::parse(cond.output)["k"] == 6);

    const auto info = run_cli("info --string 111 --given 111 --limit 15");
    const auto j = json::parse(info.output);
    CHECK(j["k_x"] == 12);
    CHECK(j["k_x_given_y"] == 6);
    CHECK(j["information"] == 6);
}

TEST_CASE("cli: entropy and sfcode") {
    temp_dir dir;
    const auto dist = dir.path / "dist.csv";
    write_file(dist, "symbol,probability\na,0.5\nb,0.25\nc,0.25\n");

    const auto r = run_cli("entropy --dist " + testproc::shell_quote(dist.string()));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"entropy_bits\":1.5}\n");

    const auto sf = run_cli("sfcode --dist " + testproc::shell_quote(dist.string()));
    const auto j = json::parse(sf.output);
    CHECK(j["expected_length_bits"] == 1.5);
    CHECK(j["kraft_fraction"] == "1/2^0");
    CHECK(j["kraft_decimal"] == 1.0);
    CHECK(j["kraft_le_one"] == true);
    CHECK(j["prefix_free"] == true);
    CHECK(j["codebook"][0]["codeword"] == "0");

    const auto tsv = run_cli("sfcode --dist " + testproc::shell_quote(dist.string()) + " --tsv");
    CHECK(tsv.output == "a\t1\t0\nb\t2\t10\nc\t2\t11\n");
}

TEST_CASE("cli: structure subcommands") {
    const auto tsv = run_cli("structfn --string 000 --n 3 --tsv");
    CHECK(tsv.exit_code == 0);
    std::string expected;
    for (int alpha = 0; alpha <= 9; ++alpha)
        expected += std::to_string(alpha) + "\tinf\t-\n";
    expected += "10\t2\t10101010\n11\t2\t10101010\n";
    for (int alpha = 12; alpha <= 17; ++alpha)
        expected += std::to_string(alpha) + "\t1\t10001000\n";
    expected += "18\t0\t10000000\n";
    CHECK(tsv.output == expected);

    const auto mss = run_cli("mss --string 000 --n 3 --slack 8");
    const auto j = json::parse(mss.output);
    CHECK(j["alpha_star"] == 10);
    CHECK(j["k_x"] == 8);
    CHECK(j["h_at"] == 2.0);

    const auto rand = run_cli("randreport --string 000 --n 3 --slack 8");
    const auto jr = json::parse(rand.output);
    CHECK(jr["label"] == "positive-sense-candidate");
    CHECK(jr["curve"].size() == 19);

    // Bounded mode is allowed past the exact-mode cap and flags itself.
    const auto bounded = run_cli("structfn --string 0101 --n 4 --bounded --limit 20");
    CHECK(bounded.exit_code == 0);
    const auto jb = json::parse(bounded.output);
    CHECK(jb["mode"] == "bounded");
    CHECK(jb["points"].back()["h"] == 0.0);

    const auto ktable = run_cli("ktable --machine A --n 1 --tsv");
    CHECK(ktable.output == "0\t4\t0100\tExact\n1\t4\t1000\tExact\n");
}

TEST_CASE("cli: lz codec file round-trip and reports") {
    temp_dir dir;
    const auto input = dir.path / "input.bin";
    const auto code = dir.path / "code.bin";
    const auto back = dir.path / "back.bin";
    write_file(input, "abracadabra abracadabra abracadabra");

    const auto enc = run_cli("lz-encode --file " + testproc::shell_quote(input.string()) +
                             " --out " + testproc::shell_quote(code.string()));
    CHECK(enc.exit_code == 0);
    const auto j = json::parse(enc.output);
    CHECK(j["input_bytes"] == 35);
    CHECK(j["encoded_bits"] == j["upper_bound_bits"]);

    const auto dec = run_cli("lz-decode --file " + testproc::shell_quote(code.string()) +
                             " --out " + testproc::shell_quote(back.string()));
    CHECK(dec.exit_code == 0);
    CHECK(read_file(back) == read_file(input));

    const auto est = run_cli("estimate --file " + testproc::shell_quote(input.string()) +
                             " --cdec 10");
    const auto je = json::parse(est.output);
    CHECK(je["upper_bound_bits"].get<std::uint64_t>() ==
          je["encoded_bits"].get<std::uint64_t>() + 10);

    // Inline hex input for binary-unsafe shells.
    const auto hex = run_cli("estimate --hex 414141414141");
    CHECK(json::parse(hex.output)["input_bytes"] == 6);

    const auto cmp = run_cli("compare --file " + testproc::shell_quote(input.string()) +
                             " --file2 " + testproc::shell_quote(input.string()));
    const auto jc = json::parse(cmp.output);
    CHECK(jc["difference"] == 0);
    CHECK(jc["ratio"] == 1.0);
}

TEST_CASE("cli: enumerate dump, save, load") {
    temp_dir dir;
    const auto cache = dir.path / "table.cache";

    const auto fresh = run_cli("enumerate --machine A --limit 6 --tsv");
    CHECK(fresh.exit_code == 0);
    CHECK(fresh.output.rfind("machine=A limit=6 aux=-\n", 0) == 0);

    const auto saved = run_cli("enumerate --machine A --limit 6 --tsv --save " +
                               testproc::shell_quote(cache.string()));
    CHECK(saved.exit_code == 0);
    CHECK(read_file(cache) == fresh.output);

    const auto loaded = run_cli("enumerate --load " + testproc::shell_quote(cache.string()) +
                                " --tsv");
    CHECK(loaded.exit_code == 0);
    CHECK(loaded.output == fresh.output);

    const auto json_out = run_cli("enumerate --machine A --limit 6");
    const auto j = json::parse(json_out.output);
    CHECK(j["machine"] == "A");
    CHECK(j["count"] == j["entries"].size());

    // Conditional tables carry their aux in the header.
    const auto cond = run_cli("enumerate --machine Acond --aux 10 --limit 6 --tsv");
    CHECK(cond.output.rfind("machine=Acond limit=6 aux=10\n", 0) == 0);
}

TEST_CASE("cli: determinism across runs and worker counts") {
    const char* commands[] = {
        "k --machine A --string 1010 --limit 12",
        "prob --machine A --string \"\" --limit 20",
        "structfn --string 000 --n 3",
        "randreport --string 000 --n 3 --slack 8",
    };
    for (const auto* command : commands) {
        const auto first = run_cli(command);
        const auto second = run_cli(command);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
    }

    const auto serial = run_cli("enumerate --machine B --limit 14 --workers 1 --tsv");
    const auto parallel = run_cli("enumerate --machine B --limit 14 --workers 4 --tsv");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("cli: exit codes and stream separation") {
    // Usage errors: 3.
    CHECK(run_cli("").exit_code == 3);
    CHECK(run_cli("k --machine A").exit_code == 3);              // missing --string
    CHECK(run_cli("k --machine Z --string 1").exit_code == 3);   // bad choice
    CHECK(run_cli("nonsense").exit_code == 3);
    CHECK(run_cli("enumerate --machine A").exit_code == 3);      // missing --limit

    // Domain errors: 1, with nothing on the data stream.
    const auto bad_bits = run_cli("k --machine A --string 012");
    CHECK(bad_bits.exit_code == 1);
    CHECK(bad_bits.output.empty());

    temp_dir dir;
    const auto dist = dir.path / "bad.csv";
    write_file(dist, "symbol,probability\na,0.5\nb,0.4\n");
    CHECK(run_cli("entropy --dist " + testproc::shell_quote(dist.string())).exit_code == 1);

    const auto junk = dir.path / "junk.bin";
    write_file(junk, "zz");
    CHECK(run_cli("lz-decode --file " + testproc::shell_quote(junk.string()) + " --out " +
                  testproc::shell_quote((dir.path / "out.bin").string()))
              .exit_code == 1);

    // Resource errors: 2.
    CHECK(run_cli("k --machine A --string 1010 --budget 4").exit_code == 2);
    CHECK(run_cli("structfn --string 0101 --n 4").exit_code == 2); // exact mode cap

    // Help goes to stdout and succeeds.
    const auto help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("k") != std::string::npos);
}
