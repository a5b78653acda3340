// Command-line entry point for the toolkit: one subcommand per library
// operation, deterministic JSON (fixed key order) or TSV output, program
// table cache management, and the LZ78 estimator over files.
//
// Exit codes: 0 success, 1 domain error, 2 resource error, 3 usage error.
// Diagnostics go to stderr, never into the data stream.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ait/ait.hpp"

using ordered_json = nlohmann::ordered_json;
namespace mc = ait::machines;
namespace cx = ait::complexity;
namespace st = ait::structure;
namespace sh = ait::shannon;
namespace lz = ait::lz78;

namespace {

std::string double_text(double v) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

mc::machine_id machine_from_flag(const std::string& name) {
    return *mc::machine_from_name(name); // choices enforced by CLI11
}

ordered_json report_json(const cx::complexity_report& r) {
    ordered_json j;
    if (r.witness) {
        j["k"] = r.value_bits;
        j["witness"] = r.witness->to_text();
    } else {
        j["k"] = nullptr;
        j["witness"] = nullptr;
    }
    j["status"] = r.status_text();
    return j;
}

ordered_json accumulator_json(const cx::probability_accumulator& p) {
    ordered_json j;
    j["fraction"] = p.partial_sum.to_fraction_text();
    j["decimal"] = p.partial_sum.to_double();
    return j;
}

ordered_json point_json(const st::structure_point& p) {
    ordered_json j;
    j["alpha"] = p.alpha;
    if (p.h) {
        j["h"] = *p.h;
        j["witness"] = st::bitmap_encode(*p.witness).to_text();
    } else {
        j["h"] = nullptr;
        j["witness"] = nullptr;
    }
    return j;
}

void print_curve_tsv(const st::structure_curve& curve) {
    for (const auto& p : curve.points) {
        std::cout << p.alpha << '\t' << (p.h ? double_text(*p.h) : std::string("inf")) << '\t'
                  << (p.witness ? st::bitmap_encode(*p.witness).to_text() : std::string("-"))
                  << '\n';
    }
}

lz::byte_string read_stream_bytes(std::istream& is) {
    return lz::byte_string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

lz::byte_string read_file_bytes(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ait::domain_error("cannot open file: " + path);
    return read_stream_bytes(is);
}

lz::byte_string bytes_from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw ait::domain_error("hex input must have even length");
    lz::byte_string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = nibble(hex[i]);
        const int lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw ait::domain_error("invalid hex digit in input");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

// --file PATH, --hex HEX, or standard input.
lz::byte_string gather_input(const std::string& file, const std::string& hex, bool hex_set) {
    if (hex_set) return bytes_from_hex(hex);
    if (!file.empty()) return read_file_bytes(file);
    return read_stream_bytes(std::cin);
}

void write_file_bytes(const std::string& path, const lz::byte_string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ait::domain_error("cannot open file for writing: " + path);
    os.write(reinterpret_cast<const char*>(data.data()),
             static_cast<std::streamsize>(data.size()));
}

// Code emission pads to a byte boundary with zero bits; the decoder recovers
// the padding length from the 32-bit header.
lz::byte_string pack_code(const ait::bit_string& code) {
    lz::byte_string bytes((code.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code.bit(i)) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return bytes;
}

ait::bit_string unpack_code(const lz::byte_string& bytes) {
    ait::bit_string code;
    code.reserve(bytes.size() * 8);
    for (const std::uint8_t b : bytes)
        for (int i = 7; i >= 0; --i) code.push_back(((b >> i) & 1u) != 0);
    return code;
}

ordered_json estimate_json(const lz::estimate_report& r) {
    ordered_json j;
    j["input_bytes"] = r.input_bytes;
    j["encoded_bits"] = r.encoded_bits;
    j["phrase_count"] = r.phrase_count;
    j["upper_bound_bits"] = r.upper_bound_bits;
    return j;
}

struct search_flags {
    std::size_t workers = 1;
    std::size_t budget = std::size_t{1} << 26;

    cx::enumeration_options options() const {
        cx::enumeration_options opt;
        opt.workers = static_cast<unsigned>(workers);
        opt.work_budget = budget;
        return opt;
    }
};

void add_search_flags(CLI::App* sub, search_flags& flags) {
    sub->add_option("--workers", flags.workers, "parallel enumeration workers (default 1)");
    sub->add_option("--budget", flags.budget,
                    "work budget in candidate strings (default 2^26)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale algorithmic information laboratory over toy prefix machines"};
    app.require_subcommand(1);

    const auto machine_choice = CLI::IsMember({"A", "B"});
    const auto any_machine_choice = CLI::IsMember({"A", "B", "Acond"});

    // ---- k ------------------------------------------------------------
    auto* k_cmd = app.add_subcommand("k", "exact Kolmogorov complexity of a bit string");
    struct {
        std::string machine = "A";
        std::string bits;
        std::int64_t limit = -1;
        search_flags search;
    } k_args;
    k_cmd->add_option("--machine", k_args.machine)->check(machine_choice);
    k_cmd->add_option("--string", k_args.bits, "target bits ('0'/'1' text)")->required();
    k_cmd->add_option("--limit", k_args.limit, "search limit in bits (default: literal bound)");
    add_search_flags(k_cmd, k_args.search);
    k_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(k_args.bits);
        const auto m = machine_from_flag(k_args.machine);
        const std::size_t limit = k_args.limit >= 0
                                      ? static_cast<std::size_t>(k_args.limit)
                                      : cx::literal_program(m, x).size();
        emit(report_json(cx::kolmogorov(x, m, limit, k_args.search.options())));
    });

    // ---- ktable --------------------------------------------------------
    auto* ktable_cmd = app.add_subcommand("ktable", "complexity table over all of {0,1}^n");
    struct {
        std::string machine = "A";
        std::size_t n = 0;
        std::int64_t limit = -1;
        bool tsv = false;
        search_flags search;
    } ktable_args;
    ktable_cmd->add_option("--machine", ktable_args.machine)->check(machine_choice);
    ktable_cmd->add_option("--n", ktable_args.n, "string length")->required();
    ktable_cmd->add_option("--limit", ktable_args.limit);
    ktable_cmd->add_flag("--tsv", ktable_args.tsv, "TSV output");
    add_search_flags(ktable_cmd, ktable_args.search);
    ktable_cmd->callback([&] {
        const auto m = machine_from_flag(ktable_args.machine);
        const std::size_t limit = ktable_args.limit >= 0
                                      ? static_cast<std::size_t>(ktable_args.limit)
                                      : cx::literal_length_bound(m, ktable_args.n);
        const auto rows =
            cx::complexity_table(m, ktable_args.n, limit, ktable_args.search.options());
        if (ktable_args.tsv) {
            for (const auto& row : rows)
                std::cout << row.x.to_text() << '\t'
                          << (row.report.witness ? std::to_string(row.report.value_bits)
                                                 : std::string("-"))
                          << '\t'
                          << (row.report.witness ? row.report.witness->to_text()
                                                 : std::string("-"))
                          << '\t' << row.report.status_text() << '\n';
            return;
        }
        ordered_json j;
        j["machine"] = ktable_args.machine;
        j["n"] = ktable_args.n;
        j["limit"] = limit;
        ordered_json rows_json = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r = report_json(row.report);
            ordered_json item;
            item["x"] = row.x.to_text();
            item["k"] = r["k"];
            item["witness"] = r["witness"];
            item["status"] = r["status"];
            rows_json.push_back(std::move(item));
        }
        j["rows"] = std::move(rows_json);
        emit(j);
    });

    // ---- prob ----------------------------------------------------------
    auto* prob_cmd =
        app.add_subcommand("prob", "algorithmic probability: sum of 2^-|p| over programs for x");
    struct {
        std::string machine = "A";
        std::string bits;
        std::size_t limit = 0;
        search_flags search;
    } prob_args;
    prob_cmd->add_option("--machine", prob_args.machine)->check(machine_choice);
    prob_cmd->add_option("--string", prob_args.bits)->required();
    prob_cmd->add_option("--limit", prob_args.limit)->required();
    add_search_flags(prob_cmd, prob_args.search);
    prob_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(prob_args.bits);
        emit(accumulator_json(cx::algorithmic_probability(
            x, machine_from_flag(prob_args.machine), prob_args.limit,
            prob_args.search.options())));
    });

    // ---- kraft ----------------------------------------------------------
    auto* kraft_cmd = app.add_subcommand("kraft", "Kraft sum over all halting programs");
    struct {
        std::string machine = "A";
        std::size_t limit = 0;
        search_flags search;
    } kraft_args;
    kraft_cmd->add_option("--machine", kraft_args.machine)->check(machine_choice);
    kraft_cmd->add_option("--limit", kraft_args.limit)->required();
    add_search_flags(kraft_cmd, kraft_args.search);
    kraft_cmd->callback([&] {
        const auto sum = cx::kraft_sum(machine_from_flag(kraft_args.machine), kraft_args.limit,
                                       kraft_args.search.options());
        ordered_json j = accumulator_json(sum);
        j["le_one"] = sum.partial_sum.less_equal_one();
        emit(j);
    });

    // ---- cond -----------------------------------------------------------
    auto* cond_cmd = app.add_subcommand("cond", "conditional complexity K(x/y) on machine Acond");
    struct {
        std::string bits;
        std::string given;
        std::int64_t limit = -1;
        search_flags search;
    } cond_args;
    cond_cmd->add_option("--string", cond_args.bits, "target x")->required();
    cond_cmd->add_option("--given", cond_args.given, "auxiliary input y");
    cond_cmd->add_option("--limit", cond_args.limit);
    add_search_flags(cond_cmd, cond_args.search);
    cond_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(cond_args.bits);
        const auto y = ait::bit_string::from_text(cond_args.given);
        const std::size_t limit = cond_args.limit >= 0
                                      ? static_cast<std::size_t>(cond_args.limit)
                                      : 3 * x.size() + 3;
        emit(report_json(cx::conditional_kolmogorov(x, y, limit, cond_args.search.options())));
    });

    // ---- info -----------------------------------------------------------
    auto* info_cmd =
        app.add_subcommand("info", "information I(y:x) = K(x/empty) - K(x/y) on machine Acond");
    struct {
        std::string bits;
        std::string given;
        std::int64_t limit = -1;
        search_flags search;
    } info_args;
    info_cmd->add_option("--string", info_args.bits, "target x")->required();
    info_cmd->add_option("--given", info_args.given, "source y");
    info_cmd->add_option("--limit", info_args.limit);
    add_search_flags(info_cmd, info_args.search);
    info_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(info_args.bits);
        const auto y = ait::bit_string::from_text(info_args.given);
        const std::size_t limit = info_args.limit >= 0
                                      ? static_cast<std::size_t>(info_args.limit)
                                      : 3 * x.size() + 3;
        const auto r = cx::mutual_information(y, x, limit, info_args.search.options());
        ordered_json j;
        j["k_x"] = r.k_x.witness ? ordered_json(r.k_x.value_bits) : ordered_json(nullptr);
        j["k_x_given_y"] =
            r.k_x_given_y.witness ? ordered_json(r.k_x_given_y.value_bits) : ordered_json(nullptr);
        j["information"] = (r.k_x.witness && r.k_x_given_y.witness)
                               ? ordered_json(r.information)
                               : ordered_json(nullptr);
        j["status_x"] = r.k_x.status_text();
        j["status_given"] = r.k_x_given_y.status_text();
        emit(j);
    });

    // ---- entropy ----------------------------------------------------------
    auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy of a distribution file");
    struct {
        std::string dist;
    } entropy_args;
    entropy_cmd->add_option("--dist", entropy_args.dist, "CSV with header symbol,probability")
        ->required();
    entropy_cmd->callback([&] {
        ordered_json j;
        j["entropy_bits"] = sh::entropy(sh::distribution_from_csv(entropy_args.dist));
        emit(j);
    });

    // ---- sfcode -------------------------------------------------------------
    auto* sfcode_cmd =
        app.add_subcommand("sfcode", "canonical Shannon-Fano codebook with Kraft/prefix checks");
    struct {
        std::string dist;
        bool tsv = false;
    } sfcode_args;
    sfcode_cmd->add_option("--dist", sfcode_args.dist)->required();
    sfcode_cmd->add_flag("--tsv", sfcode_args.tsv);
    sfcode_cmd->callback([&] {
        const auto d = sh::distribution_from_csv(sfcode_args.dist);
        const auto book = sh::shannon_fano(d);
        if (sfcode_args.tsv) {
            for (const auto& e : book.entries)
                std::cout << e.symbol << '\t' << e.length << '\t' << e.codeword.to_text() << '\n';
            return;
        }
        const auto kraft = sh::kraft_check(book);
        const auto prefix = sh::prefix_free_check(book);
        ordered_json j;
        j["entropy_bits"] = sh::entropy(d);
        j["expected_length_bits"] = sh::expected_length(book, d);
        j["kraft_fraction"] = kraft.sum.to_fraction_text();
        j["kraft_decimal"] = kraft.sum.to_double();
        j["kraft_le_one"] = kraft.satisfied;
        j["prefix_free"] = prefix.prefix_free;
        ordered_json entries = ordered_json::array();
        for (const auto& e : book.entries) {
            ordered_json item;
            item["symbol"] = e.symbol;
            item["length"] = e.length;
            item["codeword"] = e.codeword.to_text();
            entries.push_back(std::move(item));
        }
        j["codebook"] = std::move(entries);
        emit(j);
    });

    // ---- structfn -------------------------------------------------------------
    auto* structfn_cmd =
        app.add_subcommand("structfn", "structure function h_x(alpha) over finite-set models");
    struct {
        std::string bits;
        std::int64_t n = -1;
        std::int64_t limit = -1;
        bool bounded = false;
        bool tsv = false;
        search_flags search;
    } structfn_args;
    structfn_cmd->add_option("--string", structfn_args.bits)->required();
    structfn_cmd->add_option("--n", structfn_args.n, "universe width (default |x|)");
    structfn_cmd->add_option("--limit", structfn_args.limit);
    structfn_cmd->add_flag("--bounded", structfn_args.bounded,
                           "allow upper-bound model costs (required beyond n = 3)");
    structfn_cmd->add_flag("--tsv", structfn_args.tsv);
    add_search_flags(structfn_cmd, structfn_args.search);
    structfn_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(structfn_args.bits);
        const std::size_t n =
            structfn_args.n >= 0 ? static_cast<std::size_t>(structfn_args.n) : x.size();
        st::structure_options opt;
        opt.bounded = structfn_args.bounded;
        if (structfn_args.limit >= 0) opt.limit = static_cast<std::size_t>(structfn_args.limit);
        opt.enum_opts = structfn_args.search.options();
        const auto curve = st::structure_function(x, n, opt);
        if (structfn_args.tsv) {
            print_curve_tsv(curve);
            return;
        }
        ordered_json j;
        j["x"] = x.to_text();
        j["n"] = n;
        j["mode"] = curve.exact ? "exact" : "bounded";
        j["alpha_max"] = curve.alpha_max;
        ordered_json points = ordered_json::array();
        for (const auto& p : curve.points) points.push_back(point_json(p));
        j["points"] = std::move(points);
        emit(j);
    });

    // ---- mss ---------------------------------------------------------------
    auto* mss_cmd = app.add_subcommand("mss", "minimal sufficient statistic from the exact curve");
    struct {
        std::string bits;
        std::int64_t n = -1;
        std::size_t slack = 8;
        search_flags search;
    } mss_args;
    mss_cmd->add_option("--string", mss_args.bits)->required();
    mss_cmd->add_option("--n", mss_args.n);
    mss_cmd->add_option("--slack", mss_args.slack, "two-part slack in bits (default 8)");
    add_search_flags(mss_cmd, mss_args.search);
    mss_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(mss_args.bits);
        const std::size_t n = mss_args.n >= 0 ? static_cast<std::size_t>(mss_args.n) : x.size();
        st::structure_options opt;
        opt.enum_opts = mss_args.search.options();
        const auto r = st::minimal_sufficient_statistic(x, n, mss_args.slack, opt);
        ordered_json j;
        j["x"] = x.to_text();
        j["n"] = n;
        j["slack"] = r.slack_used;
        j["k_x"] = r.k_x;
        j["found"] = r.found;
        if (r.found) {
            j["alpha_star"] = r.alpha_star;
            j["h_at"] = r.h_at;
            j["sophistication"] = r.sophistication;
            j["witness"] = st::bitmap_encode(*r.witness).to_text();
        } else {
            j["alpha_star"] = nullptr;
            j["h_at"] = nullptr;
            j["sophistication"] = nullptr;
            j["witness"] = nullptr;
        }
        emit(j);
    });

    // ---- randreport -------------------------------------------------------
    auto* rand_cmd =
        app.add_subcommand("randreport", "curve plus positive/negative-sense randomness labels");
    struct {
        std::string bits;
        std::int64_t n = -1;
        std::size_t slack = 8;
        std::size_t pos_window = 2;
        double pos_h_offset = 1.0;
        std::size_t neg_margin = 2;
        search_flags search;
    } rand_args;
    rand_cmd->add_option("--string", rand_args.bits)->required();
    rand_cmd->add_option("--n", rand_args.n);
    rand_cmd->add_option("--slack", rand_args.slack);
    rand_cmd->add_option("--pos-window", rand_args.pos_window,
                         "alpha window for the positive-sense label (default 2)");
    rand_cmd->add_option("--pos-h-offset", rand_args.pos_h_offset,
                         "h_at >= n - offset for the positive-sense label (default 1)");
    rand_cmd->add_option("--neg-margin", rand_args.neg_margin,
                         "alpha* within margin of k_x for the negative-sense label (default 2)");
    add_search_flags(rand_cmd, rand_args.search);
    rand_cmd->callback([&] {
        const auto x = ait::bit_string::from_text(rand_args.bits);
        const std::size_t n = rand_args.n >= 0 ? static_cast<std::size_t>(rand_args.n) : x.size();
        st::randomness_thresholds thresholds{rand_args.pos_window, rand_args.pos_h_offset,
                                             rand_args.neg_margin};
        st::structure_options opt;
        opt.enum_opts = rand_args.search.options();
        const auto record = st::randomness_report(x, n, rand_args.slack, thresholds, opt);
        ordered_json j;
        j["x"] = x.to_text();
        j["n"] = n;
        j["slack"] = rand_args.slack;
        j["k_x"] = record.k_x;
        j["alpha_star"] =
            record.mss.found ? ordered_json(record.mss.alpha_star) : ordered_json(nullptr);
        j["h_at"] = record.mss.found ? ordered_json(record.mss.h_at) : ordered_json(nullptr);
        j["label"] = record.label;
        ordered_json points = ordered_json::array();
        for (const auto& p : record.curve.points) points.push_back(point_json(p));
        j["curve"] = std::move(points);
        emit(j);
    });

    // ---- lz-encode ----------------------------------------------------------
    auto* lzenc_cmd = app.add_subcommand("lz-encode", "LZ78-encode bytes to a padded bit stream");
    struct {
        std::string file;
        std::string hex;
        std::string out;
    } lzenc_args;
    lzenc_cmd->add_option("--file", lzenc_args.file, "input path (default: stdin)");
    auto* lzenc_hex = lzenc_cmd->add_option("--hex", lzenc_args.hex, "inline hex bytes");
    lzenc_cmd->add_option("--out", lzenc_args.out, "output path (default: raw code on stdout)");
    lzenc_cmd->callback([&] {
        const auto input =
            gather_input(lzenc_args.file, lzenc_args.hex, lzenc_hex->count() > 0);
        const auto code = lz::encode(input);
        const auto packed = pack_code(code);
        if (lzenc_args.out.empty()) {
            std::cout.write(reinterpret_cast<const char*>(packed.data()),
                            static_cast<std::streamsize>(packed.size()));
            return;
        }
        write_file_bytes(lzenc_args.out, packed);
        emit(estimate_json(lz::upper_bound(input)));
    });

    // ---- lz-decode ----------------------------------------------------------
    auto* lzdec_cmd = app.add_subcommand("lz-decode", "decode an LZ78 bit stream back to bytes");
    struct {
        std::string file;
        std::string out;
    } lzdec_args;
    lzdec_cmd->add_option("--file", lzdec_args.file, "code path (default: stdin)");
    lzdec_cmd->add_option("--out", lzdec_args.out, "output path (default: raw bytes on stdout)");
    lzdec_cmd->callback([&] {
        const auto packed = lzdec_args.file.empty() ? read_stream_bytes(std::cin)
                                                    : read_file_bytes(lzdec_args.file);
        const auto output = lz::decode(unpack_code(packed), /*allow_byte_padding=*/true);
        if (lzdec_args.out.empty()) {
            std::cout.write(reinterpret_cast<const char*>(output.data()),
                            static_cast<std::streamsize>(output.size()));
            return;
        }
        write_file_bytes(lzdec_args.out, output);
        ordered_json j;
        j["output_bytes"] = output.size();
        emit(j);
    });

    // ---- estimate -------------------------------------------------------------
    auto* estimate_cmd =
        app.add_subcommand("estimate", "LZ78 upper bound on the information content of bytes");
    struct {
        std::string file;
        std::string hex;
        std::uint64_t c_dec = 0;
    } estimate_args;
    estimate_cmd->add_option("--file", estimate_args.file, "input path (default: stdin)");
    auto* estimate_hex = estimate_cmd->add_option("--hex", estimate_args.hex);
    estimate_cmd->add_option("--cdec", estimate_args.c_dec,
                             "decompressor constant added to the bound (default 0)");
    estimate_cmd->callback([&] {
        const auto input =
            gather_input(estimate_args.file, estimate_args.hex, estimate_hex->count() > 0);
        emit(estimate_json(lz::upper_bound(input, estimate_args.c_dec)));
    });

    // ---- compare -------------------------------------------------------------
    auto* compare_cmd =
        app.add_subcommand("compare", "compare the information bounds of two byte inputs");
    struct {
        std::string file;
        std::string file2;
        std::uint64_t c_dec = 0;
    } compare_args;
    compare_cmd->add_option("--file", compare_args.file)->required();
    compare_cmd->add_option("--file2", compare_args.file2)->required();
    compare_cmd->add_option("--cdec", compare_args.c_dec);
    compare_cmd->callback([&] {
        const auto c = lz::compare_information(read_file_bytes(compare_args.file),
                                               read_file_bytes(compare_args.file2),
                                               compare_args.c_dec);
        ordered_json j;
        j["bound_x"] = c.bound_x.upper_bound_bits;
        j["bound_y"] = c.bound_y.upper_bound_bits;
        j["difference"] = c.difference;
        j["ratio"] = c.ratio;
        emit(j);
    });

    // ---- enumerate -------------------------------------------------------------
    auto* enum_cmd =
        app.add_subcommand("enumerate", "dump or reload the halting-program table");
    struct {
        std::string machine = "A";
        std::string aux;
        std::size_t limit = 0;
        std::string save;
        std::string load;
        bool tsv = false;
        search_flags search;
    } enum_args;
    enum_cmd->add_option("--machine", enum_args.machine)->check(any_machine_choice);
    auto* enum_aux =
        enum_cmd->add_option("--aux", enum_args.aux, "auxiliary input (Acond only)");
    auto* enum_limit = enum_cmd->add_option("--limit", enum_args.limit);
    auto* enum_save = enum_cmd->add_option("--save", enum_args.save, "write the cache file");
    auto* enum_load = enum_cmd->add_option("--load", enum_args.load, "reload a cache file");
    enum_save->excludes(enum_load);
    enum_cmd->add_flag("--tsv", enum_args.tsv, "emit the cache text format");
    add_search_flags(enum_cmd, enum_args.search);
    enum_cmd->callback([&] {
        cx::program_table table;
        if (enum_load->count() > 0) {
            table = cx::load_program_table(std::filesystem::path(enum_args.load));
        } else {
            if (enum_limit->count() == 0)
                throw CLI::RequiredError("--limit (unless --load is given)");
            const auto m = *mc::machine_from_name(enum_args.machine);
            std::optional<ait::bit_string> aux;
            if (enum_aux->count() > 0) aux = ait::bit_string::from_text(enum_args.aux);
            table = cx::enumerate_halting(m, enum_args.limit, enum_args.search.options(), aux);
        }
        if (enum_save->count() > 0)
            cx::save_program_table(table, std::filesystem::path(enum_args.save));
        if (enum_args.tsv) {
            cx::save_program_table(table, std::cout);
            return;
        }
        ordered_json j;
        j["machine"] = mc::name(table.machine);
        j["limit"] = table.limit;
        j["aux"] = table.aux ? ordered_json(table.aux->to_text()) : ordered_json(nullptr);
        j["count"] = table.entries.size();
        ordered_json entries = ordered_json::array();
        for (const auto& e : table.entries) {
            ordered_json item;
            item["program"] = e.program.to_text();
            item["output"] = e.output.to_text();
            entries.push_back(std::move(item));
        }
        j["entries"] = std::move(entries);
        emit(j);
    });

    // ---- genrandom -------------------------------------------------------------
    auto* genrandom_cmd =
        app.add_subcommand("genrandom", "write seeded xorshift64* bytes (for demos)");
    struct {
        std::size_t n = 0;
        std::uint64_t seed = ait::xorshift64star::default_seed;
        std::string out;
    } genrandom_args;
    genrandom_cmd->add_option("--n", genrandom_args.n, "byte count")->required();
    genrandom_cmd->add_option("--seed", genrandom_args.seed, "64-bit seed");
    genrandom_cmd->add_option("--out", genrandom_args.out)->required();
    genrandom_cmd->callback([&] {
        ait::xorshift64star rng(genrandom_args.seed);
        write_file_bytes(genrandom_args.out, rng.bytes(genrandom_args.n));
        ordered_json j;
        j["bytes"] = genrandom_args.n;
        j["seed"] = genrandom_args.seed;
        emit(j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    } catch (const ait::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ait::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
