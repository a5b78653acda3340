#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "machine.hpp"

namespace ait::complexity {

// Materialized enumeration: exactly the HaltedExact programs of length up to
// `limit`, in (length, lexicographic) order. Immutable once built and safe to
// share across threads.
struct program_table {
    struct entry {
        bit_string program;
        bit_string output;
        friend bool operator==(const entry&, const entry&) = default;
    };

    machines::machine_id machine = machines::machine_id::A;
    std::size_t limit = 0;
    std::optional<bit_string> aux;
    std::vector<entry> entries;
    // HALT-terminated candidates whose output tripped the cap: excluded from
    // complexity and probability accounting, counted here instead.
    std::size_t cap_exceeded_count = 0;
};

struct enumeration_options {
    // Cap on the naive candidate count 2^(limit+1); exceeding it is an
    // explicit resource error, never a silent truncation.
    std::size_t work_budget = std::size_t{1} << 26;
    unsigned workers = 1;
    machines::step_limits limits{};
};

inline void check_work_budget(std::size_t limit, std::size_t budget) {
    if (limit >= 62 || ((std::size_t{1} << (limit + 1)) - 2) > budget)
        throw resource_error("enumerating 2^(limit+1) candidates exceeds the work budget");
}

namespace detail {

// Depth-first walk over decodable programs: every codeword string that ends
// at its first HALT and fits in `limit` bits is visited exactly once. Since
// the opcode tables are prefix-free, these are the only candidates that can
// reach HaltedExact; everything else is HaltedEarly or OutOfBits.
template <typename Visit>
void walk_programs(const machines::opcode_table& table, std::size_t limit,
                   bit_string& prefix, const Visit& visit) {
    for (const auto& op : table.entries) {
        if (prefix.size() + op.width > limit) continue;
        const std::size_t mark = prefix.size();
        for (std::size_t i = op.width; i-- > 0;)
            prefix.push_back(((op.bits >> i) & 1u) != 0);
        if (op.insn == machines::instruction::halt)
            visit(prefix);
        else
            walk_programs(table, limit, prefix, visit);
        prefix.truncate(mark);
    }
}

struct chunk_result {
    std::vector<program_table::entry> entries;
    std::size_t cap_exceeded = 0;
};

inline chunk_result collect_subtree(machines::machine_id m, const machines::opcode& first,
                                    std::size_t limit, const machines::step_limits& limits,
                                    const std::optional<bit_string>& aux) {
    chunk_result result;
    auto visit = [&](const bit_string& candidate) {
        auto outcome = machines::run(m, candidate, limits, aux);
        if (auto* exact = machines::as_halted_exact(outcome))
            result.entries.push_back({candidate, exact->output});
        else if (std::holds_alternative<machines::output_cap_exceeded>(outcome))
            ++result.cap_exceeded;
    };
    if (first.width > limit) return result;
    bit_string prefix;
    for (std::size_t i = first.width; i-- > 0;)
        prefix.push_back(((first.bits >> i) & 1u) != 0);
    if (first.insn == machines::instruction::halt)
        visit(prefix);
    else
        walk_programs(machines::table_for(m), limit, prefix, visit);
    return result;
}

} // namespace detail

// Enumerate every HaltedExact program of length <= limit. With workers > 1
// the search is partitioned by leading codeword; the final (length, lex) sort
// makes the result bit-identical to a sequential run.
inline program_table enumerate_halting(machines::machine_id m, std::size_t limit,
                                       const enumeration_options& opt = {},
                                       const std::optional<bit_string>& aux = std::nullopt) {
    if (limit < 1) throw domain_error("enumeration limit must be at least 1");
    if (machines::takes_aux(m) != aux.has_value())
        throw domain_error("auxiliary input is required exactly when enumerating Acond");
    check_work_budget(limit, opt.work_budget);

    program_table table;
    table.machine = m;
    table.limit = limit;
    table.aux = aux;

    const auto& optable = machines::table_for(m);
    if (opt.workers <= 1) {
        auto visit = [&](const bit_string& candidate) {
            auto outcome = machines::run(m, candidate, opt.limits, aux);
            if (auto* exact = machines::as_halted_exact(outcome))
                table.entries.push_back({candidate, exact->output});
            else if (std::holds_alternative<machines::output_cap_exceeded>(outcome))
                ++table.cap_exceeded_count;
        };
        bit_string prefix;
        detail::walk_programs(optable, limit, prefix, visit);
    } else {
        std::vector<std::future<detail::chunk_result>> futures;
        futures.reserve(optable.entries.size());
        for (const auto& first : optable.entries)
            futures.push_back(std::async(std::launch::async, detail::collect_subtree, m,
                                         first, limit, opt.limits, aux));
        for (auto& f : futures) {
            auto chunk = f.get();
            table.cap_exceeded_count += chunk.cap_exceeded;
            table.entries.insert(table.entries.end(),
                                 std::make_move_iterator(chunk.entries.begin()),
                                 std::make_move_iterator(chunk.entries.end()));
        }
    }

    std::sort(table.entries.begin(), table.entries.end(),
              [](const program_table::entry& a, const program_table::entry& b) {
                  return a.program < b.program;
              });
    return table;
}

// ----------------------------------------------------------------------------
// Cache file: line-oriented text. Header `machine=<A|B|Acond> limit=<bits>
// aux=<bits or ->`, then one `<program-bits><TAB><output-bits>` line per
// entry in (length, lex) order.
// ----------------------------------------------------------------------------

inline void save_program_table(const program_table& table, std::ostream& os) {
    os << "machine=" << machines::name(table.machine) << " limit=" << table.limit << " aux="
       << (table.aux ? table.aux->to_text() : std::string("-")) << "\n";
    for (const auto& e : table.entries)
        os << e.program.to_text() << '\t' << e.output.to_text() << '\n';
}

inline void save_program_table(const program_table& table, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw domain_error("cannot open cache file for writing: " + path.string());
    save_program_table(table, os);
}

// Reload a cache file. The loader re-validates a deterministic 1% sample
// (every 100th entry) by re-execution and checks the (length, lex) order of
// all entries.
inline program_table load_program_table(std::istream& is,
                                        const machines::step_limits& limits = {}) {
    std::string header;
    if (!std::getline(is, header)) throw domain_error("cache file is empty");
    if (!header.empty() && header.back() == '\r') header.pop_back();

    std::istringstream hs(header);
    std::string machine_field, limit_field, aux_field;
    if (!(hs >> machine_field >> limit_field >> aux_field) ||
        machine_field.rfind("machine=", 0) != 0 || limit_field.rfind("limit=", 0) != 0 ||
        aux_field.rfind("aux=", 0) != 0)
        throw domain_error("malformed cache header: " + header);

    program_table table;
    const auto m = machines::machine_from_name(machine_field.substr(8));
    if (!m) throw domain_error("unknown machine in cache header");
    table.machine = *m;
    try {
        table.limit = std::stoull(limit_field.substr(6));
    } catch (const std::exception&) {
        throw domain_error("malformed limit in cache header");
    }
    const std::string aux_text = aux_field.substr(4);
    if (aux_text != "-") table.aux = bit_string::from_text(aux_text);
    if (machines::takes_aux(table.machine) != table.aux.has_value())
        throw domain_error("cache header aux does not match the machine");

    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw domain_error("malformed cache entry (missing tab): " + line);
        program_table::entry e{bit_string::from_text(line.substr(0, tab)),
                               bit_string::from_text(line.substr(tab + 1))};
        if (e.program.size() > table.limit)
            throw domain_error("cache entry exceeds the declared limit");
        table.entries.push_back(std::move(e));
    }

    for (std::size_t i = 0; i + 1 < table.entries.size(); ++i)
        if (!(table.entries[i].program < table.entries[i + 1].program))
            throw domain_error("cache entries are not in (length, lex) order");

    for (std::size_t i = 0; i < table.entries.size(); i += 100) {
        auto outcome = machines::run(table.machine, table.entries[i].program, limits, table.aux);
        auto* exact = machines::as_halted_exact(outcome);
        if (!exact || exact->output != table.entries[i].output)
            throw domain_error("cache validation failed: entry does not re-execute to its output");
    }
    return table;
}

inline program_table load_program_table(const std::filesystem::path& path,
                                        const machines::step_limits& limits = {}) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw domain_error("cannot open cache file: " + path.string());
    return load_program_table(is, limits);
}

} // namespace ait::complexity
