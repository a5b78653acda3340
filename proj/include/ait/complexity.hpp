#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "machine.hpp"

namespace ait::complexity {

// ============================================================================
// Exact machine-relative complexity
// ============================================================================
// Everything here is built on exhaustive enumeration of halting programs.
// Because the machines are total, a search that exhausts every program of
// length <= L without finding a witness certifies K > L.

enum class report_status { exact, upper_bound, no_program_within };

struct complexity_report {
    std::size_t value_bits = 0;
    std::optional<bit_string> witness; // present iff status is not no_program_within
    report_status status = report_status::no_program_within;
    std::size_t search_limit = 0;

    bool is_exact() const { return status == report_status::exact; }

    std::string status_text() const {
        switch (status) {
        case report_status::exact: return "Exact";
        case report_status::upper_bound: return "UpperBound";
        default: return "NoProgramWithin(" + std::to_string(search_limit) + ")";
        }
    }
};

// First (length, lex) entry whose output equals x; the table order makes the
// witness minimal and the tie-break reproducible.
inline complexity_report report_from_table(const program_table& table, const bit_string& x) {
    for (const auto& e : table.entries)
        if (e.output == x)
            return {e.program.size(), e.program, report_status::exact, table.limit};
    return {0, std::nullopt, report_status::no_program_within, table.limit};
}

inline void require_unconditional(machines::machine_id m, const char* op) {
    if (m == machines::machine_id::Acond)
        throw domain_error(std::string(op) + " runs on machine A or B; use the conditional search for Acond");
}

inline complexity_report kolmogorov(const bit_string& x, machines::machine_id m,
                                    std::size_t limit, const enumeration_options& opt = {}) {
    require_unconditional(m, "kolmogorov");
    const auto table = enumerate_halting(m, limit, opt);
    return report_from_table(table, x);
}

// Exact partial sum of 2^-|p| over enumerated halting programs.
struct probability_accumulator {
    dyadic partial_sum;
    std::size_t limit = 0;
};

inline probability_accumulator accumulate_probability(const program_table& table,
                                                      const bit_string* target) {
    dyadic sum;
    for (const auto& e : table.entries)
        if (!target || e.output == *target)
            sum += dyadic::pow2_negative(static_cast<unsigned>(e.program.size()));
    return {sum, table.limit};
}

inline probability_accumulator algorithmic_probability(const bit_string& x,
                                                       machines::machine_id m, std::size_t limit,
                                                       const enumeration_options& opt = {}) {
    require_unconditional(m, "algorithmic_probability");
    const auto table = enumerate_halting(m, limit, opt);
    return accumulate_probability(table, &x);
}

inline probability_accumulator kraft_sum(machines::machine_id m, std::size_t limit,
                                         const enumeration_options& opt = {}) {
    require_unconditional(m, "kraft_sum");
    const auto table = enumerate_halting(m, limit, opt);
    return accumulate_probability(table, nullptr);
}

// K(x/y): shortest Acond program that outputs x when y is the auxiliary input.
inline complexity_report conditional_kolmogorov(const bit_string& x, const bit_string& y,
                                                std::size_t limit,
                                                const enumeration_options& opt = {}) {
    const auto table = enumerate_halting(machines::machine_id::Acond, limit, opt, y);
    return report_from_table(table, x);
}

// I(y:x) = K(x) - K(x/y), with K(x) taken as K(x/empty) on Acond so both
// terms share one machine.
struct info_report {
    complexity_report k_x;
    complexity_report k_x_given_y;
    long long information = 0; // meaningful when both searches found witnesses
};

inline info_report mutual_information(const bit_string& y, const bit_string& x,
                                      std::size_t limit, const enumeration_options& opt = {}) {
    info_report r;
    r.k_x = conditional_kolmogorov(x, bit_string{}, limit, opt);
    r.k_x_given_y = conditional_kolmogorov(x, y, limit, opt);
    if (r.k_x.witness && r.k_x_given_y.witness)
        r.information = static_cast<long long>(r.k_x.value_bits) -
                        static_cast<long long>(r.k_x_given_y.value_bits);
    return r;
}

// The program that spells x out one bit at a time and halts.
inline bit_string literal_program(machines::machine_id m, const bit_string& x) {
    const auto& table = machines::table_for(m);
    auto codeword_for = [&](machines::instruction insn) {
        for (const auto& op : table.entries)
            if (op.insn == insn) return op.codeword();
        throw error("machine lacks the requested instruction");
    };
    const bit_string out0 = codeword_for(machines::instruction::out0);
    const bit_string out1 = codeword_for(machines::instruction::out1);
    const bit_string halt = codeword_for(machines::instruction::halt);
    bit_string p;
    for (std::size_t i = 0; i < x.size(); ++i) p.append(x.bit(i) ? out1 : out0);
    p.append(halt);
    return p;
}

// Worst-case literal length over all strings of length n.
inline std::size_t literal_length_bound(machines::machine_id m, std::size_t n) {
    switch (m) {
    case machines::machine_id::A: return 2 * n + 2;
    case machines::machine_id::B: return 3 * n + 1;
    default: return 3 * n + 3;
    }
}

// Anytime variant: exact if a witness exists within the limit, otherwise the
// literal program as an explicit upper bound.
inline complexity_report kolmogorov_upper_bound(const bit_string& x, machines::machine_id m,
                                                std::size_t limit,
                                                const enumeration_options& opt = {}) {
    require_unconditional(m, "kolmogorov_upper_bound");
    auto report = kolmogorov(x, m, limit, opt);
    if (report.witness) return report;
    bit_string literal = literal_program(m, x);
    return {literal.size(), std::move(literal), report_status::upper_bound, limit};
}

// Complete K table over {0,1}^n in lexicographic order of x; one enumeration
// serves every row.
struct table_row {
    bit_string x;
    complexity_report report;
};

inline std::vector<table_row> complexity_table_from(const program_table& table, std::size_t n) {
    if (n >= 24) throw resource_error("complexity table over {0,1}^n needs n < 24");
    std::vector<const program_table::entry*> first_witness(std::size_t{1} << n, nullptr);
    for (const auto& e : table.entries) {
        if (e.output.size() != n) continue;
        const std::uint64_t index = e.output.read_bits(0, n);
        if (!first_witness[index]) first_witness[index] = &e;
    }
    std::vector<table_row> rows;
    rows.reserve(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        table_row row{bit_string::from_uint(i, n), {}};
        if (const auto* e = first_witness[i])
            row.report = {e->program.size(), e->program, report_status::exact, table.limit};
        else
            row.report = {0, std::nullopt, report_status::no_program_within, table.limit};
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<table_row> complexity_table(machines::machine_id m, std::size_t n,
                                               std::size_t limit,
                                               const enumeration_options& opt = {}) {
    require_unconditional(m, "complexity_table");
    const auto table = enumerate_halting(m, limit, opt);
    return complexity_table_from(table, n);
}

// |{x in {0,1}^n : K(x) < m}|, from a table whose limit guarantees Exact rows.
inline std::size_t count_compressible(machines::machine_id m, std::size_t m_bits, std::size_t n,
                                      const enumeration_options& opt = {}) {
    const auto rows = complexity_table(m, n, literal_length_bound(m, n), opt);
    std::size_t count = 0;
    for (const auto& row : rows) {
        if (!row.report.is_exact())
            throw error("count_compressible requires an exact table");
        if (row.report.value_bits < m_bits) ++count;
    }
    return count;
}

} // namespace ait::complexity
