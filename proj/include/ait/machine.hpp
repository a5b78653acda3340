#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "bitstring.hpp"
#include "errors.hpp"

namespace ait::machines {

// ============================================================================
// Toy total prefix machines
// ============================================================================
// Three tiny interpreters over bit programs. Codewords are read left to right
// on demand, so a program is exactly the bits it consumes; the opcode tables
// are prefix-free, which makes decoding unambiguous and the set of halting
// programs prefix-free by construction. All machines are total: every
// candidate bit string resolves to one of four outcomes in finite time.

enum class machine_id { A, B, Acond };

inline std::string_view name(machine_id m) {
    switch (m) {
    case machine_id::A: return "A";
    case machine_id::B: return "B";
    default: return "Acond";
    }
}

inline std::optional<machine_id> machine_from_name(std::string_view s) {
    if (s == "A") return machine_id::A;
    if (s == "B") return machine_id::B;
    if (s == "Acond") return machine_id::Acond;
    return std::nullopt;
}

// Only Acond consumes an auxiliary input.
inline bool takes_aux(machine_id m) { return m == machine_id::Acond; }

enum class instruction : std::uint8_t { halt, out0, out1, dbl, cpy_all, cpy_one };

struct opcode {
    std::uint8_t bits;  // codeword value, big-endian
    std::uint8_t width; // codeword length in bits
    instruction insn;

    bit_string codeword() const { return bit_string::from_uint(bits, width); }
};

struct opcode_table {
    machine_id id;
    std::vector<opcode> entries;

    // No codeword is a proper prefix of another (pairwise check).
    bool is_prefix_free() const {
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = 0; j < entries.size(); ++j) {
                if (i == j) continue;
                const auto& a = entries[i];
                const auto& b = entries[j];
                if (a.width < b.width && (b.bits >> (b.width - a.width)) == a.bits)
                    return false;
            }
        return true;
    }
};

// Normative instruction encodings. On Acond the two unassigned 3-bit codes
// ("110" and "111") complete no codeword, so any program reaching them is
// rejected the same way as running out of bits.
inline const opcode_table& table_for(machine_id m) {
    static const opcode_table a{machine_id::A,
                                {{0b00, 2, instruction::halt},
                                 {0b01, 2, instruction::out0},
                                 {0b10, 2, instruction::out1},
                                 {0b11, 2, instruction::dbl}}};
    static const opcode_table b{machine_id::B,
                                {{0b0, 1, instruction::halt},
                                 {0b10, 2, instruction::out0},
                                 {0b110, 3, instruction::out1},
                                 {0b111, 3, instruction::dbl}}};
    static const opcode_table acond{machine_id::Acond,
                                    {{0b000, 3, instruction::halt},
                                     {0b001, 3, instruction::out0},
                                     {0b010, 3, instruction::out1},
                                     {0b011, 3, instruction::dbl},
                                     {0b100, 3, instruction::cpy_all},
                                     {0b101, 3, instruction::cpy_one}}};
    switch (m) {
    case machine_id::A: return a;
    case machine_id::B: return b;
    default: return acond;
    }
}

// Safety cap on the output tape; DBL grows the output geometrically.
struct step_limits {
    std::size_t max_output_bits = std::size_t{1} << 20;
};

// HALT executed with every program bit consumed.
struct halted_exact {
    bit_string output;
    std::size_t ops_executed = 0;
    friend bool operator==(const halted_exact&, const halted_exact&) = default;
};

// HALT executed while bits remained; bits_consumed < |program|.
struct halted_early {
    std::size_t bits_consumed = 0;
    friend bool operator==(const halted_early&, const halted_early&) = default;
};

// Bits exhausted mid-decode or before HALT, a CPY1 past the end of the
// auxiliary input, or an unassigned Acond codeword.
struct out_of_bits {
    friend bool operator==(const out_of_bits&, const out_of_bits&) = default;
};

// Output would exceed the cap; excluded from complexity and probability
// accounting and counted separately.
struct output_cap_exceeded {
    friend bool operator==(const output_cap_exceeded&, const output_cap_exceeded&) = default;
};

using execution_outcome =
    std::variant<halted_exact, halted_early, out_of_bits, output_cap_exceeded>;

struct decoded {
    instruction insn;
    std::size_t next_cursor;
};

// Decode the next codeword at `cursor`. Returns nothing when the remaining
// bits complete no codeword of the machine's table.
inline std::optional<decoded> decode_next(machine_id m, const bit_string& program,
                                          std::size_t cursor) {
    for (const auto& op : table_for(m).entries) {
        if (cursor + op.width > program.size()) continue;
        if (program.read_bits(cursor, op.width) == op.bits)
            return decoded{op.insn, cursor + op.width};
    }
    return std::nullopt;
}

// Interpret `program` on machine `m`. Deterministic; aux must be present
// exactly when m = Acond. CPYALL appends the whole auxiliary input; CPY1
// appends the next unread auxiliary bit (a cursor over aux advances).
inline execution_outcome run(machine_id m, const bit_string& program,
                             const step_limits& limits = {},
                             const std::optional<bit_string>& aux = std::nullopt) {
    if (takes_aux(m) != aux.has_value())
        throw domain_error("auxiliary input is required exactly when running machine Acond");
    if (limits.max_output_bits < 1)
        throw domain_error("max_output_bits must be at least 1");

    bit_string output;
    std::size_t cursor = 0;
    std::size_t ops = 0;
    std::size_t aux_cursor = 0;

    for (;;) {
        const auto d = decode_next(m, program, cursor);
        if (!d) return out_of_bits{};
        cursor = d->next_cursor;
        ++ops;
        switch (d->insn) {
        case instruction::halt:
            if (cursor == program.size()) return halted_exact{std::move(output), ops};
            return halted_early{cursor};
        case instruction::out0:
            if (output.size() + 1 > limits.max_output_bits) return output_cap_exceeded{};
            output.push_back(false);
            break;
        case instruction::out1:
            if (output.size() + 1 > limits.max_output_bits) return output_cap_exceeded{};
            output.push_back(true);
            break;
        case instruction::dbl:
            if (output.size() * 2 > limits.max_output_bits) return output_cap_exceeded{};
            output.self_double();
            break;
        case instruction::cpy_all:
            if (output.size() + aux->size() > limits.max_output_bits)
                return output_cap_exceeded{};
            output.append(*aux);
            break;
        case instruction::cpy_one:
            if (aux_cursor >= aux->size()) return out_of_bits{};
            if (output.size() + 1 > limits.max_output_bits) return output_cap_exceeded{};
            output.push_back(aux->bit(aux_cursor++));
            break;
        }
    }
}

struct validity {
    bool valid = false;
    execution_outcome outcome;
};

// A candidate is a valid program iff it runs to HaltedExact.
inline validity is_valid_program(machine_id m, const bit_string& candidate,
                                 const step_limits& limits = {},
                                 const std::optional<bit_string>& aux = std::nullopt) {
    auto outcome = run(m, candidate, limits, aux);
    const bool ok = std::holds_alternative<halted_exact>(outcome);
    return validity{ok, std::move(outcome)};
}

inline const halted_exact* as_halted_exact(const execution_outcome& o) {
    return std::get_if<halted_exact>(&o);
}

} // namespace ait::machines
