#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitstring.hpp"
#include "errors.hpp"

namespace ait::lz78 {

// ============================================================================
// Bit-exact LZ78 codec
// ============================================================================
// The code layout is pinned so the reported size is a reproducible number:
// a 32-bit big-endian input byte length, then one token per parsed phrase.
// The t-th token (1-based) spends exactly ceil(log2 t) bits on its dictionary
// index (zero bits when t = 1) followed by 8 literal bits; the final token
// omits the literal when the input ends exactly at a dictionary phrase.

using byte_string = std::vector<std::uint8_t>;

struct token {
    std::uint32_t index = 0;            // 0 = empty phrase
    std::optional<std::uint8_t> literal; // absent only in the final token
    friend bool operator==(const token&, const token&) = default;
};

// Greedy longest-match parse. The dictionary starts with only the empty
// phrase; each literal-carrying token t creates phrase t = phrase(index) +
// literal.
inline std::vector<token> parse(const byte_string& input) {
    std::vector<std::unordered_map<std::uint8_t, std::uint32_t>> children(1);
    std::vector<token> tokens;
    std::uint32_t node = 0;
    for (const std::uint8_t byte : input) {
        const auto it = children[node].find(byte);
        if (it != children[node].end()) {
            node = it->second;
            continue;
        }
        tokens.push_back({node, byte});
        children[node].emplace(byte, static_cast<std::uint32_t>(children.size()));
        children.emplace_back();
        node = 0;
    }
    if (node != 0) tokens.push_back({node, std::nullopt});
    return tokens;
}

namespace detail {

inline void append_uint(bit_string& code, std::uint64_t value, std::size_t width) {
    for (std::size_t i = width; i-- > 0;) code.push_back(((value >> i) & 1u) != 0);
}

// ceil(log2 t) for t >= 1
inline std::size_t index_width(std::uint64_t t) {
    return static_cast<std::size_t>(std::bit_width(t - 1));
}

struct parsed_code {
    bit_string code;
    std::uint64_t phrase_count = 0;
};

inline parsed_code encode_with_count(const byte_string& input) {
    if (input.size() > 0xFFFFFFFFull)
        throw domain_error("input longer than 2^32 - 1 bytes cannot be encoded");
    const auto tokens = parse(input);
    parsed_code result;
    result.phrase_count = tokens.size();
    append_uint(result.code, input.size(), 32);
    std::uint64_t t = 1;
    for (const auto& tok : tokens) {
        append_uint(result.code, tok.index, index_width(t));
        if (tok.literal) append_uint(result.code, *tok.literal, 8);
        ++t;
    }
    return result;
}

} // namespace detail

inline bit_string encode(const byte_string& input) {
    return detail::encode_with_count(input).code;
}

// Inverse of encode. With allow_byte_padding the code may carry up to seven
// trailing zero bits (a byte-aligned emission); anything else trailing is an
// error, as are truncation and phrases that overshoot the header length.
inline byte_string decode(const bit_string& code, bool allow_byte_padding = false) {
    std::size_t cursor = 0;
    auto read = [&](std::size_t width) -> std::uint64_t {
        if (cursor + width > code.size())
            throw domain_error("malformed code: truncated");
        const std::uint64_t v = code.read_bits(cursor, width);
        cursor += width;
        return v;
    };

    const std::uint64_t total = read(32);
    struct phrase_ref {
        std::uint32_t parent;
        std::uint8_t literal;
    };
    std::vector<phrase_ref> dict{{0, 0}}; // slot 0 = empty phrase
    std::vector<std::uint32_t> lengths{0};

    byte_string out;
    out.reserve(total);
    std::uint64_t t = 1;
    while (out.size() < total) {
        const std::uint64_t index = read(detail::index_width(t));
        if (index >= dict.size())
            throw domain_error("malformed code: phrase index out of range");

        std::vector<std::uint8_t> phrase(lengths[index]);
        std::uint32_t walk = static_cast<std::uint32_t>(index);
        for (std::size_t i = phrase.size(); i-- > 0;) {
            phrase[i] = dict[walk].literal;
            walk = dict[walk].parent;
        }

        if (out.size() + phrase.size() == total) {
            out.insert(out.end(), phrase.begin(), phrase.end());
            break; // final token carries no literal
        }
        if (out.size() + phrase.size() > total)
            throw domain_error("malformed code: phrase overshoots the declared length");

        const auto literal = static_cast<std::uint8_t>(read(8));
        out.insert(out.end(), phrase.begin(), phrase.end());
        out.push_back(literal);
        dict.push_back({static_cast<std::uint32_t>(index), literal});
        lengths.push_back(lengths[index] + 1);
        ++t;
    }

    if (allow_byte_padding) {
        if (code.size() - cursor >= 8)
            throw domain_error("malformed code: trailing bits");
        for (std::size_t i = cursor; i < code.size(); ++i)
            if (code.bit(i)) throw domain_error("malformed code: nonzero padding");
    } else if (cursor != code.size()) {
        throw domain_error("malformed code: trailing bits");
    }
    return out;
}

// Computable upper bound on description length: the exact emitted code size
// plus a caller-supplied decompressor constant (default 0; it cancels in
// comparisons).
struct estimate_report {
    std::uint64_t input_bytes = 0;
    std::uint64_t encoded_bits = 0;
    std::uint64_t phrase_count = 0;
    std::uint64_t upper_bound_bits = 0;
};

inline estimate_report upper_bound(const byte_string& input, std::uint64_t c_dec = 0) {
    const auto parsed = detail::encode_with_count(input);
    estimate_report r;
    r.input_bytes = input.size();
    r.encoded_bits = parsed.code.size();
    r.phrase_count = parsed.phrase_count;
    r.upper_bound_bits = r.encoded_bits + c_dec;
    return r;
}

struct comparison {
    estimate_report bound_x;
    estimate_report bound_y;
    long long difference = 0; // bound_x - bound_y, in bits
    double ratio = 1.0;       // bound_x / bound_y
};

inline comparison compare_information(const byte_string& x, const byte_string& y,
                                      std::uint64_t c_dec = 0) {
    comparison c;
    c.bound_x = upper_bound(x, c_dec);
    c.bound_y = upper_bound(y, c_dec);
    c.difference = static_cast<long long>(c.bound_x.upper_bound_bits) -
                   static_cast<long long>(c.bound_y.upper_bound_bits);
    c.ratio = static_cast<double>(c.bound_x.upper_bound_bits) /
              static_cast<double>(c.bound_y.upper_bound_bits);
    return c;
}

} // namespace ait::lz78
