#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitstring.hpp"
#include "dyadic.hpp"
#include "errors.hpp"

namespace ait::shannon {

// ============================================================================
// Entropy and canonical Shannon-Fano codes over explicit finite distributions
// ============================================================================

struct rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

struct dist_entry {
    std::string symbol;
    double probability = 0.0;
    // Exact value when the input was a fraction or a plain decimal; code
    // lengths are then computed in integer arithmetic.
    std::optional<rational> exact;
};

struct distribution {
    std::vector<dist_entry> entries;

    // All probabilities > 0, symbols unique, sum within 1e-9 of one.
    void validate() const {
        if (entries.empty()) throw domain_error("distribution has no entries");
        std::set<std::string> seen;
        long double sum = 0.0L;
        for (const auto& e : entries) {
            if (!seen.insert(e.symbol).second)
                throw domain_error("duplicate symbol in distribution: " + e.symbol);
            if (!(e.probability > 0.0) || !std::isfinite(e.probability))
                throw domain_error("probabilities must be positive: " + e.symbol);
            sum += e.probability;
        }
        if (std::fabs(static_cast<double>(sum - 1.0L)) > 1e-9)
            throw domain_error("probabilities must sum to 1 (within 1e-9)");
    }
};

namespace detail {

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace detail

// Accepts "num/den" fractions and decimal text; decimals without an exponent
// are carried exactly as num/10^d when they fit 64 bits.
inline dist_entry parse_probability(std::string symbol, std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw domain_error("empty probability for symbol " + symbol);
    dist_entry e;
    e.symbol = std::move(symbol);

    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::uint64_t num = 0, den = 0;
        try {
            std::size_t used = 0;
            num = std::stoull(std::string(text.substr(0, slash)), &used);
            if (used != slash) throw std::invalid_argument("trailing");
            den = std::stoull(std::string(text.substr(slash + 1)), &used);
            if (used != text.size() - slash - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw domain_error("malformed fraction: " + std::string(text));
        }
        if (den == 0) throw domain_error("fraction with zero denominator");
        const auto g = detail::gcd64(num == 0 ? den : num, den);
        e.exact = rational{num / g, den / g};
        e.probability = static_cast<double>(num) / static_cast<double>(den);
        return e;
    }

    try {
        std::size_t used = 0;
        e.probability = std::stod(std::string(text), &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw domain_error("malformed probability: " + std::string(text));
    }

    // Plain decimal digits[.digits] -> num / 10^d, exactly.
    const bool plain = text.find_first_not_of("0123456789.") == std::string_view::npos &&
                       std::count(text.begin(), text.end(), '.') <= 1;
    if (plain && text.size() <= 19) {
        std::uint64_t num = 0;
        std::uint64_t den = 1;
        bool after_point = false;
        for (char c : text) {
            if (c == '.') {
                after_point = true;
                continue;
            }
            num = num * 10 + static_cast<std::uint64_t>(c - '0');
            if (after_point) den *= 10;
        }
        const auto g = detail::gcd64(num == 0 ? den : num, den);
        e.exact = rational{num / g, den / g};
    }
    return e;
}

// CSV with header `symbol,probability`, one entry per line.
inline distribution distribution_from_csv(std::istream& is) {
    distribution d;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        const auto trimmed = detail::trim(line);
        if (trimmed.empty()) continue;
        if (!saw_header) {
            if (trimmed != "symbol,probability")
                throw domain_error("distribution file must start with header 'symbol,probability'");
            saw_header = true;
            continue;
        }
        const auto comma = trimmed.find(',');
        if (comma == std::string_view::npos)
            throw domain_error("malformed distribution line: " + std::string(trimmed));
        d.entries.push_back(parse_probability(std::string(detail::trim(trimmed.substr(0, comma))),
                                              trimmed.substr(comma + 1)));
    }
    if (!saw_header) throw domain_error("distribution file is empty");
    d.validate();
    return d;
}

inline distribution distribution_from_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw domain_error("cannot open distribution file: " + path.string());
    return distribution_from_csv(is);
}

// Smallest l >= 0 with p * 2^l >= 1, i.e. the Shannon-Fano length
// ceil(log2(1/p)). Exact: integer arithmetic on the fraction when present,
// otherwise derived from the binary exponent of the double.
inline std::size_t shannon_fano_length(const dist_entry& e) {
    if (e.exact) {
        const auto [num, den] = *e.exact;
        if (num == 0) throw domain_error("zero probability has no finite code length");
        if (num >= den) return 0;
        const std::uint64_t q = (den + num - 1) / num; // ceil(den/num)
        return static_cast<std::size_t>(std::bit_width(q - 1));
    }
    int exp = 0;
    std::frexp(e.probability, &exp); // p = f * 2^exp with f in [0.5, 1)
    return exp >= 1 ? 0 : static_cast<std::size_t>(1 - exp);
}

struct code_entry {
    std::string symbol;
    std::size_t length = 0;
    bit_string codeword;
};

struct code_book {
    std::vector<code_entry> entries; // input order of the distribution
};

// Canonical prefix code over the Shannon-Fano lengths: symbols sorted by
// (length, input order), codewords assigned in increasing lexicographic
// order. Kraft(lengths) <= sum(p) = 1 guarantees every codeword fits its
// declared width.
inline code_book shannon_fano(const distribution& d) {
    d.validate();
    std::vector<std::size_t> lengths;
    lengths.reserve(d.entries.size());
    for (const auto& e : d.entries) {
        const auto l = shannon_fano_length(e);
        if (l > 62) throw domain_error("probability too small for a 62-bit codeword");
        lengths.push_back(l);
    }

    std::vector<std::size_t> order(d.entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });

    code_book book;
    book.entries.resize(d.entries.size());
    std::uint64_t code = 0;
    std::size_t prev_len = lengths[order.front()];
    bool first = true;
    for (const std::size_t idx : order) {
        const std::size_t len = lengths[idx];
        if (first)
            first = false;
        else
            code = (code + 1) << (len - prev_len);
        if (len < 64 && code >> len)
            throw domain_error("code lengths overflow the Kraft budget");
        book.entries[idx] = {d.entries[idx].symbol, len, bit_string::from_uint(code, len)};
        prev_len = len;
    }
    return book;
}

// H(d) = -sum p log2 p. Terms are added in sorted order of p so the result is
// exactly permutation-invariant.
inline double entropy(const distribution& d) {
    d.validate();
    std::vector<double> ps;
    ps.reserve(d.entries.size());
    for (const auto& e : d.entries) ps.push_back(e.probability);
    std::sort(ps.begin(), ps.end());
    double h = 0.0;
    for (const double p : ps) h -= p * std::log2(p);
    return h + 0.0; // normalize -0
}

inline double expected_length(const code_book& c, const distribution& d) {
    if (c.entries.size() != d.entries.size())
        throw domain_error("codebook and distribution have different symbol sets");
    double sum = 0.0;
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (c.entries[i].symbol != d.entries[i].symbol)
            throw domain_error("codebook and distribution have different symbol sets");
        sum += d.entries[i].probability * static_cast<double>(c.entries[i].length);
    }
    return sum;
}

struct kraft_result {
    dyadic sum;
    bool satisfied = true; // sum <= 1
};

inline kraft_result kraft_check(const code_book& c) {
    dyadic sum;
    for (const auto& e : c.entries)
        sum += dyadic::pow2_negative(static_cast<unsigned>(e.length));
    const bool ok = sum.less_equal_one();
    return {sum, ok};
}

struct prefix_check_result {
    bool prefix_free = true;
    // First violating pair in (length, lex) order of the codewords.
    std::optional<std::pair<bit_string, bit_string>> violating;
};

inline prefix_check_result prefix_free_check(const code_book& c) {
    std::vector<bit_string> words;
    words.reserve(c.entries.size());
    for (const auto& e : c.entries) words.push_back(e.codeword);
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i].size() >= words[j].size()) continue;
            bool prefix = true;
            for (std::size_t k = 0; k < words[i].size(); ++k)
                if (words[i].bit(k) != words[j].bit(k)) {
                    prefix = false;
                    break;
                }
            if (prefix) return {false, std::make_pair(words[i], words[j])};
        }
    return {true, std::nullopt};
}

} // namespace ait::shannon
