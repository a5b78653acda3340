#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitstring.hpp"
#include "complexity.hpp"
#include "errors.hpp"

namespace ait::structure {

// ============================================================================
// Structure function over finite-set models of the universe {0,1}^n
// ============================================================================
// Models are nonempty subsets S of {0,1}^n, encoded as 2^n-bit indicator
// bitmaps over the lexicographic order of the universe; the model cost of S
// is the exact machine-A complexity of its bitmap. Exact mode brute-forces
// all 2^(2^n) - 1 nonempty subsets, which is why it stops at n <= 3; n = 4 is
// available as a bounded mode whose model costs are upper bounds.

struct model_set {
    std::size_t n = 0;
    std::vector<bit_string> members; // lex-sorted, unique, all of length n

    void validate() const {
        if (members.empty()) throw domain_error("model set must be nonempty");
        for (const auto& m : members)
            if (m.size() != n) throw domain_error("model set member has the wrong length");
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            if (!(members[i] < members[i + 1]))
                throw domain_error("model set members must be lex-sorted and unique");
        if (members.size() > (std::size_t{1} << n))
            throw domain_error("model set is larger than its universe");
    }

    bool contains(const bit_string& x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }

    // Lexicographic rank of x within the set.
    std::size_t index_of(const bit_string& x) const {
        const auto it = std::lower_bound(members.begin(), members.end(), x);
        if (it == members.end() || !(*it == x))
            throw domain_error("membership error: x is not in the model set");
        return static_cast<std::size_t>(it - members.begin());
    }

    static model_set from_bitmap(std::size_t n, const bit_string& bitmap) {
        if (bitmap.size() != (std::size_t{1} << n))
            throw domain_error("bitmap length must be 2^n");
        model_set s;
        s.n = n;
        for (std::size_t i = 0; i < bitmap.size(); ++i)
            if (bitmap.bit(i)) s.members.push_back(bit_string::from_uint(i, n));
        s.validate();
        return s;
    }
};

// Indicator string of length 2^n: bit i = 1 iff the i-th n-bit string (in
// lexicographic order) is a member.
inline bit_string bitmap_encode(const model_set& s) {
    s.validate();
    bit_string bitmap;
    bitmap.reserve(std::size_t{1} << s.n);
    std::size_t next = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << s.n); ++i) {
        const bool member =
            next < s.members.size() && s.members[next] == bit_string::from_uint(i, s.n);
        bitmap.push_back(member);
        if (member) ++next;
    }
    return bitmap;
}

struct structure_point {
    std::size_t alpha = 0;
    std::optional<double> h;        // log2 |S|; absent = no model within alpha
    std::optional<model_set> witness; // (h, then bitmap-lex)-minimal achiever
};

struct structure_curve {
    bit_string x;
    std::size_t n = 0;
    bool exact = true; // false when model costs are upper bounds
    std::size_t alpha_max = 0;
    std::vector<structure_point> points; // alpha = 0 .. alpha_max
};

struct structure_options {
    bool bounded = false;
    std::size_t limit = 0; // 0: the literal bound 2*2^n + 2
    complexity::enumeration_options enum_opts{};
};

namespace detail {

constexpr std::size_t exact_mode_max_n = 3;
constexpr std::size_t bounded_mode_max_n = 4;
// Deepest search the default work budget admits; bounded mode falls back to
// literal-program costs beyond it.
constexpr std::size_t bounded_default_limit = 25;

// K (or an upper bound on K) for every 2^n-bit bitmap, indexed by the
// bitmap's big-endian integer value.
struct bitmap_costs {
    std::vector<std::size_t> value;
    bool exact = true;
};

inline bitmap_costs bitmap_complexities(std::size_t n, const structure_options& opt) {
    const std::size_t universe = std::size_t{1} << n;
    const std::size_t literal = 2 * universe + 2;
    std::size_t limit = opt.limit != 0        ? opt.limit
                        : opt.bounded         ? std::min(literal, bounded_default_limit)
                                              : literal;
    if (!opt.bounded) {
        if (n > exact_mode_max_n)
            throw resource_error("exact structure-function mode supports n <= 3; request bounded mode");
        if (limit < literal)
            throw domain_error("exact mode needs limit >= 2*2^n + 2 so every bitmap cost is exact");
    } else if (n > bounded_mode_max_n) {
        throw resource_error("bounded structure-function mode supports n <= 4");
    }

    const auto rows =
        complexity::complexity_table(machines::machine_id::A, universe, limit, opt.enum_opts);
    bitmap_costs costs;
    costs.value.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& report = rows[i].report;
        if (report.is_exact()) {
            costs.value[i] = report.value_bits;
        } else {
            costs.value[i] = complexity::literal_program(machines::machine_id::A, rows[i].x).size();
            costs.exact = false;
        }
    }
    return costs;
}

} // namespace detail

// h(alpha) = min { log2 |S| : x in S, K_A(bitmap(S)) <= alpha } for
// alpha = 0 .. K_A(bitmap({x})), minimized by brute force over every nonempty
// subset of the universe that contains x.
inline structure_curve structure_function(const bit_string& x, std::size_t n,
                                          const structure_options& opt = {}) {
    if (x.size() != n) throw domain_error("x must have length n");
    const auto costs = detail::bitmap_complexities(n, opt);

    const std::size_t universe = std::size_t{1} << n;
    const std::uint64_t x_rank = n == 0 ? 0 : x.read_bits(0, n);
    // Bitmap value bit (universe - 1 - rank) corresponds to membership of x.
    const std::uint64_t x_mask = std::uint64_t{1} << (universe - 1 - x_rank);

    struct candidate {
        std::size_t cost;
        std::uint64_t size;
        std::uint64_t bitmap;
    };
    std::vector<candidate> candidates;
    candidates.reserve(std::size_t{1} << (universe - 1));
    for (std::uint64_t bitmap = 1; bitmap < (std::uint64_t{1} << universe); ++bitmap) {
        if (!(bitmap & x_mask)) continue;
        candidates.push_back({costs.value[bitmap],
                              static_cast<std::uint64_t>(std::popcount(bitmap)), bitmap});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const candidate& a, const candidate& b) { return a.cost < b.cost; });

    structure_curve curve;
    curve.x = x;
    curve.n = n;
    curve.exact = costs.exact;
    curve.alpha_max = costs.value[x_mask]; // cost of the singleton {x}

    std::size_t next = 0;
    std::optional<candidate> best;
    for (std::size_t alpha = 0; alpha <= curve.alpha_max; ++alpha) {
        while (next < candidates.size() && candidates[next].cost <= alpha) {
            const auto& c = candidates[next++];
            if (!best || c.size < best->size ||
                (c.size == best->size && c.bitmap < best->bitmap))
                best = c;
        }
        structure_point point;
        point.alpha = alpha;
        if (best) {
            point.h = std::log2(static_cast<double>(best->size));
            point.witness = model_set::from_bitmap(
                n, bit_string::from_uint(best->bitmap, universe));
        }
        curve.points.push_back(std::move(point));
    }
    return curve;
}

// Two-part description of x through a model set: exact model cost plus a
// ceil(log2 |S|)-bit index of x within S.
struct two_part_report {
    std::size_t model_bits = 0;
    std::size_t data_bits = 0;
    std::size_t total = 0;
    std::size_t index = 0;
};

inline two_part_report two_part_code(const bit_string& x, const model_set& s,
                                     const complexity::enumeration_options& opt = {}) {
    s.validate();
    const std::size_t index = s.index_of(x); // throws when x is not a member
    const bit_string bitmap = bitmap_encode(s);
    const auto report = complexity::kolmogorov(bitmap, machines::machine_id::A,
                                               2 * bitmap.size() + 2, opt);
    two_part_report r;
    r.model_bits = report.value_bits;
    r.data_bits = s.members.size() <= 1
                      ? 0
                      : static_cast<std::size_t>(std::bit_width(s.members.size() - 1));
    r.total = r.model_bits + r.data_bits;
    r.index = index;
    return r;
}

// Least alpha whose two-part cost alpha + h(alpha) is within `slack` bits of
// the one-part cost K_A(x); not found when even the singleton endpoint fails.
struct mss_report {
    bool found = false;
    std::size_t alpha_star = 0;
    double h_at = 0.0;
    std::size_t sophistication = 0; // = alpha_star
    std::size_t slack_used = 0;
    std::size_t k_x = 0;
    std::optional<model_set> witness;
};

inline std::size_t exact_k_of(const bit_string& x,
                              const complexity::enumeration_options& opt = {}) {
    const auto report = complexity::kolmogorov(
        x, machines::machine_id::A,
        complexity::literal_length_bound(machines::machine_id::A, x.size()), opt);
    return report.value_bits;
}

inline mss_report minimal_sufficient_statistic_from(const structure_curve& curve,
                                                    std::size_t k_x, std::size_t slack) {
    mss_report r;
    r.slack_used = slack;
    r.k_x = k_x;
    for (const auto& point : curve.points) {
        if (!point.h) continue;
        if (static_cast<double>(point.alpha) + *point.h <=
            static_cast<double>(k_x) + static_cast<double>(slack)) {
            r.found = true;
            r.alpha_star = point.alpha;
            r.h_at = *point.h;
            r.sophistication = point.alpha;
            r.witness = point.witness;
            break;
        }
    }
    return r;
}

inline mss_report minimal_sufficient_statistic(const bit_string& x, std::size_t n,
                                               std::size_t slack,
                                               const structure_options& opt = {}) {
    const auto curve = structure_function(x, n, opt);
    return minimal_sufficient_statistic_from(curve, exact_k_of(x, opt.enum_opts), slack);
}

// Heuristic, configurable labels; the raw curve is always the authoritative
// output.
struct randomness_thresholds {
    std::size_t positive_alpha_window = 2; // alpha* near the cheapest model
    double positive_h_offset = 1.0;        // h at alpha* at least n - offset
    std::size_t negative_margin = 2;       // alpha* within margin of k_x
};

struct randomness_record {
    bit_string x;
    std::size_t n = 0;
    std::size_t k_x = 0;
    structure_curve curve;
    mss_report mss;
    std::string label;
};

inline randomness_record randomness_report(const bit_string& x, std::size_t n, std::size_t slack,
                                           const randomness_thresholds& thresholds = {},
                                           const structure_options& opt = {}) {
    randomness_record record;
    record.x = x;
    record.n = n;
    record.curve = structure_function(x, n, opt);
    record.k_x = exact_k_of(x, opt.enum_opts);
    record.mss = minimal_sufficient_statistic_from(record.curve, record.k_x, slack);

    std::optional<std::size_t> min_finite_alpha;
    for (const auto& point : record.curve.points)
        if (point.h) {
            min_finite_alpha = point.alpha;
            break;
        }

    // Precedence: a typical element of a cheap large set reads as random in
    // the positive sense even when the model part also swallows most of K.
    if (record.mss.found && min_finite_alpha &&
        record.mss.alpha_star <= *min_finite_alpha + thresholds.positive_alpha_window &&
        record.mss.h_at >= static_cast<double>(n) - thresholds.positive_h_offset)
        record.label = "positive-sense-candidate";
    else if (record.mss.found &&
             record.mss.alpha_star + thresholds.negative_margin >= record.k_x)
        record.label = "negative-sense-candidate";
    else
        record.label = "structured";
    return record;
}

} // namespace ait::structure
