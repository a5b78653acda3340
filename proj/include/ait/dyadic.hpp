#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace ait {

// Exact dyadic rational num / 2^exp, normalized so num is odd or zero.
// Program probabilities and Kraft sums are accumulated in this type so the
// inequality checks are exact, never floating-point. The numerator is a
// 128-bit integer with an explicit overflow guard; every limit admissible
// under the default enumeration work budget stays far below it.
class dyadic {
public:
    using uint128 = unsigned __int128;

    dyadic() = default;

    static dyadic zero() { return dyadic{}; }
    static dyadic one() { return dyadic{1, 0}; }

    // 2^-k
    static dyadic pow2_negative(unsigned k) {
        if (k > max_exponent) throw error("dyadic exponent out of range");
        return dyadic{1, k};
    }

    static dyadic from_ratio(uint128 numerator, unsigned pow2_exponent) {
        if (pow2_exponent > max_exponent) throw error("dyadic exponent out of range");
        dyadic d{numerator, pow2_exponent};
        d.normalize();
        return d;
    }

    uint128 numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }

    dyadic& operator+=(const dyadic& other) {
        const unsigned e = std::max(exp_, other.exp_);
        const uint128 a = shifted(num_, e - exp_);
        const uint128 b = shifted(other.num_, e - other.exp_);
        if (a > ~b) throw error("dyadic addition overflow");
        num_ = a + b;
        exp_ = e;
        normalize();
        return *this;
    }

    friend dyadic operator+(dyadic a, const dyadic& b) {
        a += b;
        return a;
    }

    friend bool operator==(const dyadic& a, const dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_; // both normalized
    }

    friend bool operator<(const dyadic& a, const dyadic& b) {
        const unsigned e = std::max(a.exp_, b.exp_);
        return shifted(a.num_, e - a.exp_) < shifted(b.num_, e - b.exp_);
    }

    friend bool operator<=(const dyadic& a, const dyadic& b) { return !(b < a); }

    bool less_equal_one() const { return num_ <= shifted(1, exp_); }

    double to_double() const {
        const auto hi = static_cast<std::uint64_t>(num_ >> 64);
        const auto lo = static_cast<std::uint64_t>(num_);
        const double n = std::ldexp(static_cast<double>(hi), 64) + static_cast<double>(lo);
        return std::ldexp(n, -static_cast<int>(exp_));
    }

    // Canonical text form "num/2^exp", e.g. "7/2^4", "1/2^0", "0/2^0".
    std::string to_fraction_text() const {
        return decimal_digits(num_) + "/2^" + std::to_string(exp_);
    }

private:
    static constexpr unsigned max_exponent = 120;

    dyadic(uint128 num, unsigned exp) : num_(num), exp_(exp) { normalize(); }

    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    static uint128 shifted(uint128 v, unsigned by) {
        if (by >= 128 || (by > 0 && (v >> (128 - by)) != 0))
            throw error("dyadic shift overflow");
        return v << by;
    }

    static std::string decimal_digits(uint128 v) {
        if (v == 0) return "0";
        std::string s;
        while (v != 0) {
            s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
            v /= 10;
        }
        return std::string(s.rbegin(), s.rend());
    }

    uint128 num_ = 0;
    unsigned exp_ = 0;
};

} // namespace ait
