#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ait {

// Ordered finite sequence of bits: the universal currency for programs,
// machine outputs and set encodings. The empty string is valid. Canonical
// text form is a string over '0' and '1'.
class bit_string {
public:
    bit_string() = default;

    static bit_string from_text(std::string_view text) {
        bit_string s;
        s.bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw domain_error("bit string text may contain only '0' and '1'");
            s.bits_.push_back(c == '1' ? 1 : 0);
        }
        return s;
    }

    // Big-endian rendering of value in exactly `width` bits.
    static bit_string from_uint(std::uint64_t value, std::size_t width) {
        if (width < 64 && (value >> width) != 0)
            throw domain_error("value does not fit in the requested bit width");
        bit_string s;
        s.bits_.reserve(width);
        for (std::size_t i = width; i-- > 0;)
            s.bits_.push_back(static_cast<std::uint8_t>((value >> i) & 1u));
        return s;
    }

    std::string to_text() const {
        std::string out(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out[i] = '1';
        return out;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool bit(std::size_t i) const { return bits_[i] != 0; }

    void push_back(bool b) { bits_.push_back(b ? 1 : 0); }

    void append(const bit_string& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    // O := O . O
    void self_double() {
        const std::size_t n = bits_.size();
        bits_.resize(2 * n);
        for (std::size_t i = 0; i < n; ++i) bits_[n + i] = bits_[i];
    }

    void truncate(std::size_t new_size) { bits_.resize(new_size); }
    void clear() { bits_.clear(); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    // Big-endian value of bits [pos, pos+len); len <= 64.
    std::uint64_t read_bits(std::size_t pos, std::size_t len) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < len; ++i) v = (v << 1) | bits_[pos + i];
        return v;
    }

    friend bool operator==(const bit_string& a, const bit_string& b) = default;

    // Total order: by length, then lexicographic with '0' < '1'. Equal-length
    // strings compare exactly as their text forms do.
    friend bool operator<(const bit_string& a, const bit_string& b) {
        if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
        return a.bits_ < b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_; // one 0/1 per element
};

} // namespace ait
