#pragma once

#include <cstdint>
#include <vector>

#include "bitstring.hpp"

namespace ait {

// xorshift64* with the documented update rule
//   state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
//   output = state * 0x2545F4914F6CDD1D
// Used for every seeded input in the demos and tests so results are
// reproducible bit for bit. State must be nonzero; a zero seed falls back to
// the default seed.
class xorshift64star {
public:
    static constexpr std::uint64_t default_seed = 0x9E3779B97F4A7C15ull;

    explicit xorshift64star(std::uint64_t seed = default_seed)
        : state_(seed != 0 ? seed : default_seed) {}

    std::uint64_t next_u64() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // Top bits of the output word, which are the strongest.
    std::uint8_t next_byte() { return static_cast<std::uint8_t>(next_u64() >> 56); }
    bool next_bit() { return (next_u64() >> 63) != 0; }

    // Uniform in [0, 1) with 53 significant bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    std::vector<std::uint8_t> bytes(std::size_t count) {
        std::vector<std::uint8_t> out(count);
        for (auto& b : out) b = next_byte();
        return out;
    }

    bit_string bits(std::size_t count) {
        bit_string out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(next_bit());
        return out;
    }

private:
    std::uint64_t state_;
};

} // namespace ait
