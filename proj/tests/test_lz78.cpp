#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ait/lz78.hpp"
#include "ait/rng.hpp"

using namespace ait;
using namespace ait::lz78;

namespace {

byte_string bytes_of(const std::string& s) { return byte_string(s.begin(), s.end()); }

} // namespace

TEST_CASE("parse: greedy longest-match tokens") {
    const auto tokens = parse(bytes_of("AAAA"));
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0] == token{0, 'A'});
    CHECK(tokens[1] == token{1, 'A'});
    CHECK(tokens[2] == token{1, std::nullopt});

    CHECK(parse(byte_string{}).empty());

    const auto ab = parse(bytes_of("AB"));
    REQUIRE(ab.size() == 2);
    CHECK(ab[0] == token{0, 'A'});
    CHECK(ab[1] == token{0, 'B'});

    // The last token drops its literal only when the input ends on a phrase.
    const auto aba = parse(bytes_of("ABA"));
    REQUIRE(aba.size() == 3);
    CHECK(aba[2] == token{1, std::nullopt});
}

TEST_CASE("encode: exact bit counts") {
    CHECK(encode(byte_string{}).size() == 32);
    // 32 header + (0+8) + (1+8) + 2 index-only bits
    CHECK(encode(bytes_of("AAAA")).size() == 51);

    SECTION("size accounting identity") {
        xorshift64star rng(1234);
        for (int round = 0; round < 40; ++round) {
            byte_string input;
            const std::size_t len = rng.next_below(400);
            const bool small_alphabet = rng.next_bit();
            for (std::size_t i = 0; i < len; ++i)
                input.push_back(small_alphabet ? static_cast<std::uint8_t>('a' + rng.next_below(3))
                                               : rng.next_byte());
            const auto tokens = parse(input);
            std::size_t expected = 32;
            std::uint64_t t = 1;
            for (const auto& tok : tokens) {
                expected += std::bit_width(t - 1) + (tok.literal ? 8 : 0);
                ++t;
            }
            CHECK(encode(input).size() == expected);
            CHECK(tokens.size() <= std::max<std::size_t>(input.size(), 0));
        }
    }
}

TEST_CASE("decode: inverse of encode") {
    CHECK(decode(encode(bytes_of("AB"))) == bytes_of("AB"));
    CHECK(decode(bit_string::from_uint(0, 32)).empty());

    SECTION("roundtrip over seeded and structured corpora") {
        xorshift64star rng(20240101);
        for (int round = 0; round < 300; ++round) {
            byte_string input;
            const std::size_t len = rng.next_below(600);
            switch (round % 4) {
            case 0:
                for (std::size_t i = 0; i < len; ++i) input.push_back(rng.next_byte());
                break;
            case 1:
                for (std::size_t i = 0; i < len; ++i)
                    input.push_back(static_cast<std::uint8_t>('A' + rng.next_below(2)));
                break;
            case 2:
                for (std::size_t i = 0; i < len; ++i) input.push_back('x');
                break;
            default:
                for (std::size_t i = 0; i < len; ++i)
                    input.push_back(static_cast<std::uint8_t>(i % 7));
                break;
            }
            const auto code = encode(input);
            CHECK(decode(code) == input);
            // Determinism: byte-identical code for byte-identical input.
            CHECK(encode(input) == code);
        }
    }
}

TEST_CASE("decode: malformed codes are rejected") {
    const auto code = encode(bytes_of("ABAB"));

    SECTION("truncation") {
        bit_string truncated;
        for (std::size_t i = 0; i + 1 < code.size(); ++i) truncated.push_back(code.bit(i));
        CHECK_THROWS_AS(decode(truncated), domain_error);
        CHECK_THROWS_AS(decode(bit_string::from_text("0000")), domain_error);
    }

    SECTION("trailing bits") {
        bit_string padded = code;
        padded.push_back(false);
        CHECK_THROWS_AS(decode(padded), domain_error);
        // Byte-padding mode accepts up to seven zero bits, nothing else.
        CHECK(decode(padded, true) == bytes_of("ABAB"));
        bit_string bad = code;
        bad.push_back(true);
        CHECK_THROWS_AS(decode(bad, true), domain_error);
        bit_string eight = code;
        for (int i = 0; i < 8; ++i) eight.push_back(false);
        CHECK_THROWS_AS(decode(eight, true), domain_error);
    }

    SECTION("overshoot") {
        auto push_byte = [](bit_string& s, char c) {
            for (int i = 7; i >= 0; --i) s.push_back(((c >> i) & 1) != 0);
        };
        // Header promises 4 bytes; after "A" and "AA" the third token points
        // at the two-byte phrase, overshooting the declared length.
        bit_string crafted = bit_string::from_uint(4, 32);
        push_byte(crafted, 'A');        // token 1: output "A", phrase 1 = "A"
        crafted.push_back(true);        // token 2: index 1 ("A")
        push_byte(crafted, 'A');        //          output "AAA", phrase 2 = "AA"
        crafted.push_back(true);        // token 3: index 2 ("AA"), 3 + 2 > 4
        crafted.push_back(false);
        CHECK_THROWS_AS(decode(crafted), domain_error);
    }

    SECTION("index out of range") {
        auto push_byte = [](bit_string& s, char c) {
            for (int i = 7; i >= 0; --i) s.push_back(((c >> i) & 1) != 0);
        };
        bit_string crafted = bit_string::from_uint(6, 32);
        push_byte(crafted, 'A');        // token 1: phrase 1 = "A"
        crafted.push_back(true);        // token 2: index 1
        push_byte(crafted, 'B');        //          phrase 2 = "AB"
        crafted.push_back(true);        // token 3: index 3, but only 0..2 exist
        crafted.push_back(true);
        CHECK_THROWS_AS(decode(crafted), domain_error);
    }
}

TEST_CASE("upper bounds and comparisons") {
    CHECK(upper_bound(byte_string{}).upper_bound_bits == 32);
    CHECK(upper_bound(byte_string{}, 7).upper_bound_bits == 39);

    const byte_string runs(4096, 'A');
    xorshift64star rng;
    const byte_string random = rng.bytes(4096);
    const auto bound_runs = upper_bound(runs);
    const auto bound_random = upper_bound(random);
    CHECK(bound_runs.input_bytes == 4096);
    CHECK(bound_runs.upper_bound_bits * 20 < bound_random.upper_bound_bits);

    byte_string alternating;
    for (int i = 0; i < 2048; ++i) {
        alternating.push_back('A');
        alternating.push_back('B');
    }
    CHECK(upper_bound(alternating).upper_bound_bits < bound_random.upper_bound_bits);

    const auto same = compare_information(random, random);
    CHECK(same.difference == 0);
    CHECK(same.ratio == 1.0);

    const auto empty = compare_information(byte_string{}, byte_string{});
    CHECK(empty.difference == 0);
    CHECK(empty.ratio == 1.0);

    const auto contrast = compare_information(runs, random);
    CHECK(contrast.difference < 0);
    CHECK(contrast.ratio < 0.05);
}
