#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pslforge/codec.hpp"
#include "test_support.hpp"

using namespace pslforge;
using codec::CodecError;

TEST_CASE("normalize strips whitespace and case") {
    CHECK(codec::normalize("d91e13e1 97ad463b") == "d91e13e197ad463b");
    CHECK(codec::normalize("1B7") == "1b7");
    CHECK(codec::normalize(" a\tB\nc ") == "abc");
    CHECK_THROWS_AS(codec::normalize("  "), CodecError);
    CHECK_THROWS_AS(codec::normalize(""), CodecError);
}

TEST_CASE("encode matches the published convention") {
    const BinarySequence b({-1, -1, 1, 1, -1, 1, 1, -1, 1, 1, 1});
    const auto hex = codec::encode(b);
    CHECK(hex.text == "1b7");
    CHECK(hex.length == 11);
    CHECK(codec::encode(BinarySequence(std::vector<std::int8_t>(7, -1))).text == "0");
    CHECK(codec::encode(BinarySequence(std::vector<std::int8_t>(4, 1))).text == "f");
}

TEST_CASE("decode inverts encode and checks the width") {
    const BinarySequence want({-1, -1, 1, 1, -1, 1, 1, -1, 1, 1, 1});
    CHECK(codec::decode("1b7", 11) == want);
    CHECK(codec::decode("0", 5) == BinarySequence(std::vector<std::int8_t>(5, -1)));
    CHECK_THROWS_AS(codec::decode("f", 3), CodecError);     // 15 >= 2^3
    CHECK_THROWS_AS(codec::decode("zz", 8), CodecError);    // bad digit
    CHECK_THROWS_AS(codec::decode("1b7", 1), CodecError);   // n too small
    // leading zeros are harmless
    CHECK(codec::decode("001b7", 11) == want);
    // uppercase and embedded whitespace are normalized away
    CHECK(codec::decode(" 1B 7 ", 11) == want);
}

TEST_CASE("roundtrip holds for random sequences across n in [2, 300]") {
    std::mt19937_64 gen(0x5eedc0de);
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = 2 + static_cast<int>(gen() % 299);
        const BinarySequence b(testsupport::random_elems(n, gen));
        const auto hex = codec::encode(b);
        CHECK(codec::decode(hex.text, n) == b);
    }
}

TEST_CASE("encode is injective at fixed length") {
    // distinct length-12 sequences produce distinct hex strings
    std::mt19937_64 gen(0x5eedc0df);
    for (int iter = 0; iter < 200; ++iter) {
        const BinarySequence a(testsupport::random_elems(12, gen));
        const BinarySequence b(testsupport::random_elems(12, gen));
        if (a == b) continue;
        CHECK(codec::encode(a).text != codec::encode(b).text);
    }
}
