#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pslforge/codec.hpp"
#include "pslforge/sequence.hpp"
#include "test_support.hpp"

using namespace pslforge;

namespace {

BinarySequence all_ones(int n) {
    return BinarySequence(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1));
}

std::vector<std::int32_t> as_vec(const SidelobeProfile& prof) {
    return {prof.values().begin(), prof.values().end()};
}

} // namespace

TEST_CASE("sequence construction enforces the invariants") {
    CHECK_THROWS_AS(BinarySequence({}), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence({1}), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BinarySequence({1, 2}), std::invalid_argument);
    CHECK(BinarySequence({1, -1}).length() == 2);
    CHECK(BinarySequence::from_pm_string("+-+").to_pm_string() == "+-+");
    CHECK_THROWS_AS(BinarySequence::from_pm_string("+x+"), std::invalid_argument);
}

TEST_CASE("aacf matches hand-computed profiles") {
    CHECK(as_vec(aacf(all_ones(4))) == std::vector<std::int32_t>{3, 2, 1});
    CHECK(as_vec(aacf(BinarySequence({1, -1, 1, -1}))) == std::vector<std::int32_t>{-3, 2, -1});
}

TEST_CASE("aacf of the length-11 hex example") {
    // direct summation gives profile (0,-3,4,1,-2,1,2,-1,-2,-1)
    const BinarySequence seq = codec::decode("1b7", 11);
    const SidelobeProfile prof = aacf(seq);
    CHECK(as_vec(prof) == std::vector<std::int32_t>{0, -3, 4, 1, -2, 1, 2, -1, -2, -1});
    CHECK(psl(seq) == 4);
    CHECK(prof.sum_squares() == 41);
    CHECK(merit_factor(seq) == doctest::Approx(121.0 / 82.0).epsilon(1e-12));
}

TEST_CASE("psl examples") {
    CHECK(psl(BinarySequence({1, -1, 1, -1})) == 3);
    CHECK(psl(all_ones(4)) == 3);
}

TEST_CASE("psl_db examples and domain errors") {
    CHECK(psl_db(6, 106) == doctest::Approx(-24.943).epsilon(5e-5));
    CHECK(psl_db(7, 7) == doctest::Approx(0.0));
    CHECK(psl_db(6, 110) == doctest::Approx(-25.265).epsilon(5e-5));
    CHECK_THROWS_AS(psl_db(0, 10), std::domain_error);
    CHECK_THROWS_AS(psl_db(1, 1), std::domain_error);
}

TEST_CASE("psl_db is strictly increasing in psl for fixed n") {
    for (int v = 1; v < 50; ++v) {
        CHECK(psl_db(v, 50) < psl_db(v + 1, 50));
    }
}

TEST_CASE("merit factor examples") {
    CHECK(merit_factor(all_ones(3)) == doctest::Approx(0.9).epsilon(1e-12));
    const BinarySequence row106 = codec::decode("1366453fff339abc3d613eab4f2", 106);
    CHECK(aacf(row106).sum_squares() == 1117);
    CHECK(merit_factor(row106) == doctest::Approx(5.030).epsilon(1e-4));
}

TEST_CASE("fitness examples") {
    CHECK(fitness(all_ones(3), FitnessMagnitude(4)) == 17);
    CHECK(fitness(BinarySequence({1, -1}), FitnessMagnitude(4)) == 1);
    CHECK(fitness(BinarySequence({1, -1, 1, -1}), FitnessMagnitude(4)) == 98);
}

TEST_CASE("fitness overflow is detected, not wrapped") {
    CHECK_THROWS_AS(checked_ipow(300, 8), std::overflow_error);
    // 299^8 alone overflows int64, so the all-ones fitness must signal
    CHECK_THROWS_AS(fitness(all_ones(300), FitnessMagnitude(8)), std::overflow_error);
    CHECK_NOTHROW(fitness(all_ones(300), FitnessMagnitude(5)));
}

TEST_CASE("invariance of psl, fitness and merit factor under the symmetry transforms") {
    std::mt19937_64 gen(0x5eed0001);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 2 + static_cast<int>(gen() % 60);
        const BinarySequence b(testsupport::random_elems(n, gen));
        const int p0 = psl(b);
        const std::int64_t f0 = fitness(b);
        const double m0 = merit_factor(b);
        for (const BinarySequence& t : {b.reversed(), b.negated(), b.alternated()}) {
            CHECK(psl(t) == p0);
            CHECK(fitness(t) == f0);
            CHECK(merit_factor(t) == doctest::Approx(m0).epsilon(1e-12));
        }
    }
}

TEST_CASE("sidelobe parity and bounds hold on random sequences") {
    std::mt19937_64 gen(0x5eed0002);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 2 + static_cast<int>(gen() % 120);
        const BinarySequence b(testsupport::random_elems(n, gen));
        const SidelobeProfile prof = aacf(b);
        for (int u = 1; u < n; ++u) {
            const std::int32_t c = prof.at_shift(u);
            CHECK(std::abs(c) <= n - u);
            CHECK(((c - (n - u)) % 2) == 0);
        }
        CHECK(std::abs(prof.at_shift(n - 1)) == 1);
        // PSL^P <= fitness <= (n-1) * PSL^P for even P
        const std::int64_t f = fitness(b, FitnessMagnitude(4));
        const std::int64_t pk = psl(prof);
        const std::int64_t pk4 = pk * pk * pk * pk;
        CHECK(f >= pk4);
        CHECK(f <= (n - 1) * pk4);
    }
}

TEST_CASE("production aacf equals the naive oracle on every sequence up to n=10") {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
            std::vector<std::int8_t> e(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                e[static_cast<std::size_t>(i)] = ((v >> (n - 1 - i)) & 1) ? 1 : -1;
            }
            const BinarySequence b(std::move(e));
            const auto got = aacf(b);
            const auto want = testsupport::naive_aacf(b.elements());
            REQUIRE(got.size() == static_cast<int>(want.size()));
            for (int u = 1; u < n; ++u) {
                REQUIRE(got.at_shift(u) == want[static_cast<std::size_t>(u - 1)]);
            }
        }
    }
}

TEST_CASE("profile constructor rejects invalid data") {
    CHECK_THROWS_AS(SidelobeProfile(4, {5, 2, 1}), std::invalid_argument);  // |C_1| > 3
    CHECK_THROWS_AS(SidelobeProfile(4, {2, 2, 1}), std::invalid_argument);  // parity
    CHECK_THROWS_AS(SidelobeProfile(4, {3, 2}), std::invalid_argument);     // size
    CHECK_NOTHROW(SidelobeProfile(4, {3, 2, 1}));
}
