#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "bellpart/bell.hpp"
#include "bellpart/errors.hpp"
#include "bellpart/partition.hpp"
#include "support/oracles.hpp"

using bellpart::BellArguments;
using bellpart::BellTable;
using bellpart::Integer;

namespace {

BellArguments args_of(std::initializer_list<long> values) {
    std::vector<Integer> xs;
    for (long v : values) xs.emplace_back(v);
    return BellArguments(std::move(xs));
}

BellArguments random_args(std::size_t length, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-9, 9);
    std::vector<Integer> xs;
    xs.reserve(length);
    for (std::size_t i = 0; i < length; ++i) xs.emplace_back(dist(rng));
    return BellArguments(std::move(xs));
}

}  // namespace

TEST_CASE("BellArguments is 1-based and length-checked") {
    const BellArguments args = args_of({5, 7, 11});
    CHECK(args.size() == 3);
    CHECK(args.at(1) == 5);
    CHECK(args.at(3) == 11);
    CHECK_NOTHROW(args.require(3, "test"));
    try {
        args.require(4, "test");
        FAIL("expected ArgumentLengthError");
    } catch (const bellpart::ArgumentLengthError& e) {
        CHECK(e.required() == 4);
        CHECK(e.actual() == 3);
        CHECK(std::string(e.what()).find("x_1..x_4") != std::string::npos);
    }
}

TEST_CASE("bell_recurrence on the worked examples") {
    CHECK(bellpart::bell_recurrence(3, 2, args_of({5, 7})) == 105);  // 3 x1 x2
    CHECK(bellpart::bell_recurrence(4, 4, args_of({2})) == 16);      // x1^4
    CHECK(bellpart::bell_recurrence(5, 0, args_of({})) == 0);
    CHECK(bellpart::bell_recurrence(4, 2, args_of({-1, -2, 0})) == 12);  // 4 x1 x3 + 3 x2^2

    SUBCASE("the lambda prefix really is (-1, -2, 0)") {
        const BellArguments lambda = bellpart::lambda_arguments(3);
        CHECK(lambda.at(1) == -1);
        CHECK(lambda.at(2) == -2);
        CHECK(lambda.at(3) == 0);
        CHECK(bellpart::bell_recurrence(4, 2, lambda) == 12);
    }

    SUBCASE("definition oracle agrees") {
        CHECK(bellpart::bell_definition(3, 2, args_of({5, 7})) == 105);
        CHECK(bellpart::bell_definition(4, 2, args_of({-1, -2, 0})) == 12);
    }
}

TEST_CASE("BellTable boundary conventions") {
    const BellArguments args = args_of({3, -4, 5, 0, 2, 1});
    const BellTable table(args, 6);
    CHECK(table.value(0, 0) == 1);
    for (std::size_t n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(table.value(n, 0) == 0);
        CHECK(table.value(n, 1) == args.at(n));  // B(n,1) = x_n
    }
    CHECK(table.value(3, 5) == 0);  // k > n
    Integer x1_pow(1);
    for (std::size_t n = 1; n <= 6; ++n) {
        x1_pow *= args.at(1);
        CHECK(table.value(n, n) == x1_pow);  // B(n,n) = x1^n
    }
}

TEST_CASE("too-short argument lists raise the explicit length error") {
    CHECK_THROWS_AS(bellpart::bell_recurrence(4, 2, args_of({-1, -2})),
                    bellpart::ArgumentLengthError);
    CHECK_THROWS_AS(bellpart::bell_nested(4, 2, args_of({-1, -2})),
                    bellpart::ArgumentLengthError);
    CHECK_THROWS_AS(bellpart::bell_definition(4, 2, args_of({-1, -2})),
                    bellpart::ArgumentLengthError);

    // A wedge query inside the reachable region still works with the
    // minimal n-k+1 entries.
    CHECK(bellpart::bell_recurrence(4, 2, args_of({-1, -2, 0})) == 12);
    const BellTable wedge(args_of({-1, -2, 0}), 4);
    CHECK_THROWS_AS(wedge.value(4, 1), bellpart::ArgumentLengthError);
}

TEST_CASE("bell_nested on the worked examples and its domain") {
    CHECK(bellpart::bell_nested(3, 2, args_of({5, 7})) == 105);
    CHECK(bellpart::bell_nested(2, 1, args_of({17, 23})) == 23);  // convention branch x_n
    CHECK(bellpart::bell_nested(4, 2, args_of({-1, -2, 0})) == 12);
    CHECK_THROWS_AS(bellpart::bell_nested(3, 0, args_of({1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(bellpart::bell_nested(3, 4, args_of({1, 1, 1})), std::domain_error);
}

TEST_CASE("bell_definition base cases and cap") {
    CHECK(bellpart::bell_definition(0, 0, args_of({})) == 1);
    CHECK(bellpart::bell_definition(3, 0, args_of({1, 2, 3})) == 0);

    const BellArguments ones(std::vector<Integer>(6, Integer(1)));
    CHECK(bellpart::bell_definition(4, 2, ones) == 7);   // Stirling S(4,2)
    CHECK(bellpart::bell_definition(6, 3, ones) == 90);  // Stirling S(6,3)
    CHECK(testsupport::stirling_subset(4, 2) == 7);
    CHECK(testsupport::stirling_subset(6, 3) == 90);

    try {
        bellpart::bell_definition(15, 2, ones);
        FAIL("expected CapExceededError");
    } catch (const bellpart::CapExceededError& e) {
        CHECK(e.cap() == bellpart::kBellDefinitionCap);
        CHECK(std::string(e.what()).find("14") != std::string::npos);
    }

    SUBCASE("the cap is a parameter, not a hard limit") {
        const BellArguments wide(std::vector<Integer>(14, Integer(1)));
        // S(15,2) = 2^14 - 1
        CHECK(bellpart::bell_definition(15, 2, wide, 15) == (1 << 14) - 1);
    }
}

TEST_CASE("three Bell algorithms agree on random small-integer arguments") {
    std::mt19937 rng(777u);
    for (std::size_t n = 0; n <= 9; ++n) {
        for (int vec = 0; vec < 6; ++vec) {
            const BellArguments args = random_args(n, rng);
            const BellTable table(args, n);
            for (std::size_t k = 0; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                const Integer& reference = table.value(n, k);
                CHECK(bellpart::bell_definition(n, k, args) == reference);
                if (k >= 1) CHECK(bellpart::bell_nested(n, k, args) == reference);
            }
        }
    }
}

TEST_CASE("B(n,k) is homogeneous of degree k") {
    std::mt19937 rng(31u);
    for (std::size_t n = 0; n <= 8; ++n) {
        const BellArguments args = random_args(n, rng);
        for (const int c : {-2, 3}) {
            std::vector<Integer> scaled;
            for (const Integer& x : args.values()) scaled.push_back(c * x);
            const BellTable base(args, n);
            const BellTable stretched(BellArguments(std::move(scaled)), n);
            Integer factor(1);
            for (std::size_t k = 0; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(c);
                CHECK(stretched.value(n, k) == factor * base.value(n, k));
                factor *= c;
            }
        }
    }
}
