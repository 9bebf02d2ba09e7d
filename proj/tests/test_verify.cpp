#include <doctest.h>

#include <set>
#include <string>

#include "bellpart/verify.hpp"

TEST_CASE("the invariant suite passes at reduced bounds") {
    const auto results = bellpart::run_invariants(bellpart::VerifyBounds::from_max(10));
    CHECK(results.size() == 16);

    const std::set<std::string> expected_ids = {"P-1", "P-2", "P-3", "P-4", "B-1", "B-2",
                                                "B-3", "B-4", "B-5", "I-1", "I-2", "I-3",
                                                "I-4", "I-5", "I-6", "I-7"};
    std::set<std::string> seen;
    for (const auto& r : results) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.passed);
        seen.insert(r.id);
    }
    CHECK(seen == expected_ids);
}

TEST_CASE("degenerate bounds still pass") {
    for (const auto& r : bellpart::run_invariants(bellpart::VerifyBounds::from_max(0))) {
        CAPTURE(r.id);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("from_max clamps the n-type bounds and keeps the m-axis fixed") {
    const auto bounds = bellpart::VerifyBounds::from_max(30);
    CHECK(bounds.i1_five_way == 24);
    CHECK(bounds.i1_three_way == 30);
    CHECK(bounds.i3_convolution == 30);
    CHECK(bounds.b1_n == 12);
    CHECK(bounds.p1_m_limit == 1'000'000);
    CHECK(bounds.p2_m_limit == 100'000);

    const auto reference = bellpart::VerifyBounds::reference();
    CHECK(reference.i1_three_way == 100);
    CHECK(reference.i3_convolution == 200);
    CHECK(reference.i5_n == 60);
    CHECK(reference.i6_n == 40);
    CHECK(reference.i7_n == 50);
}
