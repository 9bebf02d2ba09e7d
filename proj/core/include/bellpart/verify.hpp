#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bellpart {

struct InvariantResult {
    std::string id;       // "P-1", "B-4", "I-3", ...
    std::string summary;  // what was checked, with the bounds used
    bool passed = false;
    std::string detail;   // first counterexample; empty when passed
};

// Bounds for the cross-validation suite. The n-type bounds scale with the
// caller's --max; the pentagonal characterization bounds (an m-axis, cheap
// at full strength) stay fixed.
struct VerifyBounds {
    std::size_t i1_five_way = 24;    // all five methods agree
    std::size_t i1_three_way = 100;  // bell / corollary / euler agree
    std::size_t i2_divisibility = 100;
    std::size_t i3_convolution = 200;
    std::size_t i4_l = 8;
    std::size_t i4_n = 40;
    std::size_t i5_n = 60;
    std::size_t i5_l = 5;
    std::size_t i5_l_n = 30;
    std::size_t i6_n = 40;
    std::size_t i7_n = 50;
    std::size_t b1_n = 12;
    std::size_t b1_vectors_per_n = 16;
    std::size_t b2_n = 10;
    std::size_t b3_n = 10;
    std::size_t b5_k = 8;
    std::size_t b5_n = 40;
    std::uint64_t p1_m_limit = 1'000'000;
    std::uint64_t p2_m_limit = 100'000;
    std::size_t p4_r = 10;
    std::size_t p4_n = 100;

    // Every n-type bound clamped to max_n; used by `verify --max`.
    static VerifyBounds from_max(std::size_t max_n);

    // The full documented bounds.
    static VerifyBounds reference() { return VerifyBounds{}; }
};

// Runs the whole invariant suite (P-1..P-4, B-1..B-5, I-1..I-7) at the
// given bounds. Never throws: an exception inside a check marks that
// invariant failed with the message as detail.
std::vector<InvariantResult> run_invariants(const VerifyBounds& bounds);

}  // namespace bellpart
