#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bellpart/bell.hpp"
#include "bellpart/integer.hpp"
#include "bellpart/pentagonal.hpp"

namespace bellpart {

// Default safety caps for the intentionally exponential routes. The
// theta-product formula and the nested-sum Bell evaluation both visit on
// the order of 2^(n-1) index chains; the naive route enumerates every
// partition. All caps can be lifted by the caller.
inline constexpr std::size_t kThetaDefaultCap = 24;
inline constexpr std::size_t kNestedBellCap = 24;
inline constexpr std::size_t kNaiveCap = 30;

// lambda_1 .. lambda_count packaged as Bell arguments.
BellArguments lambda_arguments(std::size_t count);

// n-th derivative of a composite f(g(q)) at q = 0:
//   sum_{k=0}^{n} f_derivs[k] * B(n, k)(g_derivs)
// where f_derivs[k] holds f^(k) evaluated at g(0) and g_derivs holds the
// inner derivatives at 0. f_derivs must cover orders 0..n.
Integer faa_at_zero(std::size_t n, const std::vector<Integer>& f_derivs,
                    const BellArguments& g_derivs);

// p(n) = (1/n!) sum_{k=0}^{n} (-1)^k k! B(n,k)(lambda), evaluated over one
// shared Bell table. The division by n! is checked exact.
Integer p_bell(std::size_t n);

// Same sum with every B(n,k) evaluated by the nested-sum algorithm
// instead of the recurrence. Exponential; capped like the theta route.
Integer p_bell_nested(std::size_t n, std::size_t cap = kNestedBellCap);

// p(n) = -theta_n + sum_{k=1}^{n-1} (-1)^{k-1} (nested sums of theta
// products over strictly decreasing index chains). Defined for n >= 1.
Integer p_theta(std::size_t n, std::size_t cap = kThetaDefaultCap);

// Production oracle: p(n) = -sum_{m=1}^{n} theta_m p(n-m), i.e. the
// coefficient recurrence of E(q) * sum p(n) q^n = 1. Only generalized
// pentagonal m contribute, so O(n sqrt(n)) exact additions.
Integer p_euler(std::size_t n);

// p(0..max_n) by the same recurrence.
std::vector<Integer> p_euler_prefix(std::size_t max_n);

// Second independent oracle: counts non-increasing positive summand
// sequences by direct recursive enumeration.
Integer p_naive(std::size_t n, std::size_t cap = kNaiveCap);

// p_l(n), the coefficient of q^n in E(q)^l, via the Bell-polynomial
// formula (1/n!) sum_{k=0}^{min(l,n)} C(l,k) k! B(n,k)(lambda).
Integer pr_bell(std::size_t l, std::size_t n);

// B(n,k)(lambda) recovered from the power-series side:
//   (n!/k!) sum_{r=0}^{k} (-1)^{k-r} C(k,r) p_r(n)
// with p_r taken from truncated convolution. Division checked exact.
Integer bell_from_powers(std::size_t n, std::size_t k);

// Where p_corollary obtains its p_r(n) values.
enum class PrSource {
    series,  // truncated convolution powers of E (fast path)
    bell,    // pr_bell (slow path)
};

// p(n) = sum_{r=0}^{n} (-1)^r C(n+1, r+1) p_r(n).
Integer p_corollary(std::size_t n, PrSource source = PrSource::series);

// ---------------------------------------------------------------------
// Method dispatch and timing, shared by the CLI table/bench commands.

enum class Method { bell, theta, corollary, euler, naive };

inline constexpr Method kAllMethods[] = {Method::bell, Method::theta, Method::corollary,
                                         Method::euler, Method::naive};

std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

enum class BellAlgorithm { recurrence, nested };

struct ComputeOptions {
    BellAlgorithm bell_algo = BellAlgorithm::recurrence;
    std::size_t theta_cap = kThetaDefaultCap;
    std::size_t nested_cap = kNestedBellCap;
    std::size_t naive_cap = kNaiveCap;
};

// A computed p(n) together with the route that produced it. The value is
// method-independent; the verify suite asserts exactly that.
struct PartitionValue {
    std::size_t n = 0;
    Method method = Method::euler;
    Integer value;
};

struct MethodReport {
    PartitionValue result;
    std::chrono::nanoseconds elapsed{0};
    bool agrees_with_oracle = false;  // result.value == p_euler(n)
};

// Computes p(n) by the chosen method, times the call, and compares the
// result against the Euler-recurrence oracle.
MethodReport run_method(std::size_t n, Method method, const ComputeOptions& options = {});

}  // namespace bellpart
