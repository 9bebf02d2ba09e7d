#include "bellpart/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "bellpart/bell.hpp"
#include "bellpart/combinatorics.hpp"
#include "bellpart/errors.hpp"
#include "bellpart/integer.hpp"
#include "bellpart/partition.hpp"
#include "bellpart/pentagonal.hpp"

namespace bellpart {

namespace {

using CheckBody = std::optional<std::string> (*)(const VerifyBounds&);

InvariantResult run_check(const char* id, std::string summary, const VerifyBounds& bounds,
                          CheckBody body) {
    InvariantResult result{id, std::move(summary), true, ""};
    try {
        if (auto failure = body(bounds)) {
            result.passed = false;
            result.detail = std::move(*failure);
        }
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

std::string fmt(const char* text, long long a, long long b = -1, long long c = -1) {
    std::ostringstream os;
    os << text << " (";
    os << a;
    if (b >= 0) os << ", " << b;
    if (c >= 0) os << ", " << c;
    os << ")";
    return os.str();
}

// Deterministic argument vectors with entries in [-9, 9].
std::vector<BellArguments> random_argument_vectors(std::size_t length, std::size_t count,
                                                   std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    std::vector<BellArguments> out;
    out.reserve(count);
    for (std::size_t v = 0; v < count; ++v) {
        std::vector<Integer> values;
        values.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            values.emplace_back(dist(rng));
        }
        out.emplace_back(std::move(values));
    }
    return out;
}

// Counts set partitions of an n-element set with exactly k blocks by
// enumerating restricted-growth strings. Independent of the Bell code.
std::uint64_t stirling_subset_by_enumeration(std::size_t n, std::size_t k) {
    std::uint64_t count = 0;
    auto descend = [&](auto&& self, std::size_t element, std::size_t blocks) -> void {
        if (element == n) {
            if (blocks == k) ++count;
            return;
        }
        for (std::size_t b = 0; b < blocks; ++b) {
            self(self, element + 1, blocks);
        }
        self(self, element + 1, blocks + 1);
    };
    descend(descend, 0, 0);
    return count;
}

// ---- P: pentagonal module ------------------------------------------------

std::optional<std::string> check_p1(const VerifyBounds& b) {
    std::vector<bool> pentagonal(b.p1_m_limit + 1, false);
    for (std::uint64_t j = 1;; ++j) {
        const std::uint64_t g1 = j * (3 * j - 1) / 2;
        if (g1 > b.p1_m_limit) break;
        pentagonal[g1] = true;
        const std::uint64_t g2 = g1 + j;
        if (g2 <= b.p1_m_limit) pentagonal[g2] = true;
    }
    pentagonal[0] = true;  // j = 0 family member
    for (std::uint64_t m = 0; m <= b.p1_m_limit; ++m) {
        const bool nonzero = theta_coeff(m).value() != 0;
        if (nonzero != pentagonal[m]) {
            return fmt("theta nonzero-ness disagrees with the pentagonal families at m", m);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_p2(const VerifyBounds& b) {
    for (std::uint64_t m = 0; m <= b.p2_m_limit; ++m) {
        const std::uint64_t d = 24 * m + 1;
        const std::uint64_t s = isqrt_u64(d);
        if (s * s != d) continue;
        if (s % 2 == 0) return fmt("square root of 24m+1 is even at m", m);
        const bool first = (s % 6 == 5);
        const bool second = (s % 6 == 1);
        if (first && second) return fmt("both residue cases fire at m", m);
        if (!first && !second) return fmt("no residue case fires for a perfect square at m", m);
    }
    return std::nullopt;
}

std::optional<std::string> check_p3(const VerifyBounds& b) {
    std::vector<std::size_t> degrees;
    for (std::size_t big_n = 0; big_n <= std::min<std::size_t>(20, b.p4_n); ++big_n) {
        degrees.push_back(big_n);
    }
    for (std::size_t big_n = 37; big_n < b.p4_n; big_n += 17) degrees.push_back(big_n);
    if (b.p4_n > 20) degrees.push_back(b.p4_n);
    for (std::size_t r = 0; r <= b.p4_r; ++r) {
        for (std::size_t big_n : degrees) {
            if (euler_power_series(r, big_n)[0] != 1) {
                return fmt("constant term of E^r differs from 1 at (r, N)", r, big_n);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_p4(const VerifyBounds& b) {
    for (std::size_t big_n = 0; big_n <= b.p4_n; ++big_n) {
        const SeriesCoefficients base = euler_series(big_n);
        SeriesCoefficients previous = euler_power_series(0, big_n);
        for (std::size_t r = 1; r <= b.p4_r; ++r) {
            const SeriesCoefficients direct = euler_power_series(r, big_n);
            if (direct != convolve_truncated(previous, base)) {
                return fmt("E^r != E^(r-1) * E at (r, N)", r, big_n);
            }
            previous = direct;
        }
    }
    return std::nullopt;
}

// ---- B: bell module --------------------------------------------------------

std::optional<std::string> check_b1(const VerifyBounds& b) {
    for (std::size_t n = 0; n <= b.b1_n; ++n) {
        const auto vectors =
            random_argument_vectors(n, b.b1_vectors_per_n, 9000 + static_cast<std::uint32_t>(n));
        for (const BellArguments& args : vectors) {
            const BellTable table(args, n);
            for (std::size_t k = 0; k <= n; ++k) {
                const Integer& reference = table.value(n, k);
                if (bell_definition(n, k, args) != reference) {
                    return fmt("definition sum disagrees with the recurrence at (n, k)", n, k);
                }
                if (k >= 1 && bell_nested(n, k, args) != reference) {
                    return fmt("nested sum disagrees with the recurrence at (n, K)", n, k);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_b2(const VerifyBounds& b) {
    for (std::size_t n = 0; n <= b.b2_n; ++n) {
        const BellArguments ones(std::vector<Integer>(n, Integer(1)));
        const BellTable table(ones, n);
        for (std::size_t k = 0; k <= n; ++k) {
            const Integer expected(
                static_cast<unsigned long>(stirling_subset_by_enumeration(n, k)));
            if (table.value(n, k) != expected) {
                return fmt("all-ones Bell value differs from Stirling enumeration at (n, k)", n,
                           k);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_b3(const VerifyBounds& b) {
    for (std::size_t n = 0; n <= b.b3_n; ++n) {
        const auto vectors = random_argument_vectors(n, 4, 5100 + static_cast<std::uint32_t>(n));
        for (const BellArguments& args : vectors) {
            const BellTable table(args, n);
            for (const int c : {-2, 3}) {
                std::vector<Integer> scaled_values;
                scaled_values.reserve(n);
                for (const Integer& x : args.values()) scaled_values.push_back(c * x);
                const BellTable scaled(BellArguments(std::move(scaled_values)), n);
                for (std::size_t k = 0; k <= n; ++k) {
                    Integer factor;
                    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(c < 0 ? -c : c),
                                  static_cast<unsigned long>(k));
                    if (c < 0 && k % 2 == 1) factor = -factor;
                    if (scaled.value(n, k) != factor * table.value(n, k)) {
                        return fmt("homogeneity fails at (n, k, c)", n, k, c);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_b4(const VerifyBounds& b) {
    // bell_nested raises ConsistencyError if (K)! ever fails to divide the
    // accumulated sum; driving it across random and lambda arguments makes
    // that check bite.
    for (std::size_t n = 1; n <= b.b1_n; ++n) {
        const auto vectors = random_argument_vectors(n, 8, 7700 + static_cast<std::uint32_t>(n));
        for (const BellArguments& args : vectors) {
            for (std::size_t big_k = 1; big_k <= n; ++big_k) {
                (void)bell_nested(n, big_k, args);
            }
        }
        const BellArguments lambda = lambda_arguments(n);
        const BellTable table(lambda, n);
        for (std::size_t big_k = 1; big_k <= n; ++big_k) {
            if (bell_nested(n, big_k, lambda) != table.value(n, big_k)) {
                return fmt("nested sum disagrees with the recurrence on lambda at (n, K)", n,
                           big_k);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_b5(const VerifyBounds& b) {
    const BellTable table(lambda_arguments(b.b5_n), b.b5_n);
    SeriesCoefficients em1 = euler_series(b.b5_n);
    em1[0] -= 1;
    SeriesCoefficients power = SeriesCoefficients::one(b.b5_n);
    for (std::size_t k = 0; k <= std::min(b.b5_k, b.b5_n); ++k) {
        if (k > 0) power = convolve_truncated(power, em1);
        for (std::size_t n = 0; n <= b.b5_n; ++n) {
            if (k > n) continue;
            const Integer lhs = factorial(k) * table.value(n, k);
            const Integer rhs = factorial(n) * power[n];
            if (lhs != rhs) {
                return fmt("k! B(n,k)(lambda) != n! [q^n](E-1)^k at (n, k)", n, k);
            }
        }
    }
    return std::nullopt;
}

// ---- I: partition module ---------------------------------------------------

std::optional<std::string> check_i1(const VerifyBounds& b) {
    const std::size_t top = std::max(b.i1_five_way, b.i1_three_way);
    const std::vector<Integer> oracle = p_euler_prefix(top);
    for (std::size_t n = 0; n <= b.i1_five_way; ++n) {
        if (p_bell(n) != oracle[n]) return fmt("p_bell disagrees at n", n);
        if (p_corollary(n) != oracle[n]) return fmt("p_corollary disagrees at n", n);
        if (p_naive(n) != oracle[n]) return fmt("p_naive disagrees at n", n);
        if (n >= 1 && p_theta(n) != oracle[n]) return fmt("p_theta disagrees at n", n);
    }
    for (std::size_t n = b.i1_five_way + 1; n <= b.i1_three_way; ++n) {
        if (p_bell(n) != oracle[n]) return fmt("p_bell disagrees at n", n);
        if (p_corollary(n) != oracle[n]) return fmt("p_corollary disagrees at n", n);
    }
    return std::nullopt;
}

std::optional<std::string> check_i2(const VerifyBounds& b) {
    const BellTable table(lambda_arguments(b.i2_divisibility), b.i2_divisibility);
    for (std::size_t n = 0; n <= b.i2_divisibility; ++n) {
        Integer sum(0);
        for (std::size_t k = 0; k <= n; ++k) {
            Integer term = factorial(k) * table.value(n, k);
            if (k % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        const Integer nf = factorial(n);
        if (mpz_divisible_p(sum.get_mpz_t(), nf.get_mpz_t()) == 0) {
            return fmt("n! does not divide the alternating Bell sum at n", n);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_i3(const VerifyBounds& b) {
    const std::vector<Integer> p = p_euler_prefix(b.i3_convolution);
    for (std::size_t n = 0; n <= b.i3_convolution; ++n) {
        Integer acc(0);
        for (std::size_t m = 0; m <= n; ++m) {
            const int theta = theta_coeff(m).value();
            if (theta == 0) continue;
            if (theta > 0) {
                acc += p[n - m];
            } else {
                acc -= p[n - m];
            }
        }
        if (acc != Integer(n == 0 ? 1 : 0)) {
            return fmt("sum theta_m p(n-m) differs from [n = 0] at n", n);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_i4(const VerifyBounds& b) {
    for (std::size_t l = 0; l <= b.i4_l; ++l) {
        const SeriesCoefficients expected = euler_power_series(l, b.i4_n);
        for (std::size_t n = 0; n <= b.i4_n; ++n) {
            if (pr_bell(l, n) != expected[n]) {
                return fmt("pr_bell differs from the convolution oracle at (l, n)", l, n);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_i5(const VerifyBounds& b) {
    for (std::size_t n = 0; n <= b.i5_n; ++n) {
        std::vector<Integer> f_derivs;
        f_derivs.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            Integer d = factorial(k);
            if (k % 2 == 1) d = -d;
            f_derivs.push_back(std::move(d));
        }
        if (faa_at_zero(n, f_derivs, lambda_arguments(n)) != factorial(n) * p_euler(n)) {
            return fmt("reciprocal specialization differs from n! p(n) at n", n);
        }
    }
    for (std::size_t l = 0; l <= b.i5_l; ++l) {
        for (std::size_t n = 0; n <= b.i5_l_n; ++n) {
            std::vector<Integer> f_derivs;
            f_derivs.reserve(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                f_derivs.push_back(binomial(l, k) * factorial(k));
            }
            if (faa_at_zero(n, f_derivs, lambda_arguments(n)) != factorial(n) * pr_bell(l, n)) {
                return fmt("power specialization differs from n! p_l(n) at (l, n)", l, n);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_i6(const VerifyBounds& b) {
    const BellTable table(lambda_arguments(b.i6_n), b.i6_n);
    for (std::size_t n = 0; n <= b.i6_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (bell_from_powers(n, k) != table.value(n, k)) {
                return fmt("power-series route differs from the recurrence at (n, k)", n, k);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_i7(const VerifyBounds& b) {
    for (std::size_t r = 0; r <= b.i7_n; ++r) {
        Integer acc(0);
        for (std::size_t n = r; n <= b.i7_n; ++n) {
            acc += binomial(n, r);
            if (acc != binomial(n + 1, r + 1)) {
                return fmt("hockey-stick identity fails at (r, n)", r, n);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

VerifyBounds VerifyBounds::from_max(std::size_t max_n) {
    VerifyBounds b;  // documented bounds
    for (std::size_t* field :
         {&b.i1_five_way, &b.i1_three_way, &b.i2_divisibility, &b.i3_convolution, &b.i4_l,
          &b.i4_n, &b.i5_n, &b.i5_l, &b.i5_l_n, &b.i6_n, &b.i7_n, &b.b1_n, &b.b2_n, &b.b3_n,
          &b.b5_k, &b.b5_n, &b.p4_r, &b.p4_n}) {
        *field = std::min(*field, max_n);
    }
    return b;
}

std::vector<InvariantResult> run_invariants(const VerifyBounds& b) {
    std::vector<InvariantResult> results;

    auto describe = [](const char* text, auto... bound) {
        std::ostringstream os;
        os << text;
        ((os << bound), ...);
        return os.str();
    };

    results.push_back(run_check(
        "P-1",
        describe("theta_m nonzero exactly at generalized pentagonal m, m <= ", b.p1_m_limit), b,
        check_p1));
    results.push_back(run_check(
        "P-2", describe("square-root residue cases mutually exclusive, m <= ", b.p2_m_limit), b,
        check_p2));
    results.push_back(run_check(
        "P-3",
        describe("constant term of E^r is 1, r <= ", b.p4_r, ", sampled N <= ", b.p4_n), b,
        check_p3));
    results.push_back(run_check(
        "P-4",
        describe("E^r = E^(r-1) * E under truncation, r <= ", b.p4_r, ", N <= ", b.p4_n), b,
        check_p4));

    results.push_back(run_check(
        "B-1",
        describe("recurrence/nested/definition Bell agreement, n <= ", b.b1_n, ", vectors/n = ",
                 b.b1_vectors_per_n),
        b, check_b1));
    results.push_back(run_check(
        "B-2", describe("all-ones Bell = set-partition Stirling count, n <= ", b.b2_n), b,
        check_b2));
    results.push_back(run_check(
        "B-3", describe("degree-k homogeneity under scaling by -2 and 3, n <= ", b.b3_n), b,
        check_b3));
    results.push_back(run_check(
        "B-4", describe("nested-sum division by K! exact, n <= ", b.b1_n), b, check_b4));
    results.push_back(run_check(
        "B-5",
        describe("k! B(n,k)(lambda) = n! [q^n](E-1)^k, k <= ", b.b5_k, ", n <= ", b.b5_n), b,
        check_b5));

    results.push_back(run_check(
        "I-1",
        describe("method agreement on p(n), five-way n <= ", b.i1_five_way, ", three-way n <= ",
                 b.i1_three_way),
        b, check_i1));
    results.push_back(run_check(
        "I-2", describe("n! divides the alternating Bell sum, n <= ", b.i2_divisibility), b,
        check_i2));
    results.push_back(run_check(
        "I-3", describe("E(q) * P(q) = 1 coefficientwise, n <= ", b.i3_convolution), b,
        check_i3));
    results.push_back(run_check(
        "I-4",
        describe("pr_bell matches convolution powers, l <= ", b.i4_l, ", n <= ", b.i4_n), b,
        check_i4));
    results.push_back(run_check(
        "I-5",
        describe("Faa di Bruno specializations, n <= ", b.i5_n, ", power case l <= ", b.i5_l,
                 " with n <= ", b.i5_l_n),
        b, check_i5));
    results.push_back(run_check(
        "I-6", describe("bell_from_powers equals the recurrence on lambda, n <= ", b.i6_n), b,
        check_i6));
    results.push_back(run_check(
        "I-7", describe("hockey-stick binomial identity, n <= ", b.i7_n), b, check_i7));

    return results;
}

}  // namespace bellpart
