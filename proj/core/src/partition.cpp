#include "bellpart/partition.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "bellpart/combinatorics.hpp"
#include "bellpart/errors.hpp"

namespace bellpart {

namespace {

void check_cap(const char* context, std::size_t n, std::size_t cap, const char* growth) {
    if (n > cap) {
        std::ostringstream os;
        os << context << ": n = " << n << " exceeds the safety cap " << cap << " (" << growth
           << "); raise the cap to override";
        throw CapExceededError(os.str(), n, cap);
    }
}

}  // namespace

BellArguments lambda_arguments(std::size_t count) {
    std::vector<Integer> values;
    values.reserve(count);
    for (std::size_t m = 1; m <= count; ++m) {
        values.push_back(lambda_coeff(m));
    }
    return BellArguments(std::move(values));
}

Integer faa_at_zero(std::size_t n, const std::vector<Integer>& f_derivs,
                    const BellArguments& g_derivs) {
    if (f_derivs.size() < n + 1) {
        std::ostringstream os;
        os << "faa_at_zero: f_derivs holds " << f_derivs.size()
           << " entries but derivative orders 0.." << n << " are required";
        throw ArgumentLengthError(os.str(), n + 1, f_derivs.size());
    }
    const BellTable table(g_derivs, n);
    Integer sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
        if (sign_of(f_derivs[k]) == 0) continue;
        const Integer& b = table.value(n, k);
        if (sign_of(b) == 0) continue;
        sum += f_derivs[k] * b;
    }
    return sum;
}

Integer p_bell(std::size_t n) {
    const BellTable table(lambda_arguments(n), n);
    Integer sum(0);
    for (std::size_t k = 0; k <= n; ++k) {
        const Integer& b = table.value(n, k);
        if (sign_of(b) == 0) continue;
        Integer term = factorial(k) * b;
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return exact_div(sum, factorial(n), "p_bell");
}

Integer p_bell_nested(std::size_t n, std::size_t cap) {
    check_cap("p_bell_nested", n, cap, "the nested sums visit ~2^(n-1) index chains");
    if (n == 0) return Integer(1);
    const BellArguments lambda = lambda_arguments(n);
    Integer sum(0);  // k = 0 contributes B(n,0) = 0 for n >= 1
    for (std::size_t k = 1; k <= n; ++k) {
        Integer term = factorial(k) * bell_nested(n, k, lambda);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return exact_div(sum, factorial(n), "p_bell_nested");
}

Integer p_theta(std::size_t n, std::size_t cap) {
    if (n == 0) {
        throw std::domain_error("p_theta: defined for n >= 1 (the sum starts at -theta_n)");
    }
    check_cap("p_theta", n, cap, "the formula has ~2^(n-1) theta-product terms");

    std::vector<int> theta(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        theta[m] = theta_coeff(m).value();
    }

    Integer result(-theta[n]);
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        Integer chain_sum(0);
        // alpha_1 > ... > alpha_k with alpha_level in [k-level+1, prev-1],
        // prev_0 = n; each term is the product of theta at the gaps.
        auto descend = [&](auto&& self, std::size_t level, std::size_t prev, int product) -> void {
            const std::size_t low = k - level + 1;
            for (std::size_t alpha = low; alpha < prev; ++alpha) {
                const int factor = theta[prev - alpha];
                if (factor == 0) continue;
                const int next = product * factor;
                if (level == k) {
                    const int last = theta[alpha];
                    if (last == 0) continue;
                    if (next * last > 0) {
                        chain_sum += 1;
                    } else {
                        chain_sum -= 1;
                    }
                } else {
                    self(self, level + 1, alpha, next);
                }
            }
        };
        descend(descend, 1, n, 1);
        if (k % 2 == 1) {
            result += chain_sum;
        } else {
            result -= chain_sum;
        }
    }
    return result;
}

std::vector<Integer> p_euler_prefix(std::size_t max_n) {
    std::vector<Integer> p(max_n + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        Integer acc(0);
        for (std::size_t j = 1;; ++j) {
            const std::size_t g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            if (j % 2 == 1) {
                acc += p[n - g1];
            } else {
                acc -= p[n - g1];
            }
            const std::size_t g2 = g1 + j;
            if (g2 <= n) {
                if (j % 2 == 1) {
                    acc += p[n - g2];
                } else {
                    acc -= p[n - g2];
                }
            }
        }
        p[n] = std::move(acc);
    }
    return p;
}

Integer p_euler(std::size_t n) {
    return p_euler_prefix(n)[n];
}

namespace {

std::uint64_t count_partitions(std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) return 1;
    std::uint64_t count = 0;
    for (std::size_t first = std::min(remaining, max_part); first >= 1; --first) {
        count += count_partitions(remaining - first, first);
    }
    return count;
}

}  // namespace

Integer p_naive(std::size_t n, std::size_t cap) {
    check_cap("p_naive", n, cap, "every partition is enumerated");
    return Integer(static_cast<unsigned long>(count_partitions(n, n)));
}

Integer pr_bell(std::size_t l, std::size_t n) {
    const BellTable table(lambda_arguments(n), n);
    const std::size_t k_max = std::min(l, n);  // B(n,k) = 0 above the diagonal
    Integer sum(0);
    for (std::size_t k = 0; k <= k_max; ++k) {
        const Integer& b = table.value(n, k);
        if (sign_of(b) == 0) continue;
        sum += binomial(l, k) * factorial(k) * b;
    }
    return exact_div(sum, factorial(n), "pr_bell");
}

Integer bell_from_powers(std::size_t n, std::size_t k) {
    if (k > n) return Integer(0);
    const SeriesCoefficients base = euler_series(n);
    SeriesCoefficients power = SeriesCoefficients::one(n);
    Integer sum(0);
    for (std::size_t r = 0; r <= k; ++r) {
        if (r > 0) power = convolve_truncated(power, base);
        if (sign_of(power[n]) == 0) continue;
        Integer term = binomial(k, r) * power[n];
        if ((k - r) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return exact_div(factorial(n) * sum, factorial(k), "bell_from_powers");
}

Integer p_corollary(std::size_t n, PrSource source) {
    Integer sum(0);
    if (source == PrSource::series) {
        const SeriesCoefficients base = euler_series(n);
        SeriesCoefficients power = SeriesCoefficients::one(n);
        for (std::size_t r = 0; r <= n; ++r) {
            if (r > 0) power = convolve_truncated(power, base);
            if (sign_of(power[n]) == 0) continue;
            Integer term = binomial(n + 1, r + 1) * power[n];
            if (r % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    } else {
        for (std::size_t r = 0; r <= n; ++r) {
            Integer pr = pr_bell(r, n);
            if (sign_of(pr) == 0) continue;
            Integer term = binomial(n + 1, r + 1) * pr;
            if (r % 2 == 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    return sum;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::bell: return "bell";
        case Method::theta: return "theta";
        case Method::corollary: return "corollary";
        case Method::euler: return "euler";
        case Method::naive: return "naive";
    }
    return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
    for (Method m : kAllMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

MethodReport run_method(std::size_t n, Method method, const ComputeOptions& options) {
    MethodReport report;
    report.result.n = n;
    report.result.method = method;

    const auto start = std::chrono::steady_clock::now();
    switch (method) {
        case Method::bell:
            report.result.value = (options.bell_algo == BellAlgorithm::recurrence)
                                      ? p_bell(n)
                                      : p_bell_nested(n, options.nested_cap);
            break;
        case Method::theta:
            report.result.value = p_theta(n, options.theta_cap);
            break;
        case Method::corollary:
            report.result.value = p_corollary(n);
            break;
        case Method::euler:
            report.result.value = p_euler(n);
            break;
        case Method::naive:
            report.result.value = p_naive(n, options.naive_cap);
            break;
    }
    const auto stop = std::chrono::steady_clock::now();

    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
    report.agrees_with_oracle = (report.result.value == p_euler(n));
    return report;
}

}  // namespace bellpart
