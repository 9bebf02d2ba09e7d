#include "bellpart/combinatorics.hpp"

#include <mutex>
#include <vector>

#include "bellpart/errors.hpp"

namespace bellpart {

namespace {

// Rows below this bound live in the shared Pascal cache; larger n goes
// through the multiplicative product.
constexpr std::size_t kPascalRowLimit = 256;

std::mutex g_factorial_mutex;

std::vector<Integer>& factorial_cache() {
    static std::vector<Integer> cache{Integer(1)};
    return cache;
}

std::mutex g_pascal_mutex;

std::vector<std::vector<Integer>>& pascal_cache() {
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    return rows;
}

}  // namespace

Integer factorial(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    auto& cache = factorial_cache();
    while (cache.size() <= n) {
        cache.push_back(cache.back() * Integer(static_cast<unsigned long>(cache.size())));
    }
    return cache[n];
}

Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) return Integer(0);
    if (k == 0 || k == n) return Integer(1);

    if (n < kPascalRowLimit) {
        std::lock_guard<std::mutex> lock(g_pascal_mutex);
        auto& rows = pascal_cache();
        while (rows.size() <= n) {
            const std::size_t m = rows.size();
            std::vector<Integer> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (std::size_t j = 1; j < m; ++j) {
                row[j] = rows[m - 1][j - 1] + rows[m - 1][j];
            }
            rows.push_back(std::move(row));
        }
        return rows[n][k];
    }

    // C(n,k) = prod_{i=1}^{k} (n-k+i)/i; every prefix is itself a binomial,
    // so each division is exact.
    if (k > n - k) k = n - k;
    Integer result(1);
    for (std::size_t i = 1; i <= k; ++i) {
        result *= Integer(static_cast<unsigned long>(n - k + i));
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

}  // namespace bellpart
