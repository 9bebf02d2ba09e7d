#pragma once

#include <cstddef>
#include <vector>

#include "bellpart/integer.hpp"

namespace bellpart {

// Argument sequence x_1, x_2, ... for partial Bell polynomials. Indexing
// is 1-based to match the usual notation; zeros are stored explicitly.
class BellArguments {
public:
    BellArguments() = default;
    explicit BellArguments(std::vector<Integer> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }

    // 1-based access: at(1) is x_1. Bounds-checked.
    const Integer& at(std::size_t i) const { return values_.at(i - 1); }

    // Throws ArgumentLengthError naming `required` when fewer entries are held.
    void require(std::size_t required, const char* context) const;

    const std::vector<Integer>& values() const noexcept { return values_; }

    friend bool operator==(const BellArguments&, const BellArguments&) = default;

private:
    std::vector<Integer> values_;
};

// Triangular table of B(n, k) over one fixed argument sequence, filled
// column by column with the recurrence
//   B(n, k) = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B(n-i, k-1)
// and the boundary conventions B(0,0) = 1, B(n,0) = 0 for n >= 1, and
// B(n,k) = 0 for k > n. A cell (n, k) with k >= 1 exists only when the
// argument sequence reaches x_{n-k+1}; querying a missing cell reports the
// required length. Safe for concurrent reads once constructed.
class BellTable {
public:
    BellTable(BellArguments args, std::size_t max_n);

    // B(n, k) for n <= max_n. k > n returns 0 by convention.
    const Integer& value(std::size_t n, std::size_t k) const;

    const BellArguments& arguments() const noexcept { return args_; }
    std::size_t max_n() const noexcept { return rows_.size() - 1; }

private:
    BellArguments args_;
    std::vector<std::vector<Integer>> rows_;  // rows_[n][k], 0 <= k <= n
};

// B(n, k)(x_1, ..., x_{n-k+1}) by the triangular recurrence above. The
// fast production algorithm; callers evaluating many (n, k) against one
// argument sequence should hold a BellTable instead.
Integer bell_recurrence(std::size_t n, std::size_t k, const BellArguments& args);

// B(n, K) by the (K-1)-fold nested sum over strictly decreasing index
// chains alpha_1 > alpha_2 > ... with binomial weights, divided exactly
// by K!. Requires 1 <= K <= n; K == 1 is the convention branch B(n,1) = x_n.
// A nonzero remainder in the final division throws ConsistencyError.
Integer bell_nested(std::size_t n, std::size_t big_k, const BellArguments& args);

inline constexpr std::size_t kBellDefinitionCap = 14;

// Definition-level oracle: enumerates every multi-index (l_1, ..., l_n)
// with sum i*l_i = n and sum l_i = k and adds the exact multinomial count
// times prod x_i^{l_i}. Each count is assembled as a product of binomials,
// so the arithmetic never leaves the integers. Exponential; capped.
Integer bell_definition(std::size_t n, std::size_t k, const BellArguments& args,
                        std::size_t cap = kBellDefinitionCap);

}  // namespace bellpart
