#include "bellpart/bell.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "bellpart/combinatorics.hpp"
#include "bellpart/errors.hpp"

namespace bellpart {

namespace {

const Integer& zero() {
    static const Integer z(0);
    return z;
}

std::string length_message(const char* context, std::size_t required, std::size_t actual) {
    std::ostringstream os;
    os << context << ": argument sequence has " << actual << " entries but x_1..x_" << required
       << " are required";
    return os.str();
}

}  // namespace

void BellArguments::require(std::size_t required, const char* context) const {
    if (values_.size() < required) {
        throw ArgumentLengthError(length_message(context, required, values_.size()), required,
                                  values_.size());
    }
}

BellTable::BellTable(BellArguments args, std::size_t max_n) : args_(std::move(args)) {
    rows_.resize(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows_[n].assign(n + 1, Integer(0));
    }
    rows_[0][0] = 1;

    // Column by column; within column k, cell (n, k) exists while the
    // argument sequence reaches x_{n-k+1}. Its dependencies (n-i, k-1)
    // demand at most the same length, so every reachable cell is complete.
    for (std::size_t k = 1; k <= max_n; ++k) {
        for (std::size_t n = k; n <= max_n; ++n) {
            if (args_.size() + k < n + 1) break;  // deeper rows demand even more
            Integer acc(0);
            for (std::size_t i = 1; i + k <= n + 1; ++i) {
                const Integer& x = args_.at(i);
                if (sign_of(x) == 0) continue;
                const Integer& prev = rows_[n - i][k - 1];
                if (sign_of(prev) == 0) continue;
                acc += binomial(n - 1, i - 1) * x * prev;
            }
            rows_[n][k] = std::move(acc);
        }
    }
}

const Integer& BellTable::value(std::size_t n, std::size_t k) const {
    if (n >= rows_.size()) {
        throw std::out_of_range("BellTable::value: n exceeds the table bound");
    }
    if (k > n) return zero();
    if (k >= 1 && args_.size() + k < n + 1) {
        throw ArgumentLengthError(length_message("BellTable::value", n - k + 1, args_.size()),
                                  n - k + 1, args_.size());
    }
    return rows_[n][k];
}

Integer bell_recurrence(std::size_t n, std::size_t k, const BellArguments& args) {
    if (k > n) return Integer(0);
    if (k >= 1) args.require(n - k + 1, "bell_recurrence");
    return BellTable(args, n).value(n, k);
}

Integer bell_nested(std::size_t n, std::size_t big_k, const BellArguments& args) {
    if (big_k == 0 || big_k > n) {
        throw std::domain_error("bell_nested: requires 1 <= K <= n");
    }
    args.require(n - big_k + 1, "bell_nested");
    if (big_k == 1) return args.at(n);  // convention branch B(n,1) = x_n

    const std::size_t depth = big_k - 1;  // number of nested sums
    Integer total(0);

    // Chains alpha_1 > alpha_2 > ... > alpha_depth with
    // alpha_level in [depth - level + 1, prev - 1], prev_0 = n, weighted by
    // C(prev, alpha) and x_{prev - alpha}, closed off by x_{alpha_depth}.
    auto descend = [&](auto&& self, std::size_t level, std::size_t prev,
                       const Integer& acc) -> void {
        const std::size_t low = depth - level + 1;
        for (std::size_t alpha = low; alpha < prev; ++alpha) {
            const Integer& x = args.at(prev - alpha);
            if (sign_of(x) == 0) continue;
            Integer next = acc * binomial(prev, alpha) * x;
            if (level == depth) {
                const Integer& last = args.at(alpha);
                if (sign_of(last) != 0) total += next * last;
            } else {
                self(self, level + 1, alpha, next);
            }
        }
    };
    descend(descend, 1, n, Integer(1));

    return exact_div(total, factorial(big_k), "bell_nested");
}

Integer bell_definition(std::size_t n, std::size_t k, const BellArguments& args,
                        std::size_t cap) {
    if (n > cap) {
        std::ostringstream os;
        os << "bell_definition: n = " << n << " exceeds the enumeration cap " << cap
           << " (multi-index enumeration is exponential)";
        throw CapExceededError(os.str(), n, cap);
    }
    if (k > n) return Integer(0);
    if (k >= 1) args.require(n - k + 1, "bell_definition");

    const std::size_t max_index = (k >= 1) ? n - k + 1 : 0;
    std::vector<std::size_t> counts(max_index + 1, 0);  // counts[i] = l_i, 1-based
    Integer total(0);

    // One term per multi-index: the number of set partitions of [n] whose
    // block-size multiset matches (l_i), times prod x_i^{l_i}. The count is
    // built as binomial products: distribute elements across size classes,
    // then anchor the smallest free element of each class per block.
    auto add_term = [&]() {
        Integer term(1);
        std::size_t remaining = n;
        for (std::size_t i = 1; i <= max_index; ++i) {
            const std::size_t blocks = counts[i];
            if (blocks == 0) continue;
            if (sign_of(args.at(i)) == 0) return;  // whole term vanishes
            const std::size_t class_size = i * blocks;
            term *= binomial(remaining, class_size);
            std::size_t pool = class_size;
            for (std::size_t b = 0; b < blocks; ++b) {
                term *= binomial(pool - 1, i - 1);
                pool -= i;
            }
            remaining -= class_size;
            Integer power;
            mpz_pow_ui(power.get_mpz_t(), args.at(i).get_mpz_t(),
                       static_cast<unsigned long>(blocks));
            term *= power;
        }
        total += term;
    };

    auto enumerate = [&](auto&& self, std::size_t i, std::size_t weight_left,
                         std::size_t parts_left) -> void {
        if (i == 0) {
            if (weight_left == 0 && parts_left == 0) add_term();
            return;
        }
        const std::size_t max_count = std::min(weight_left / i, parts_left);
        for (std::size_t c = 0; c <= max_count; ++c) {
            counts[i] = c;
            self(self, i - 1, weight_left - i * c, parts_left - c);
        }
        counts[i] = 0;
    };

    if (k == 0) {
        return Integer(n == 0 ? 1 : 0);
    }
    enumerate(enumerate, max_index, n, k);
    return total;
}

}  // namespace bellpart
