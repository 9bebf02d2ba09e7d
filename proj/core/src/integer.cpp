#include "bellpart/integer.hpp"

#include <string>

#include "bellpart/errors.hpp"

namespace bellpart {

std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x < 2) return x;
    // Seed above the root so the iteration descends monotonically.
    int bits = 64 - __builtin_clzll(x);
    std::uint64_t r = std::uint64_t(1) << ((bits + 1) / 2);
    for (;;) {
        std::uint64_t next = (r + x / r) / 2;
        if (next >= r) return r;
        r = next;
    }
}

Integer exact_div(const Integer& a, const Integer& b, const char* context) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) {
        throw ConsistencyError(std::string(context) +
                               ": division expected to be exact left remainder " + r.get_str());
    }
    return q;
}

}  // namespace bellpart
