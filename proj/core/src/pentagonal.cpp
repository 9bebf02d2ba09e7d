#include "bellpart/pentagonal.hpp"

#include <limits>
#include <stdexcept>

#include "bellpart/combinatorics.hpp"
#include "bellpart/errors.hpp"

namespace bellpart {

namespace {

using u128 = unsigned __int128;

u128 isqrt_u128(u128 x) {
    if (x < 2) return x;
    int high = (x >> 64) ? (64 + 64 - __builtin_clzll(static_cast<std::uint64_t>(x >> 64)))
                         : (64 - __builtin_clzll(static_cast<std::uint64_t>(x)));
    u128 r = u128(1) << ((high + 1) / 2);
    for (;;) {
        u128 next = (r + x / r) / 2;
        if (next >= r) return r;
        r = next;
    }
}

}  // namespace

ThetaCoefficient::ThetaCoefficient(int value) : value_(static_cast<std::int8_t>(value)) {
    if (value < -1 || value > 1) {
        throw std::invalid_argument("ThetaCoefficient: value must be -1, 0 or +1");
    }
}

SeriesCoefficients SeriesCoefficients::one(std::size_t max_degree) {
    SeriesCoefficients s(max_degree);
    s[0] = 1;
    return s;
}

SeriesCoefficients convolve_truncated(const SeriesCoefficients& a, const SeriesCoefficients& b) {
    const std::size_t bound = std::min(a.max_degree(), b.max_degree());
    SeriesCoefficients out(bound);
    for (std::size_t i = 0; i <= bound; ++i) {
        if (sign_of(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= bound; ++j) {
            if (sign_of(b[j]) == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

ThetaCoefficient theta_coeff(std::uint64_t m) {
    const u128 discriminant = u128(24) * m + 1;
    const u128 s = isqrt_u128(discriminant);
    if (s * s != discriminant) return ThetaCoefficient(0);

    // 24m+1 is odd and coprime to 3, so a square root is ≡ 1 or 5 (mod 6).
    const unsigned residue = static_cast<unsigned>(s % 6);
    if (residue == 5) {
        const u128 exponent = (s + 1) / 6;
        return ThetaCoefficient((exponent % 2 == 0) ? 1 : -1);
    }
    if (residue == 1) {
        // Exponent (1 - s)/6 <= 0; the sign only depends on its parity.
        const u128 exponent_magnitude = (s - 1) / 6;
        return ThetaCoefficient((exponent_magnitude % 2 == 0) ? 1 : -1);
    }
    return ThetaCoefficient(0);
}

Integer lambda_coeff(std::uint64_t m) {
    if (m == 0) {
        throw std::domain_error("lambda_coeff: m must be >= 1 (lambda is consumed as x_1, x_2, ...)");
    }
    const int theta = theta_coeff(m).value();
    if (theta == 0) return Integer(0);
    Integer result = factorial(static_cast<std::size_t>(m));
    if (theta < 0) result = -result;
    return result;
}

SeriesCoefficients euler_series(std::size_t max_degree) {
    SeriesCoefficients s(max_degree);
    for (std::size_t m = 0; m <= max_degree; ++m) {
        s[m] = theta_coeff(m).value();
    }
    return s;
}

SeriesCoefficients euler_power_series(std::size_t power, std::size_t max_degree) {
    SeriesCoefficients result = SeriesCoefficients::one(max_degree);
    if (power == 0) return result;
    const SeriesCoefficients base = euler_series(max_degree);
    for (std::size_t i = 0; i < power; ++i) {
        result = convolve_truncated(result, base);
    }
    return result;
}

}  // namespace bellpart
