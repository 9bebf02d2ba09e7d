#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bellpart/integer.hpp"

namespace bellpart {

// Coefficient of q^m in Euler's product E(q) = prod_{j>=1} (1 - q^j).
// Always -1, 0 or +1; nonzero exactly when m is a generalized pentagonal
// number j(3j±1)/2, in which case the value is (-1)^j.
class ThetaCoefficient {
public:
    explicit ThetaCoefficient(int value);

    int value() const noexcept { return value_; }

    friend bool operator==(ThetaCoefficient, ThetaCoefficient) = default;

private:
    std::int8_t value_;
};

// Finite prefix of a formal power series with exact Integer coefficients.
// Index m holds the coefficient of q^m; size() == max_degree() + 1 >= 1.
class SeriesCoefficients {
public:
    explicit SeriesCoefficients(std::size_t max_degree)
        : coeffs_(max_degree + 1) {}

    // The constant series 1 truncated at max_degree.
    static SeriesCoefficients one(std::size_t max_degree);

    std::size_t max_degree() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    Integer& operator[](std::size_t m) { return coeffs_.at(m); }
    const Integer& operator[](std::size_t m) const { return coeffs_.at(m); }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const SeriesCoefficients&, const SeriesCoefficients&) = default;

private:
    std::vector<Integer> coeffs_;
};

// Schoolbook truncated product; the result is truncated to the shorter of
// the two input bounds. O(N^2) exact multiplications, zero terms skipped.
SeriesCoefficients convolve_truncated(const SeriesCoefficients& a,
                                      const SeriesCoefficients& b);

// theta_m. The pentagonal test runs in exact integer arithmetic: with
// s = isqrt(24m + 1), the value is nonzero iff s^2 == 24m + 1, and then
//   s ≡ 5 (mod 6)  ->  sign (-1)^e with e = (1+s)/6,
//   s ≡ 1 (mod 6)  ->  sign (-1)^|e| with e = (1-s)/6 <= 0.
// The two residue cases are mutually exclusive.
ThetaCoefficient theta_coeff(std::uint64_t m);

// lambda_m = theta_m * m!, the m-th derivative of E at 0. Requires m >= 1.
Integer lambda_coeff(std::uint64_t m);

// Coefficients of E(q) through q^max_degree, taken directly from the
// closed form theta_m (the product is never multiplied out).
SeriesCoefficients euler_series(std::size_t max_degree);

// Coefficients of E(q)^power through q^max_degree, by repeated truncated
// convolution. power == 0 yields the constant series 1. Index n holds
// p_power(n), the independent oracle for the Bell-formula route.
SeriesCoefficients euler_power_series(std::size_t power, std::size_t max_degree);

}  // namespace bellpart
