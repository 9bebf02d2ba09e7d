#pragma once

#include <cstddef>

#include "bellpart/integer.hpp"

namespace bellpart {

// n!, served from a shared monotone cache. Thread-safe.
Integer factorial(std::size_t n);

// C(n, k) as an exact Integer. Small n is served from a cached Pascal
// triangle (the nested sums query the same rows over and over); larger n
// falls back to the multiplicative product, whose partial divisions are
// all exact. Thread-safe.
Integer binomial(std::size_t n, std::size_t k);

}  // namespace bellpart
