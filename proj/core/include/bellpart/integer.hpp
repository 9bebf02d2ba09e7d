#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bellpart {

// Universal exact scalar. Every quantity in the library is an Integer;
// no floating point is used anywhere, not even for square-root tests.
using Integer = mpz_class;

// floor(sqrt(x)) by pure integer Newton iteration.
std::uint64_t isqrt_u64(std::uint64_t x);

// a / b with the guarantee that b divides a. A nonzero remainder throws
// ConsistencyError with `context` in the message.
Integer exact_div(const Integer& a, const Integer& b, const char* context);

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

inline int sign_of(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

}  // namespace bellpart
