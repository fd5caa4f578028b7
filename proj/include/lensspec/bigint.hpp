#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lensspec {

using BigInt = mpz_class;

/// Binomial coefficient with the convention binom(b, a) = 0 when b < a or a < 0.
BigInt binom(std::int64_t b, std::int64_t a);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace lensspec
