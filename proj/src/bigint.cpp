#include "lensspec/bigint.hpp"

namespace lensspec {

BigInt binom(std::int64_t b, std::int64_t a) {
    if (a < 0 || b < a) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(a));
    return out;
}

}  // namespace lensspec
