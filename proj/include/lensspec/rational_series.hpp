#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lensspec/laurent.hpp"

namespace lensspec {

/// A rational function N(z) / prod (1 - z^a)^b with the denominator kept factored.
///
/// Periods a >= 1 and exponents b >= 1; factors with the same period are merged.
/// Equality is decided by cross-multiplying to a common factored denominator and
/// comparing numerators exactly, never by comparing truncated expansions.
class RationalSeries {
   public:
    using Denominator = std::map<int, int>;  // period -> exponent

    RationalSeries() = default;
    RationalSeries(LaurentPolynomial numerator) : num_(std::move(numerator)) {}  // NOLINT
    RationalSeries(LaurentPolynomial numerator, Denominator denominator);

    const LaurentPolynomial& numerator() const noexcept { return num_; }
    const Denominator& denominator() const noexcept { return den_; }

    /// Same value, written over the given denominator, which must be a multiple of ours.
    LaurentPolynomial numerator_over(const Denominator& common) const;

    /// Coefficients of z^0..z^order. Throws NegativeOrderTerm if the Laurent
    /// expansion has a nonzero coefficient at a negative exponent.
    std::vector<BigInt> expand(int order) const;

    /// Cancels denominator factors (1 - z^a) that divide the numerator exactly.
    RationalSeries simplified() const;

    RationalSeries& operator+=(const RationalSeries& rhs);
    RationalSeries& operator-=(const RationalSeries& rhs);
    RationalSeries& operator*=(const RationalSeries& rhs);
    RationalSeries operator-() const;

   private:
    void normalize();

    LaurentPolynomial num_;
    Denominator den_;
};

RationalSeries operator+(RationalSeries a, const RationalSeries& b);
RationalSeries operator-(RationalSeries a, const RationalSeries& b);
RationalSeries operator*(RationalSeries a, const RationalSeries& b);

/// lcm of two factored denominators (pointwise max of exponents).
RationalSeries::Denominator common_denominator(const RationalSeries::Denominator& a,
                                               const RationalSeries::Denominator& b);

std::vector<BigInt> series_expand(const RationalSeries& r, int order);
bool series_equal(const RationalSeries& a, const RationalSeries& b);
bool operator==(const RationalSeries& a, const RationalSeries& b);

/// Lowest exponent at which the expansions of a and b differ; nullopt when equal.
std::optional<int> first_difference(const RationalSeries& a, const RationalSeries& b);

/// "numerator | (1-z^a)^b * ..." ; an empty denominator prints as "1".
std::string to_string(const RationalSeries& r);
RationalSeries parse_rational_series(const std::string& text);
std::ostream& operator<<(std::ostream& os, const RationalSeries& r);

}  // namespace lensspec
