#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lensspec/bigint.hpp"

namespace lensspec {

/// Laurent polynomial in z with exact integer coefficients.
///
/// Stored as a dense run of coefficients starting at exponent `low()`, trimmed
/// so the first and last stored coefficients are nonzero. The zero polynomial
/// stores nothing, which makes the representation canonical and `==` a plain
/// structural comparison.
class LaurentPolynomial {
   public:
    struct Term {
        int exponent;
        BigInt coeff;
    };

    LaurentPolynomial() = default;
    LaurentPolynomial(const BigInt& c);  // NOLINT: constants convert implicitly
    LaurentPolynomial(long c) : LaurentPolynomial(BigInt(c)) {}
    LaurentPolynomial(int c) : LaurentPolynomial(BigInt(c)) {}
    /// Dense coefficients for z^low, z^(low+1), ...
    LaurentPolynomial(int low, std::vector<BigInt> coeffs);
    LaurentPolynomial(std::initializer_list<Term> terms);

    static LaurentPolynomial monomial(const BigInt& coeff, int exponent);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Lowest and highest exponents with nonzero coefficient; undefined on zero.
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int exponent) const;
    const std::vector<BigInt>& dense() const noexcept { return coeffs_; }
    std::vector<Term> terms() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator*=(const BigInt& s);
    LaurentPolynomial operator-() const;

    /// Multiply by z^e.
    LaurentPolynomial shifted(int e) const;
    /// Multiply by (1 - z^period)^power.
    LaurentPolynomial times_one_minus(int period, int power) const;
    /// Exact division by (1 - z^period); returns false (and leaves *this) if not divisible.
    bool divide_one_minus(int period);

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

   private:
    void trim();
    BigInt& at(int exponent);  // grows storage as needed; caller must trim()

    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& s);

LaurentPolynomial laurent_add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial laurent_mul(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial laurent_shift(const LaurentPolynomial& a, int e);

/// Sparse text form: "c*z^e" terms in ascending exponent order, e.g. "-1*z^-1 + 2*z^3".
std::string to_string(const LaurentPolynomial& p);
LaurentPolynomial parse_laurent(const std::string& text);
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace lensspec
