#include "lensspec/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "lensspec/errors.hpp"

namespace lensspec {

LaurentPolynomial::LaurentPolynomial(const BigInt& c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPolynomial::LaurentPolynomial(int low, std::vector<BigInt> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    trim();
}

LaurentPolynomial::LaurentPolynomial(std::initializer_list<Term> terms) {
    for (const auto& t : terms) at(t.exponent) += t.coeff;
    trim();
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& coeff, int exponent) {
    return LaurentPolynomial(exponent, {coeff});
}

BigInt LaurentPolynomial::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<LaurentPolynomial::Term> LaurentPolynomial::terms() const {
    std::vector<Term> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.push_back({low_ + static_cast<int>(i), coeffs_[i]});
    return out;
}

BigInt& LaurentPolynomial::at(int exponent) {
    if (coeffs_.empty()) {
        low_ = exponent;
        coeffs_.resize(1);
    } else if (exponent < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - exponent), BigInt(0));
        low_ = exponent;
    } else if (exponent > high()) {
        coeffs_.resize(static_cast<std::size_t>(exponent - low_ + 1));
    }
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPolynomial::trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
    coeffs_.erase(last.base(), coeffs_.end());
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
    if (rhs.is_zero()) return *this;
    at(rhs.low_);
    at(rhs.high());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + i] += rhs.coeffs_[i];
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) { return *this += -rhs; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        *this = LaurentPolynomial();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    low_ += rhs.low_;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigInt& s) {
    if (s == 0) return *this = LaurentPolynomial();
    for (auto& c : coeffs_) c *= s;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int e) const {
    LaurentPolynomial out = *this;
    if (!out.is_zero()) out.low_ += e;
    return out;
}

LaurentPolynomial LaurentPolynomial::times_one_minus(int period, int power) const {
    LaurentPolynomial out = *this;
    for (int r = 0; r < power && !out.is_zero(); ++r) {
        std::vector<BigInt> next(out.coeffs_.size() + static_cast<std::size_t>(period));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
            next[i] += out.coeffs_[i];
            next[i + static_cast<std::size_t>(period)] -= out.coeffs_[i];
        }
        out.coeffs_ = std::move(next);
        out.trim();
    }
    return out;
}

bool LaurentPolynomial::divide_one_minus(int period) {
    if (is_zero()) return true;
    const auto a = static_cast<std::size_t>(period);
    if (coeffs_.size() <= a) return false;
    // N = (1 - z^a) Q  =>  Q[i] = N[i] + Q[i - a]
    std::vector<BigInt> quot(coeffs_.size() - a);
    for (std::size_t i = 0; i < quot.size(); ++i) quot[i] = coeffs_[i] + (i >= a ? quot[i - a] : BigInt(0));
    // remaining coefficients must match -Q shifted by a
    for (std::size_t i = quot.size(); i < coeffs_.size(); ++i) {
        const BigInt expect = i >= a ? BigInt(-quot[i - a]) : BigInt(0);
        if (coeffs_[i] != expect) return false;
    }
    coeffs_ = std::move(quot);
    trim();
    return true;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    return out *= b;
}
LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& s) { return a *= s; }

LaurentPolynomial laurent_add(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + b; }
LaurentPolynomial laurent_mul(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; }
LaurentPolynomial laurent_shift(const LaurentPolynomial& a, int e) { return a.shifted(e); }

std::string to_string(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            os << c.get_str();
        } else {
            os << (c < 0 ? " - " : " + ") << BigInt(abs(c)).get_str();
        }
        os << "*z^" << e;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << to_string(p); }

namespace {

long parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw ParseError("bad integer '" + s + "' in '" + context + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + s + "' in '" + context + "'");
    }
}

}  // namespace

LaurentPolynomial parse_laurent(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");

    // split into signed terms; a sign directly after '^' belongs to the exponent
    std::vector<std::string> pieces;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^') {
            pieces.push_back(cur);
            cur.clear();
        }
        cur.push_back(ch);
    }
    pieces.push_back(cur);

    LaurentPolynomial out;
    for (std::string term : pieces) {
        if (!term.empty() && term[0] == '+') term.erase(0, 1);
        if (term.empty()) throw ParseError("empty term in '" + text + "'");
        BigInt coeff = 1;
        int exponent = 0;
        auto z = term.find('z');
        std::string coeff_part = z == std::string::npos ? term : term.substr(0, z);
        if (z != std::string::npos) {
            std::string rest = term.substr(z + 1);
            if (rest.empty()) {
                exponent = 1;
            } else if (rest[0] == '^') {
                exponent = static_cast<int>(parse_int(rest.substr(1), text));
            } else {
                throw ParseError("bad term '" + term + "'");
            }
            if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.pop_back();
        }
        if (coeff_part == "-") {
            coeff = -1;
        } else if (!coeff_part.empty()) {
            if (coeff.set_str(coeff_part, 10) != 0) throw ParseError("bad coefficient '" + coeff_part + "'");
        }
        out += LaurentPolynomial::monomial(coeff, exponent);
    }
    return out;
}

}  // namespace lensspec
