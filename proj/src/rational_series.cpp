#include "lensspec/rational_series.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "lensspec/errors.hpp"

namespace lensspec {

RationalSeries::RationalSeries(LaurentPolynomial numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RationalSeries::normalize() {
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->first < 1) throw InvalidParameters("denominator period must be >= 1");
        if (it->second < 0) throw InvalidParameters("denominator exponent must be >= 0");
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    if (num_.is_zero()) den_.clear();
}

RationalSeries::Denominator common_denominator(const RationalSeries::Denominator& a,
                                               const RationalSeries::Denominator& b) {
    RationalSeries::Denominator out = a;
    for (const auto& [period, power] : b) out[period] = std::max(out[period], power);
    return out;
}

LaurentPolynomial RationalSeries::numerator_over(const Denominator& common) const {
    LaurentPolynomial out = num_;
    for (const auto& [period, power] : common) {
        auto it = den_.find(period);
        int have = it == den_.end() ? 0 : it->second;
        if (have > power) throw InvalidParameters("target denominator does not contain this one");
        out = out.times_one_minus(period, power - have);
    }
    for (const auto& [period, power] : den_)
        if (!common.count(period)) throw InvalidParameters("target denominator does not contain this one");
    return out;
}

std::vector<BigInt> RationalSeries::expand(int order) const {
    if (order < 0) throw InvalidParameters("expansion order must be >= 0");
    const int low = num_.is_zero() ? 0 : std::min(num_.low(), 0);
    std::vector<BigInt> buf(static_cast<std::size_t>(order - low + 1));
    for (const auto& [e, c] : num_.terms())
        if (e <= order) buf[static_cast<std::size_t>(e - low)] = c;
    // dividing by (1 - z^a) is a running sum with stride a
    for (const auto& [period, power] : den_) {
        const auto a = static_cast<std::size_t>(period);
        for (int r = 0; r < power; ++r)
            for (std::size_t i = a; i < buf.size(); ++i) buf[i] += buf[i - a];
    }
    for (int e = low; e < 0; ++e)
        if (buf[static_cast<std::size_t>(e - low)] != 0)
            throw NegativeOrderTerm("nonzero coefficient at z^" + std::to_string(e));
    return {buf.begin() + (-low), buf.end()};
}

RationalSeries RationalSeries::simplified() const {
    RationalSeries out = *this;
    for (auto it = out.den_.rbegin(); it != out.den_.rend(); ++it)
        while (it->second > 0 && out.num_.divide_one_minus(it->first)) --it->second;
    out.normalize();
    return out;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& rhs) {
    Denominator common = common_denominator(den_, rhs.den_);
    num_ = numerator_over(common) + rhs.numerator_over(common);
    den_ = std::move(common);
    normalize();
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& rhs) { return *this += -rhs; }

RationalSeries& RationalSeries::operator*=(const RationalSeries& rhs) {
    num_ *= rhs.num_;
    for (const auto& [period, power] : rhs.den_) den_[period] += power;
    normalize();
    return *this;
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
RationalSeries operator*(RationalSeries a, const RationalSeries& b) { return a *= b; }

std::vector<BigInt> series_expand(const RationalSeries& r, int order) { return r.expand(order); }

bool series_equal(const RationalSeries& a, const RationalSeries& b) {
    auto common = common_denominator(a.denominator(), b.denominator());
    return a.numerator_over(common) == b.numerator_over(common);
}

bool operator==(const RationalSeries& a, const RationalSeries& b) { return series_equal(a, b); }

std::optional<int> first_difference(const RationalSeries& a, const RationalSeries& b) {
    // denominators are power series with constant term 1, so the lowest term of
    // the numerator difference is the lowest term of the series difference
    auto common = common_denominator(a.denominator(), b.denominator());
    LaurentPolynomial diff = a.numerator_over(common) - b.numerator_over(common);
    if (diff.is_zero()) return std::nullopt;
    return diff.low();
}

std::string to_string(const RationalSeries& r) {
    std::ostringstream os;
    os << to_string(r.numerator()) << " | ";
    if (r.denominator().empty()) {
        os << "1";
    } else {
        bool first = true;
        for (const auto& [period, power] : r.denominator()) {
            if (!first) os << " * ";
            os << "(1-z^" << period << ")^" << power;
            first = false;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalSeries& r) { return os << to_string(r); }

RationalSeries parse_rational_series(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) return RationalSeries(parse_laurent(text));
    LaurentPolynomial num = parse_laurent(text.substr(0, bar));
    std::string den;
    for (char ch : text.substr(bar + 1))
        if (ch != ' ') den.push_back(ch);
    RationalSeries::Denominator factors;
    if (den != "1") {
        std::size_t pos = 0;
        while (pos < den.size()) {
            int period = 0;
            int power = 0;
            int used = 0;
            if (std::sscanf(den.c_str() + pos, "(1-z^%d)^%d%n", &period, &power, &used) != 2 || period < 1 ||
                power < 1)
                throw ParseError("bad denominator factor in '" + text + "'");
            factors[period] += power;
            pos += static_cast<std::size_t>(used);
            if (pos < den.size()) {
                if (den[pos] != '*') throw ParseError("expected '*' in denominator of '" + text + "'");
                ++pos;
            }
        }
    }
    return RationalSeries(std::move(num), std::move(factors));
}

}  // namespace lensspec
