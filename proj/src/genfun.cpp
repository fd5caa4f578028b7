#include "lensspec/genfun.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lensspec/errors.hpp"

namespace lensspec {

RationalSeries theta_ell_rational(const std::vector<LaurentPolynomial>& phi, int q, int ell) {
    const int n = static_cast<int>(phi.size()) - 1;
    if (ell < 0 || ell > n) throw InvalidParameters("l must lie in 0..n");
    LaurentPolynomial num;
    for (int s = 0; s <= n - ell; ++s) {
        BigInt c = binom(ell + s, s);
        c <<= s;
        num += (phi[static_cast<std::size_t>(ell + s)] * c).shifted(s * q);
    }
    return RationalSeries(std::move(num), {{q, n - ell}});
}

RationalSeries theta_ell_rational(const CongruenceLattice& lattice, int ell) {
    return theta_ell_rational(phi_polynomials(lattice), lattice.exponent(), ell);
}

RationalSeries theta_rational(const std::vector<LaurentPolynomial>& phi, int q) {
    const int n = static_cast<int>(phi.size()) - 1;
    LaurentPolynomial num;
    for (int t = 0; t <= n; ++t) {
        LaurentPolynomial inner;
        for (int ell = t; ell <= n; ++ell) inner += phi[static_cast<std::size_t>(ell)] * binom(ell, t);
        num += inner.shifted(t * q);
    }
    return RationalSeries(std::move(num), {{q, n}});
}

RationalSeries theta_rational(const CongruenceLattice& lattice) {
    return theta_rational(phi_polynomials(lattice), lattice.exponent());
}

ThetaFamily theta_family(const CongruenceLattice& lattice) {
    const auto phi = phi_polynomials(lattice);
    ThetaFamily out{lattice.rank(), lattice.exponent(), {}, {}};
    for (int ell = 0; ell <= out.n; ++ell) out.by_zeros.push_back(theta_ell_rational(phi, out.q, ell));
    out.total = theta_rational(phi, out.q);
    return out;
}

RationalSeries weighted_theta(const ThetaFamily& theta, int h) {
    if (h < 0) throw InvalidParameters("h must be >= 0");
    RationalSeries out;
    for (int ell = 0; ell <= theta.n; ++ell) {
        BigInt w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(h));
        out += theta.by_zeros[static_cast<std::size_t>(ell)] * RationalSeries(LaurentPolynomial(w));
    }
    return out;
}

namespace {

LaurentPolynomial a_laurent_uncached(int p, int ell, int n) {
    LaurentPolynomial out;
    for (int j = 1; j <= p; ++j) {
        const int sign = j % 2 == 1 ? 1 : -1;
        for (int t = 0; t <= (p - j) / 2; ++t) {
            const BigInt c_t = binom(n - p + j + 2 * t, t);
            for (int beta = 0; beta <= p - j - 2 * t; ++beta) {
                const int rest = p - j - 2 * t - beta;
                BigInt c = c_t * binom(n - ell, beta) * binom(ell, rest);
                if (c == 0) continue;
                c <<= rest;
                c *= sign;
                for (int alpha = 0; alpha <= beta; ++alpha) {
                    const BigInt c_alpha = c * binom(beta, alpha);
                    for (int i = 0; i <= j - 1; ++i) out += LaurentPolynomial::monomial(c_alpha, p - 2 * (j + t + alpha - i));
                }
            }
        }
    }
    return out;
}

std::mutex a_mutex;
std::map<std::tuple<int, int, int>, LaurentPolynomial> a_cache;

}  // namespace

LaurentPolynomial a_laurent(int p, int ell, int n) {
    if (n < 2) throw InvalidParameters("rank n must be >= 2");
    if (p < 1 || p > n) throw InvalidParameters("A_p^(l) needs 1 <= p <= n");
    if (ell < 0 || ell > n) throw InvalidParameters("A_p^(l) needs 0 <= l <= n");
    const auto key = std::make_tuple(n, p, ell);
    {
        std::lock_guard lock(a_mutex);
        if (auto it = a_cache.find(key); it != a_cache.end()) return it->second;
    }
    LaurentPolynomial value = a_laurent_uncached(p, ell, n);
    std::lock_guard lock(a_mutex);
    return a_cache.emplace(key, std::move(value)).first->second;
}

RationalSeries f_rational(const ThetaFamily& theta, int p) {
    const int n = theta.n;
    if (p < 0 || p > n - 1) throw InvalidParameters("F^p needs 0 <= p <= n-1");
    RationalSeries sum;
    for (int ell = 0; ell <= n; ++ell)
        sum += theta.by_zeros[static_cast<std::size_t>(ell)] * RationalSeries(a_laurent(p + 1, ell, n));
    sum *= RationalSeries(LaurentPolynomial(1), {{2, n - 1}});
    sum += RationalSeries(LaurentPolynomial::monomial(p % 2 == 0 ? -1 : 1, -(p + 1)));
    if (!sum.numerator().is_zero() && sum.numerator().low() < 0)
        throw NegativeOrderTerm("F^" + std::to_string(p) + " keeps a pole at z = 0");
    return sum;
}

RationalSeries f_rational(const CongruenceLattice& lattice, int p) { return f_rational(theta_family(lattice), p); }

std::vector<RationalSeries> f_family(const ThetaFamily& theta) {
    std::vector<RationalSeries> out;
    for (int p = 0; p < theta.n; ++p) out.push_back(f_rational(theta, p));
    return out;
}

RationalSeries f0_closed_form(const ThetaFamily& theta) {
    RationalSeries out = theta.total * RationalSeries(LaurentPolynomial(1), {{2, theta.n - 1}});
    out -= RationalSeries(LaurentPolynomial(1));
    return out * RationalSeries(LaurentPolynomial::monomial(1, -1));
}

}  // namespace lensspec
