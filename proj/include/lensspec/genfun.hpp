#pragma once

#include <vector>

#include "lensspec/counting.hpp"
#include "lensspec/lattice.hpp"
#include "lensspec/laurent.hpp"
#include "lensspec/rational_series.hpp"

namespace lensspec {

/// theta^(l) for l = 0..n (denominator (1 - z^q)^{n-l}) and their sum theta
/// (denominator (1 - z^q)^n), all built from one reduced-count table.
struct ThetaFamily {
    int n = 2;
    int q = 1;
    std::vector<RationalSeries> by_zeros;
    RationalSeries total;
};

RationalSeries theta_ell_rational(const std::vector<LaurentPolynomial>& phi, int q, int ell);
RationalSeries theta_ell_rational(const CongruenceLattice& lattice, int ell);
RationalSeries theta_rational(const std::vector<LaurentPolynomial>& phi, int q);
RationalSeries theta_rational(const CongruenceLattice& lattice);
ThetaFamily theta_family(const CongruenceLattice& lattice);

/// sum_l l^h theta^(l), with 0^0 = 1.
RationalSeries weighted_theta(const ThetaFamily& theta, int h);

/// The Laurent polynomial A_p^(l)(z), 1 <= p <= n, 0 <= l <= n. Cached per (n, p, l).
LaurentPolynomial a_laurent(int p, int ell, int n);

/// F^p(z) = sum_k dim V^Gamma_{pi_{k,p+1}} z^k, 0 <= p <= n-1, as
/// (1/(1-z^2)^{n-1}) sum_l theta^(l) A_{p+1}^(l) + (-1)^{p+1} z^{-(p+1)}
/// on one common denominator. Throws NegativeOrderTerm if the pole does not cancel.
RationalSeries f_rational(const ThetaFamily& theta, int p);
RationalSeries f_rational(const CongruenceLattice& lattice, int p);
std::vector<RationalSeries> f_family(const ThetaFamily& theta);

/// (1/z)(theta / (1 - z^2)^{n-1} - 1), the closed form of F^0.
RationalSeries f0_closed_form(const ThetaFamily& theta);

}  // namespace lensspec
