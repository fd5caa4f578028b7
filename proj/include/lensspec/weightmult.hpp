#pragma once

#include <vector>

#include "lensspec/bigint.hpp"
#include "lensspec/counting.hpp"
#include "lensspec/lattice.hpp"

namespace lensspec {

/// The two statistics a weight multiplicity of pi_{k,p} depends on:
/// the one-norm and the number of zero coordinates.
struct WeightClass {
    int norm = 0;
    int zeros = 0;
    int n = 2;

    /// zeros <= n, norm >= n - zeros, norm == 0 iff zeros == n.
    bool feasible() const noexcept {
        return zeros >= 0 && zeros <= n && norm >= n - zeros && ((norm == 0) == (zeros == n));
    }
};

/// pi_{k,p}: highest weight k e_1 + Lambda_p, the sum of the two summands
/// k e_1 + Lambda_n and k e_1 + Lambda_n - 2 e_n when p == n, and 0 when p == 0.
struct RepIndex {
    int k = 0;
    int p = 1;
    int n = 2;
};

/// Multiplicity of any weight in class `w` of pi_{k,p}, 1 <= p <= n, by the
/// closed alternating sum over (j, t, beta, alpha, i). Memoized, thread-safe.
BigInt weight_multiplicity(const RepIndex& idx, const WeightClass& w);

/// Number of integer vectors in Z^n with the given one-norm and zero count.
BigInt weight_class_size(const WeightClass& w);

/// M_Gamma(k, p) = dim of the Gamma-invariants in pi_{k-1,p}, for k >= 1.
/// `shells` must cover one-norms up to k - 1 + p. Returns 0 for p == 0.
BigInt m_gamma(const ShellTable& shells, int n, int k, int p);
BigInt m_gamma(const CongruenceLattice& lattice, int k, int p);

/// dim V^Gamma of pi_{k,p}; equals m_gamma(k + 1, p).
BigInt invariant_dimension(const CongruenceLattice& lattice, const RepIndex& idx);

/// dim V^Gamma_{pi_{k,p}} for k = 0..order, all from one shell table.
std::vector<BigInt> invariant_dimension_series(const CongruenceLattice& lattice, int p, int order);
std::vector<BigInt> invariant_dimension_series(const ShellTable& shells, int n, int p, int order);

}  // namespace lensspec
