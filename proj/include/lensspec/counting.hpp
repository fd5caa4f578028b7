#pragma once

#include <vector>

#include "lensspec/bigint.hpp"
#include "lensspec/lattice.hpp"
#include "lensspec/laurent.hpp"

namespace lensspec {

/// N(k, l) for l = 0..n: lattice vectors of one-norm k with exactly l zero entries.
struct ShellCounts {
    int k = 0;
    std::vector<BigInt> counts;

    const BigInt& operator[](int zeros) const { return counts[static_cast<std::size_t>(zeros)]; }
    BigInt total() const;
};

/// Shell counts for k = 0..k_max, indexed by k.
using ShellTable = std::vector<ShellCounts>;

/// Reduced counts N^red(k, l): members of the open box |a_i| < modulus.
/// Row l has length (n - l)(modulus - 1) + 1; entries past it are zero.
struct ReducedTable {
    int n = 0;
    int modulus = 1;
    std::vector<std::vector<BigInt>> rows;

    BigInt at(int k, int zeros) const;
    int max_norm(int zeros) const { return (n - zeros) * (modulus - 1); }
};

// Production kernels (OpenMP).
ShellCounts shell_counts(const CongruenceLattice& lattice, int k);
ShellTable shell_table(const CongruenceLattice& lattice, int k_max);
/// `modulus` defaults to the lattice exponent and must be a multiple of it.
ReducedTable reduced_counts(const CongruenceLattice& lattice, int modulus = 0);

/// Phi^(l)(z) = sum_k N^red(k, l) z^k for l = 0..n.
std::vector<LaurentPolynomial> phi_polynomials(const ReducedTable& reduced);
std::vector<LaurentPolynomial> phi_polynomials(const CongruenceLattice& lattice);

/// Single-threaded reference implementations kept for testing and benchmarking.
/// They walk support subsets, sign patterns and compositions (or box values) in
/// lexicographic order and share no code with the parallel kernels.
namespace reference {
ShellTable shell_table(const CongruenceLattice& lattice, int k_max);
ReducedTable reduced_counts(const CongruenceLattice& lattice, int modulus = 0);
}  // namespace reference

namespace detail {
int checked_reduction_modulus(const CongruenceLattice& lattice, int modulus);
}

}  // namespace lensspec
