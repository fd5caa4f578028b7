#pragma once

#include <cstdint>
#include <vector>

#include "lensspec/bigint.hpp"
#include "lensspec/lattice.hpp"

namespace lensspec {

/// lambda_{k,p} = (k + p)(k + 2n - 2 - p), and 0 for p == -1.
std::int64_t lambda(int k, int p, int n);

struct Contributor {
    int k = 0;
    int family = 0;  // p - 1 or p
    BigInt multiplicity;
};

struct SpectrumEntry {
    std::int64_t eigenvalue = 0;
    BigInt multiplicity;
    std::vector<Contributor> contributors;
};

/// Eigenvalues of the Hodge-Laplacian on p-forms with k = 1..k_max, increasing.
/// Complete for every eigenvalue up to lambda_{k_max, max(p-1, 0)}.
struct SpectrumTable {
    int n = 2;
    int p = 0;      // degree as requested
    int k_max = 1;
    std::vector<SpectrumEntry> entries;
};

/// p in 0..n-1. Throws InvalidParameters otherwise.
SpectrumTable spectrum_table(const CongruenceLattice& lattice, int p, int k_max);

/// p in 0..2n-1, degrees n..2n-1 served through spec_p = spec_{2n-1-p}.
SpectrumTable spectrum_table_any_degree(const CongruenceLattice& lattice, int p, int k_max);

}  // namespace lensspec
