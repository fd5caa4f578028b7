#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lensspec/genfun.hpp"
#include "lensspec/lattice.hpp"

namespace lensspec {

/// Isometry class of an orbifold lens space L(q; s): the lexicographically
/// smallest sorted vector of min(t s_i mod q, q - t s_i mod q) over units t.
struct LensKey {
    int q = 1;
    int n = 2;
    std::vector<int> exponents;

    std::string name() const;
    auto operator<=>(const LensKey&) const = default;
};

/// Throws InvalidParameters unless q >= 1, n >= 2 and gcd(q, s) = 1.
LensKey canonical_key(int q, std::span<const int> s);
CongruenceLattice lattice_from_key(const LensKey& key);

/// F^{p-1} and F^p agree (F^{-1} = 0). 0 <= p <= n-1.
bool p_isospectral(const CongruenceLattice& a, const CongruenceLattice& b, int p);
bool p_isospectral(const ThetaFamily& a, const ThetaFamily& b, int p);

/// sum_l l^h theta^(l) agree for every 0 <= h <= p0.
bool isospectral_range(const CongruenceLattice& a, const CongruenceLattice& b, int p0);
bool isospectral_range(const ThetaFamily& a, const ThetaFamily& b, int p0);

/// All refined theta^(l) agree.
bool norm_star_isospectral(const CongruenceLattice& a, const CongruenceLattice& b);
bool norm_star_isospectral(const ThetaFamily& a, const ThetaFamily& b);
/// Same verdict from the finite data: reduced tables taken modulo lcm(q_a, q_b).
bool norm_star_isospectral_finite(const CongruenceLattice& a, const CongruenceLattice& b);

enum class SearchMode { manifolds, orbifolds };

/// Every isometry class of L(q; s) in the given mode, sorted by key.
std::vector<LensKey> lens_classes(int q, int n, SearchMode mode);

struct IsospectralFamily {
    int id = 0;
    int p0 = 0;
    std::vector<LensKey> members;
    std::string fingerprint;  // FNV-1a of the theta fingerprint, hex
};

/// Families (size >= 2) of pairwise [0, p0]-isospectral, non-isometric spaces,
/// ordered by their smallest key. Independent of the thread count.
std::vector<IsospectralFamily> search(int q, int n, int p0, SearchMode mode);

}  // namespace lensspec
