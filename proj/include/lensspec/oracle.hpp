#pragma once

#include <span>
#include <vector>

#include "lensspec/bigint.hpp"

// Brute-force certification of the closed weight-multiplicity formulas.
// Nothing in the production path calls into this header.

namespace lensspec::oracle {

/// Weight multiplicities of one irreducible so(2n)-representation, stored densely
/// over the box |a_i| <= radius; lookups outside the box return 0.
class WeightTable {
   public:
    WeightTable(int n, int radius);

    int rank() const noexcept { return n_; }
    int radius() const noexcept { return radius_; }
    BigInt at(std::span<const int> mu) const;
    BigInt total() const;
    /// Calls visit(mu, multiplicity) for every weight with nonzero multiplicity.
    template <class F>
    void for_each(F&& visit) const {
        std::vector<int> mu(static_cast<std::size_t>(n_));
        for (std::size_t lin = 0; lin < mult_.size(); ++lin) {
            if (mult_[lin] == 0) continue;
            decode(lin, mu);
            visit(std::span<const int>(mu), BigInt(static_cast<long>(mult_[lin])));
        }
    }

    // used while building
    std::size_t index(std::span<const int> mu) const;
    bool inside(std::span<const int> mu) const;
    void decode(std::size_t lin, std::vector<int>& mu) const;
    std::size_t size() const noexcept { return mult_.size(); }
    long& raw(std::size_t lin) { return mult_[lin]; }
    long raw(std::size_t lin) const { return mult_[lin]; }

   private:
    int n_;
    int radius_;
    std::vector<long> mult_;
};

/// Freudenthal's recursion over the positive roots e_i -/+ e_j (i < j) of D_n,
/// with rho = (n-1, ..., 1, 0) and the standard inner product.
/// Throws NotDominant unless a_1 >= ... >= a_{n-1} >= |a_n|.
WeightTable freudenthal_weights(std::span<const int> highest, int n);

/// Weyl's product formula over the positive roots.
BigInt weyl_dimension(std::span<const int> highest, int n);

enum class MonomialKind { sym, ext };

/// Multisets (sym) or subsets (ext) of size `degree` of {+-e_i} summing to mu.
BigInt monomial_weight_count(MonomialKind kind, int degree, std::span<const int> mu, int n);

/// Multiplicity of mu in pi_{k,p} read off Freudenthal tables (both summands when p == n).
BigInt oracle_weight_multiplicity(int k, int p, std::span<const int> mu, int n);

/// Highest weights of the irreducible summands of pi_{k,p}.
std::vector<std::vector<int>> pi_highest_weights(int k, int p, int n);

/// A representative (norm - m + 1, 1, ..., 1, 0, ..., 0) with m = n - zeros nonzero entries.
std::vector<int> class_representative(int norm, int zeros, int n);

}  // namespace lensspec::oracle
