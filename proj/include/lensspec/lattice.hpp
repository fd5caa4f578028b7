#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lensspec {

/// One generator of a finite subgroup of the block-rotation torus: the element
/// diag(R(2 pi s_1 / order), ..., R(2 pi s_n / order)).
struct Generator {
    int order = 1;
    std::vector<int> exponents;
};

/// A finite subgroup of the standard maximal torus of SO(2n), given by generators.
class TorusSubgroup {
   public:
    /// Normalizes: exponents reduced into [0, order), each generator divided by
    /// gcd(order, exponents), trivial generators dropped.
    TorusSubgroup(int n, std::vector<Generator> generators);

    int rank() const noexcept { return n_; }
    const std::vector<Generator>& generators() const noexcept { return gens_; }
    /// q(Gamma): least m with gamma^m = 1 for every element.
    int exponent() const noexcept { return exponent_; }
    /// True when the action on S^{2n-1} is free (the quotient is a manifold).
    bool acts_freely() const;

   private:
    int n_;
    std::vector<Generator> gens_;
    int exponent_ = 1;
};

/// One congruence sum_j coeffs[j] * a_j == 0 (mod modulus).
struct Congruence {
    int modulus = 1;
    std::vector<int> coeffs;
};

/// L_Gamma = { a in Z^n : all congruences hold }. Periodic modulo exponent().
class CongruenceLattice {
   public:
    CongruenceLattice(int n, std::vector<Congruence> congruences, bool manifold);

    int rank() const noexcept { return n_; }
    int exponent() const noexcept { return q_; }
    bool is_manifold() const noexcept { return manifold_; }
    const std::vector<Congruence>& congruences() const noexcept { return congs_; }

    /// Throws DimensionMismatch if a.size() != rank().
    bool member(std::span<const int> a) const;
    /// Unchecked membership for hot loops.
    bool contains(const int* a) const noexcept {
        for (const auto& c : congs_) {
            std::int64_t acc = 0;
            for (int j = 0; j < n_; ++j) acc += static_cast<std::int64_t>(a[j]) * c.coeffs[static_cast<std::size_t>(j)];
            if (acc % c.modulus != 0) return false;
        }
        return true;
    }

   private:
    int n_;
    std::vector<Congruence> congs_;
    int q_ = 1;
    bool manifold_;
};

/// Lattice of the orbifold lens space L(q; s_1, ..., s_n).
/// Throws InvalidParameters if gcd(q, s) != 1, q < 1 or n < 2.
CongruenceLattice lattice_from_lens(int q, std::span<const int> s);
CongruenceLattice lattice_from_group(const TorusSubgroup& group);

bool member(const CongruenceLattice& lattice, std::span<const int> a);

/// A parsed space description together with a printable name.
struct SpaceSpec {
    std::string name;
    TorusSubgroup group;
    CongruenceLattice lattice() const { return lattice_from_group(group); }
};

/// "L(q; s1,...,sn)".
SpaceSpec parse_lens_shorthand(const std::string& text);
/// One generator per line, "q: s1,s2,...,sn"; '#' starts a comment; ';' also separates lines.
SpaceSpec parse_generators(const std::string& text);
/// Either form.
SpaceSpec parse_space(const std::string& text);
SpaceSpec load_generator_file(const std::string& path);

std::string lens_name(int q, std::span<const int> s);

}  // namespace lensspec
