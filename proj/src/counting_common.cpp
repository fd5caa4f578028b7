#include "lensspec/counting.hpp"
#include "lensspec/errors.hpp"

namespace lensspec {

BigInt ShellCounts::total() const {
    BigInt sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
}

BigInt ReducedTable::at(int k, int zeros) const {
    if (zeros < 0 || zeros > n || k < 0) return 0;
    const auto& row = rows[static_cast<std::size_t>(zeros)];
    return k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0);
}

std::vector<LaurentPolynomial> phi_polynomials(const ReducedTable& reduced) {
    std::vector<LaurentPolynomial> out;
    for (const auto& row : reduced.rows) out.emplace_back(0, row);
    return out;
}

std::vector<LaurentPolynomial> phi_polynomials(const CongruenceLattice& lattice) {
    return phi_polynomials(reduced_counts(lattice));
}

namespace detail {
int checked_reduction_modulus(const CongruenceLattice& lattice, int modulus) {
    if (modulus == 0) return lattice.exponent();
    if (modulus < 1 || modulus % lattice.exponent() != 0)
        throw InvalidParameters("reduction modulus " + std::to_string(modulus) + " is not a multiple of q = " +
                                std::to_string(lattice.exponent()));
    return modulus;
}
}  // namespace detail

}  // namespace lensspec
