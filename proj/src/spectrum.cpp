#include "lensspec/spectrum.hpp"

#include <map>

#include "lensspec/counting.hpp"
#include "lensspec/errors.hpp"
#include "lensspec/weightmult.hpp"

namespace lensspec {

std::int64_t lambda(int k, int p, int n) {
    if (n < 2) throw InvalidParameters("rank n must be >= 2");
    if (p < -1 || p > n - 1) throw InvalidParameters("lambda needs p in -1..n-1");
    if (p == -1) return 0;
    return static_cast<std::int64_t>(k + p) * (k + 2 * n - 2 - p);
}

SpectrumTable spectrum_table(const CongruenceLattice& lattice, int p, int k_max) {
    const int n = lattice.rank();
    if (p < 0 || p > n - 1)
        throw InvalidParameters("p = " + std::to_string(p) + " out of range 0.." + std::to_string(n - 1));
    if (k_max < 1) throw InvalidParameters("k_max must be >= 1");

    const ShellTable shells = shell_table(lattice, k_max + p);
    // lower[k-1]: family p-1 at lambda_{k,p-1}; upper[k-1]: family p at lambda_{k,p}
    std::vector<BigInt> lower(static_cast<std::size_t>(k_max)), upper(static_cast<std::size_t>(k_max));
#pragma omp parallel for schedule(dynamic)
    for (int k = 1; k <= k_max; ++k) {
        lower[static_cast<std::size_t>(k - 1)] = m_gamma(shells, n, k, p);
        upper[static_cast<std::size_t>(k - 1)] = m_gamma(shells, n, k, p + 1);
    }

    std::map<std::int64_t, SpectrumEntry> by_value;
    auto add = [&](std::int64_t value, int k, int family, const BigInt& mult) {
        if (mult == 0) return;
        auto& e = by_value[value];
        e.eigenvalue = value;
        e.multiplicity += mult;
        e.contributors.push_back({k, family, mult});
    };
    if (p == 0) add(0, 0, 0, 1);  // constants
    for (int k = 1; k <= k_max; ++k) {
        if (p >= 1) add(lambda(k, p - 1, n), k, p - 1, lower[static_cast<std::size_t>(k - 1)]);
        add(lambda(k, p, n), k, p, upper[static_cast<std::size_t>(k - 1)]);
    }

    SpectrumTable out{n, p, k_max, {}};
    for (auto& [value, entry] : by_value) out.entries.push_back(std::move(entry));
    return out;
}

SpectrumTable spectrum_table_any_degree(const CongruenceLattice& lattice, int p, int k_max) {
    const int n = lattice.rank();
    if (p < 0 || p > 2 * n - 1)
        throw InvalidParameters("p = " + std::to_string(p) + " out of range 0.." + std::to_string(2 * n - 1));
    SpectrumTable table = spectrum_table(lattice, p < n ? p : 2 * n - 1 - p, k_max);
    table.p = p;
    return table;
}

}  // namespace lensspec
