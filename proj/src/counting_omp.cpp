#include <omp.h>

#include <cstdint>
#include <vector>

#include "lensspec/counting.hpp"
#include "lensspec/errors.hpp"

namespace lensspec {

namespace {

using Tally = std::vector<std::uint64_t>;

struct ShellItem {
    int k;
    unsigned support;  // bitmask of nonzero coordinates
};

// Visits every composition of `total` into `parts` positive parts, in
// lexicographic order of the leading parts.
template <class F>
void for_each_composition(int total, int parts, std::vector<int>& buf, F&& visit) {
    if (parts < 1 || total < parts) return;
    buf.assign(static_cast<std::size_t>(parts), 1);
    const auto last = static_cast<std::size_t>(parts - 1);
    int lead = parts - 1;  // sum of buf[0..parts-2]
    while (true) {
        buf[last] = total - lead;
        visit(buf);
        int i = parts - 2;
        while (i >= 0) {
            auto& slot = buf[static_cast<std::size_t>(i)];
            ++slot;
            ++lead;
            if (lead <= total - 1) break;
            lead -= slot - 1;
            slot = 1;
            --i;
        }
        if (i < 0) return;
    }
}

void count_item(const CongruenceLattice& lattice, const ShellItem& item, Tally& tally, std::vector<int>& a,
                std::vector<int>& parts, std::vector<int>& idx) {
    const int n = lattice.rank();
    idx.clear();
    for (int j = 0; j < n; ++j)
        if (item.support & (1u << j)) idx.push_back(j);
    const int m = static_cast<int>(idx.size());
    std::uint64_t hits = 0;
    for_each_composition(item.k, m, parts, [&](const std::vector<int>& comp) {
        for (unsigned signs = 0; signs < (1u << m); ++signs) {
            for (int t = 0; t < m; ++t)
                a[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])] =
                    (signs & (1u << t)) ? -comp[static_cast<std::size_t>(t)] : comp[static_cast<std::size_t>(t)];
            if (lattice.contains(a.data())) ++hits;
        }
    });
    for (int j : idx) a[static_cast<std::size_t>(j)] = 0;
    tally[static_cast<std::size_t>(item.k * (n + 1) + (n - m))] += hits;
}

}  // namespace

ShellTable shell_table(const CongruenceLattice& lattice, int k_max) {
    const int n = lattice.rank();
    if (k_max < 0) return {};
    if (n > 30) throw InvalidParameters("rank too large for enumeration");

    std::vector<ShellItem> items;
    for (int k = 1; k <= k_max; ++k)
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            if (__builtin_popcount(mask) <= k) items.push_back({k, mask});

    Tally total(static_cast<std::size_t>((k_max + 1) * (n + 1)), 0);
    total[static_cast<std::size_t>(n)] = 1;  // the zero vector

#pragma omp parallel
    {
        Tally local(total.size(), 0);
        std::vector<int> a(static_cast<std::size_t>(n), 0), parts, idx;
#pragma omp for schedule(dynamic, 4) nowait
        for (std::size_t i = 0; i < items.size(); ++i) count_item(lattice, items[i], local, a, parts, idx);
#pragma omp critical(lensspec_shell_merge)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
    }

    ShellTable out;
    for (int k = 0; k <= k_max; ++k) {
        ShellCounts sc{k, {}};
        for (int z = 0; z <= n; ++z) sc.counts.emplace_back(total[static_cast<std::size_t>(k * (n + 1) + z)]);
        out.push_back(std::move(sc));
    }
    return out;
}

ShellCounts shell_counts(const CongruenceLattice& lattice, int k) {
    if (k < 0) throw InvalidParameters("one-norm must be >= 0");
    const int n = lattice.rank();
    std::vector<ShellItem> items;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) <= k) items.push_back({k, mask});
    Tally total(static_cast<std::size_t>((k + 1) * (n + 1)), 0);
    if (k == 0) total[static_cast<std::size_t>(n)] = 1;
#pragma omp parallel
    {
        Tally local(total.size(), 0);
        std::vector<int> a(static_cast<std::size_t>(n), 0), parts, idx;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::size_t i = 0; i < items.size(); ++i) count_item(lattice, items[i], local, a, parts, idx);
#pragma omp critical(lensspec_shell_merge)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
    }
    ShellCounts sc{k, {}};
    for (int z = 0; z <= n; ++z) sc.counts.emplace_back(total[static_cast<std::size_t>(k * (n + 1) + z)]);
    return sc;
}

ReducedTable reduced_counts(const CongruenceLattice& lattice, int modulus) {
    const int q = detail::checked_reduction_modulus(lattice, modulus);
    const int n = lattice.rank();
    const std::int64_t side = 2 * q - 1;
    std::int64_t points = 1;
    for (int j = 0; j < n; ++j) {
        points *= side;
        if (points > (std::int64_t{1} << 40)) throw InvalidParameters("reduction box too large");
    }
    const int max_norm = n * (q - 1);
    const auto width = static_cast<std::size_t>(max_norm + 1);
    Tally total(static_cast<std::size_t>(n + 1) * width, 0);

#pragma omp parallel
    {
        Tally local(total.size(), 0);
        std::vector<int> a(static_cast<std::size_t>(n));
#pragma omp for schedule(static) nowait
        for (std::int64_t lin = 0; lin < points; ++lin) {
            std::int64_t rest = lin;
            int norm = 0;
            int zeros = 0;
            for (int j = 0; j < n; ++j) {
                int v = static_cast<int>(rest % side) - (q - 1);
                rest /= side;
                a[static_cast<std::size_t>(j)] = v;
                norm += v < 0 ? -v : v;
                zeros += v == 0;
            }
            if (lattice.contains(a.data())) ++local[static_cast<std::size_t>(zeros) * width + static_cast<std::size_t>(norm)];
        }
#pragma omp critical(lensspec_reduced_merge)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
    }

    ReducedTable out{n, q, {}};
    for (int z = 0; z <= n; ++z) {
        std::vector<BigInt> row;
        for (int k = 0; k <= (n - z) * (q - 1); ++k) row.emplace_back(total[static_cast<std::size_t>(z) * width + static_cast<std::size_t>(k)]);
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace lensspec
