#include <functional>

#include "lensspec/counting.hpp"

namespace lensspec::reference {

namespace {

// Lexicographic k-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j < n; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Calls visit(values) for every assignment of values in [lo, hi] to `slots`
// positions, restricted to those summing to `sum` when sum >= 0.
void assignments(int slots, int lo, int hi, int sum, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (static_cast<int>(cur.size()) == slots) {
            if (sum < 0 || left == 0) visit(cur);
            return;
        }
        for (int v = lo; v <= hi; ++v) {
            if (sum >= 0 && v > left) break;
            cur.push_back(v);
            rec(sum >= 0 ? left - v : left);
            cur.pop_back();
        }
    };
    rec(sum);
}

}  // namespace

ShellTable shell_table(const CongruenceLattice& lattice, int k_max) {
    const int n = lattice.rank();
    ShellTable out;
    for (int k = 0; k <= k_max; ++k) {
        ShellCounts sc{k, std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0)};
        if (k == 0) sc.counts[static_cast<std::size_t>(n)] = 1;
        for (int m = 1; m <= std::min(n, k); ++m) {
            for (const auto& support : subsets(n, m)) {
                for (unsigned signs = 0; signs < (1u << m); ++signs) {
                    assignments(m, 1, k, k, [&](const std::vector<int>& parts) {
                        std::vector<int> a(static_cast<std::size_t>(n), 0);
                        for (int t = 0; t < m; ++t)
                            a[static_cast<std::size_t>(support[static_cast<std::size_t>(t)])] =
                                (signs >> t & 1u) ? -parts[static_cast<std::size_t>(t)] : parts[static_cast<std::size_t>(t)];
                        if (lattice.member(a)) sc.counts[static_cast<std::size_t>(n - m)] += 1;
                    });
                }
            }
        }
        out.push_back(std::move(sc));
    }
    return out;
}

ReducedTable reduced_counts(const CongruenceLattice& lattice, int modulus) {
    const int q = detail::checked_reduction_modulus(lattice, modulus);
    const int n = lattice.rank();
    ReducedTable out{n, q, {}};
    for (int z = 0; z <= n; ++z)
        out.rows.emplace_back(static_cast<std::size_t>((n - z) * (q - 1) + 1), BigInt(0));
    out.rows[static_cast<std::size_t>(n)][0] = 1;
    for (int m = 1; m <= n && q > 1; ++m) {
        for (const auto& support : subsets(n, m)) {
            for (unsigned signs = 0; signs < (1u << m); ++signs) {
                assignments(m, 1, q - 1, -1, [&](const std::vector<int>& vals) {
                    std::vector<int> a(static_cast<std::size_t>(n), 0);
                    int norm = 0;
                    for (int t = 0; t < m; ++t) {
                        int v = vals[static_cast<std::size_t>(t)];
                        norm += v;
                        a[static_cast<std::size_t>(support[static_cast<std::size_t>(t)])] = (signs >> t & 1u) ? -v : v;
                    }
                    if (lattice.member(a)) out.rows[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(norm)] += 1;
                });
            }
        }
    }
    return out;
}

}  // namespace lensspec::reference
