#include "lensspec/weightmult.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lensspec/errors.hpp"

namespace lensspec {

namespace {

BigInt closed_sum(int n, int k, int p, int norm, int zeros) {
    const int twice_r = k + p - norm;
    if (twice_r < 0 || twice_r % 2 != 0) return 0;
    const int r = twice_r / 2;
    BigInt total = 0;
    for (int j = 1; j <= p; ++j) {
        BigInt over_t = 0;
        for (int t = 0; t <= (p - j) / 2; ++t) {
            const BigInt c_t = binom(n - p + j + 2 * t, t);
            if (c_t == 0) continue;
            BigInt over_beta = 0;
            for (int beta = 0; beta <= p - j - 2 * t; ++beta) {
                const int rest = p - j - 2 * t - beta;
                BigInt c_beta = binom(n - zeros, beta) * binom(zeros, rest);
                if (c_beta == 0) continue;
                c_beta <<= rest;
                BigInt over_alpha = 0;
                for (int alpha = 0; alpha <= beta; ++alpha) {
                    BigInt over_i = 0;
                    for (int i = 0; i <= j - 1; ++i) over_i += binom(r - i - p + alpha + t + j + n - 2, n - 2);
                    over_alpha += binom(beta, alpha) * over_i;
                }
                over_beta += c_beta * over_alpha;
            }
            over_t += c_t * over_beta;
        }
        if (j % 2 == 1) {
            total += over_t;
        } else {
            total -= over_t;
        }
    }
    return total;
}

std::mutex memo_mutex;
std::map<std::tuple<int, int, int, int, int>, BigInt> memo;

}  // namespace

BigInt weight_multiplicity(const RepIndex& idx, const WeightClass& w) {
    if (idx.n < 2) throw InvalidParameters("rank n must be >= 2");
    if (w.n != idx.n) throw DimensionMismatch("weight class rank differs from representation rank");
    if (idx.p < 1 || idx.p > idx.n) throw InvalidParameters("p must lie in 1..n");
    if (idx.k < 0) throw InvalidParameters("k must be >= 0");
    const auto key = std::make_tuple(idx.n, idx.k, idx.p, w.norm, w.zeros);
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    BigInt value = closed_sum(idx.n, idx.k, idx.p, w.norm, w.zeros);
    std::lock_guard lock(memo_mutex);
    memo.emplace(key, value);
    return value;
}

BigInt weight_class_size(const WeightClass& w) {
    if (!w.feasible()) return 0;
    const int nonzero = w.n - w.zeros;
    if (nonzero == 0) return 1;
    BigInt out = binom(w.n, nonzero) * binom(w.norm - 1, nonzero - 1);
    out <<= nonzero;
    return out;
}

BigInt m_gamma(const ShellTable& shells, int n, int k, int p) {
    if (n < 2) throw InvalidParameters("rank n must be >= 2");
    if (k < 1) throw InvalidParameters("M_Gamma(k, p) needs k >= 1");
    if (p < 0 || p > n) throw InvalidParameters("p must lie in 0..n");
    if (p == 0) return 0;
    const int top = k - 1 + p;
    if (static_cast<int>(shells.size()) <= top) throw InvalidParameters("shell table too short for M_Gamma");
    BigInt total = 0;
    for (int zeros = 0; zeros <= n; ++zeros) {
        for (int r = 0; r <= top / 2; ++r) {
            const BigInt& count = shells[static_cast<std::size_t>(top - 2 * r)][zeros];
            if (count == 0) continue;
            total += count * weight_multiplicity({k - 1, p, n}, {top - 2 * r, zeros, n});
        }
    }
    return total;
}

BigInt m_gamma(const CongruenceLattice& lattice, int k, int p) {
    if (k < 1) throw InvalidParameters("M_Gamma(k, p) needs k >= 1");
    return m_gamma(shell_table(lattice, k - 1 + std::max(p, 0)), lattice.rank(), k, p);
}

BigInt invariant_dimension(const CongruenceLattice& lattice, const RepIndex& idx) {
    if (idx.n != lattice.rank()) throw DimensionMismatch("representation rank differs from lattice rank");
    if (idx.p < 1 || idx.p > idx.n) throw InvalidParameters("p must lie in 1..n");
    return m_gamma(lattice, idx.k + 1, idx.p);
}

std::vector<BigInt> invariant_dimension_series(const ShellTable& shells, int n, int p, int order) {
    std::vector<BigInt> out(static_cast<std::size_t>(order + 1));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = m_gamma(shells, n, k + 1, p);
    return out;
}

std::vector<BigInt> invariant_dimension_series(const CongruenceLattice& lattice, int p, int order) {
    return invariant_dimension_series(shell_table(lattice, order + p), lattice.rank(), p, order);
}

}  // namespace lensspec
