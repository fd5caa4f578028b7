#include "lensspec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "lensspec/errors.hpp"

namespace lensspec::oracle {

namespace {

struct Root {
    int i, j, sign;  // e_i + sign * e_j
};

std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.push_back({i, j, -1});
            out.push_back({i, j, +1});
        }
    return out;
}

void require_dominant(std::span<const int> w, int n) {
    if (static_cast<int>(w.size()) != n || n < 2) throw NotDominant("weight has wrong length");
    for (int i = 0; i + 2 < n; ++i)
        if (w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i + 1)]) throw NotDominant("weight is not dominant");
    if (w[static_cast<std::size_t>(n - 2)] < std::abs(w[static_cast<std::size_t>(n - 1)]))
        throw NotDominant("weight is not dominant");
}

long checked_add(long a, long b) {
    long out;
    if (__builtin_add_overflow(a, b, &out)) throw Error("Overflow", "oracle multiplicity overflow");
    return out;
}

long checked_mul(long a, long b) {
    long out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("Overflow", "oracle multiplicity overflow");
    return out;
}

}  // namespace

WeightTable::WeightTable(int n, int radius) : n_(n), radius_(radius) {
    std::size_t size = 1;
    for (int j = 0; j < n; ++j) size *= static_cast<std::size_t>(2 * radius + 1);
    mult_.assign(size, 0);
}

bool WeightTable::inside(std::span<const int> mu) const {
    return std::all_of(mu.begin(), mu.end(), [this](int a) { return a >= -radius_ && a <= radius_; });
}

std::size_t WeightTable::index(std::span<const int> mu) const {
    std::size_t lin = 0;
    for (int j = n_ - 1; j >= 0; --j)
        lin = lin * static_cast<std::size_t>(2 * radius_ + 1) + static_cast<std::size_t>(mu[static_cast<std::size_t>(j)] + radius_);
    return lin;
}

void WeightTable::decode(std::size_t lin, std::vector<int>& mu) const {
    mu.resize(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        mu[static_cast<std::size_t>(j)] = static_cast<int>(lin % static_cast<std::size_t>(2 * radius_ + 1)) - radius_;
        lin /= static_cast<std::size_t>(2 * radius_ + 1);
    }
}

BigInt WeightTable::at(std::span<const int> mu) const {
    if (static_cast<int>(mu.size()) != n_) throw DimensionMismatch("weight length differs from rank");
    if (!inside(mu)) return 0;
    return BigInt(mult_[index(mu)]);
}

BigInt WeightTable::total() const {
    BigInt sum = 0;
    for (long m : mult_) sum += m;
    return sum;
}

WeightTable freudenthal_weights(std::span<const int> highest, int n) {
    require_dominant(highest, n);
    const int radius = highest[0];
    WeightTable table(n, radius);
    const auto roots = positive_roots(n);

    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - 1 - i;
    auto dot = [n](const std::vector<int>& a, const std::vector<int>& b) {
        long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
        return s;
    };
    std::vector<int> top(highest.begin(), highest.end());
    std::vector<int> top_rho(top);
    for (int i = 0; i < n; ++i) top_rho[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    const long top_norm = dot(top_rho, top_rho);
    const long top_sum = std::accumulate(top.begin(), top.end(), 0L);

    // every mu + j*alpha has strictly larger <., rho>, so process by <mu, rho> descending
    std::vector<std::pair<long, std::size_t>> order;
    std::vector<int> mu;
    for (std::size_t lin = 0; lin < table.size(); ++lin) {
        table.decode(lin, mu);
        order.emplace_back(-dot(mu, rho), lin);
    }
    std::sort(order.begin(), order.end());

    std::vector<int> shifted;
    for (const auto& [neg_height, lin] : order) {
        table.decode(lin, mu);
        if (mu == top) {
            table.raw(lin) = 1;
            continue;
        }
        if ((top_sum - std::accumulate(mu.begin(), mu.end(), 0L)) % 2 != 0) continue;  // not in the root coset
        std::vector<int> mu_rho(mu);
        for (int i = 0; i < n; ++i) mu_rho[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
        const long gap = top_norm - dot(mu_rho, mu_rho);
        if (gap <= 0) continue;
        long acc = 0;
        for (const auto& root : roots) {
            shifted = mu;
            for (int step = 1;; ++step) {
                shifted[static_cast<std::size_t>(root.i)] += 1;
                shifted[static_cast<std::size_t>(root.j)] += root.sign;
                if (!table.inside(shifted)) break;
                const long m = table.raw(table.index(shifted));
                if (m == 0) continue;
                const long pairing = shifted[static_cast<std::size_t>(root.i)] + root.sign * shifted[static_cast<std::size_t>(root.j)];
                acc = checked_add(acc, checked_mul(m, pairing));
            }
        }
        acc = checked_mul(acc, 2);
        if (acc % gap != 0) throw Error("OracleFailure", "Freudenthal recursion produced a non-integer");
        table.raw(lin) = acc / gap;
    }
    return table;
}

BigInt weyl_dimension(std::span<const int> highest, int n) {
    require_dominant(highest, n);
    mpq_class dim = 1;
    for (const auto& root : positive_roots(n)) {
        const long rho_i = n - 1 - root.i;
        const long rho_j = n - 1 - root.j;
        const long num = (highest[static_cast<std::size_t>(root.i)] + rho_i) + root.sign * (highest[static_cast<std::size_t>(root.j)] + rho_j);
        const long den = rho_i + root.sign * rho_j;
        dim *= mpq_class(num, den);
    }
    dim.canonicalize();
    if (dim.get_den() != 1) throw Error("OracleFailure", "Weyl dimension is not an integer");
    return dim.get_num();
}

BigInt monomial_weight_count(MonomialKind kind, int degree, std::span<const int> mu, int n) {
    if (static_cast<int>(mu.size()) != n) throw DimensionMismatch("weight length differs from rank");
    if (degree < 0) throw InvalidParameters("degree must be >= 0");
    // the 2n weights: index 2i -> +e_i, 2i+1 -> -e_i
    const int items = 2 * n;
    const int max_mult = kind == MonomialKind::ext ? 1 : degree;
    std::vector<int> sum(static_cast<std::size_t>(n), 0);
    BigInt count = 0;
    std::function<void(int, int)> rec = [&](int item, int left) {
        if (item == items) {
            if (left == 0 && std::equal(sum.begin(), sum.end(), mu.begin())) ++count;
            return;
        }
        const int coord = item / 2;
        const int dir = item % 2 == 0 ? 1 : -1;
        for (int c = 0; c <= std::min(left, max_mult); ++c) {
            sum[static_cast<std::size_t>(coord)] += c * dir;
            rec(item + 1, left - c);
            sum[static_cast<std::size_t>(coord)] -= c * dir;
        }
    };
    rec(0, degree);
    return count;
}

std::vector<std::vector<int>> pi_highest_weights(int k, int p, int n) {
    if (p < 1 || p > n) throw InvalidParameters("pi_{k,p} oracle needs 1 <= p <= n");
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < p; ++i) w[static_cast<std::size_t>(i)] = 1;
    w[0] += k;
    std::vector<std::vector<int>> out{w};
    if (p == n) {
        w[static_cast<std::size_t>(n - 1)] -= 2;
        out.push_back(w);
    }
    return out;
}

namespace {
std::mutex table_mutex;
std::map<std::vector<int>, WeightTable> table_cache;

const WeightTable& cached_table(const std::vector<int>& highest, int n) {
    {
        std::lock_guard lock(table_mutex);
        if (auto it = table_cache.find(highest); it != table_cache.end()) return it->second;
    }
    WeightTable t = freudenthal_weights(highest, n);
    std::lock_guard lock(table_mutex);
    return table_cache.emplace(highest, std::move(t)).first->second;
}
}  // namespace

BigInt oracle_weight_multiplicity(int k, int p, std::span<const int> mu, int n) {
    BigInt total = 0;
    for (const auto& hw : pi_highest_weights(k, p, n)) total += cached_table(hw, n).at(mu);
    return total;
}

std::vector<int> class_representative(int norm, int zeros, int n) {
    const int nonzero = n - zeros;
    if (zeros < 0 || zeros > n || norm < nonzero || (norm == 0) != (nonzero == 0))
        throw InvalidParameters("infeasible weight class");
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < nonzero; ++i) mu[static_cast<std::size_t>(i)] = 1;
    if (nonzero > 0) mu[0] = norm - nonzero + 1;
    return mu;
}

}  // namespace lensspec::oracle
