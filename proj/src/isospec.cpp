#include "lensspec/isospec.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lensspec/errors.hpp"

namespace lensspec {

namespace {

void require_same_rank(int a, int b) {
    if (a != b) throw DimensionMismatch("spaces of different rank: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string theta_fingerprint(const ThetaFamily& theta, int p0) {
    const RationalSeries::Denominator common{{theta.q, theta.n}};
    std::ostringstream os;
    for (int h = 0; h <= p0; ++h) {
        LaurentPolynomial num = weighted_theta(theta, h).numerator_over(common);
        os << h << ':' << (num.is_zero() ? 0 : num.low()) << ':';
        for (const auto& c : num.dense()) os << c.get_str() << ',';
        os << ';';
    }
    return os.str();
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

std::string LensKey::name() const { return lens_name(q, exponents); }

LensKey canonical_key(int q, std::span<const int> s) {
    lattice_from_lens(q, s);  // validates q, n and the gcd condition
    LensKey best{q, static_cast<int>(s.size()), {}};
    for (int t = 1; t <= q; ++t) {
        if (std::gcd(t, q) != 1) continue;
        std::vector<int> v;
        for (int x : s) {
            int r = static_cast<int>((static_cast<std::int64_t>(t) * x) % q);
            if (r < 0) r += q;
            v.push_back(std::min(r, q - r));
        }
        std::sort(v.begin(), v.end());
        if (best.exponents.empty() || v < best.exponents) best.exponents = std::move(v);
    }
    return best;
}

CongruenceLattice lattice_from_key(const LensKey& key) { return lattice_from_lens(key.q, key.exponents); }

bool p_isospectral(const ThetaFamily& a, const ThetaFamily& b, int p) {
    require_same_rank(a.n, b.n);
    if (p < 0 || p > a.n - 1) throw InvalidParameters("p must lie in 0..n-1");
    if (p >= 1 && !series_equal(f_rational(a, p - 1), f_rational(b, p - 1))) return false;
    return series_equal(f_rational(a, p), f_rational(b, p));
}

bool p_isospectral(const CongruenceLattice& a, const CongruenceLattice& b, int p) {
    require_same_rank(a.rank(), b.rank());
    return p_isospectral(theta_family(a), theta_family(b), p);
}

bool isospectral_range(const ThetaFamily& a, const ThetaFamily& b, int p0) {
    require_same_rank(a.n, b.n);
    if (p0 < 0 || p0 > a.n - 1) throw InvalidParameters("p0 must lie in 0..n-1");
    for (int h = 0; h <= p0; ++h)
        if (!series_equal(weighted_theta(a, h), weighted_theta(b, h))) return false;
    return true;
}

bool isospectral_range(const CongruenceLattice& a, const CongruenceLattice& b, int p0) {
    require_same_rank(a.rank(), b.rank());
    return isospectral_range(theta_family(a), theta_family(b), p0);
}

bool norm_star_isospectral(const ThetaFamily& a, const ThetaFamily& b) {
    require_same_rank(a.n, b.n);
    for (int ell = 0; ell <= a.n; ++ell)
        if (!series_equal(a.by_zeros[static_cast<std::size_t>(ell)], b.by_zeros[static_cast<std::size_t>(ell)]))
            return false;
    return true;
}

bool norm_star_isospectral(const CongruenceLattice& a, const CongruenceLattice& b) {
    require_same_rank(a.rank(), b.rank());
    return norm_star_isospectral(theta_family(a), theta_family(b));
}

bool norm_star_isospectral_finite(const CongruenceLattice& a, const CongruenceLattice& b) {
    require_same_rank(a.rank(), b.rank());
    const int modulus = std::lcm(a.exponent(), b.exponent());
    return reduced_counts(a, modulus).rows == reduced_counts(b, modulus).rows;
}

std::vector<LensKey> lens_classes(int q, int n, SearchMode mode) {
    if (q < 1 || n < 2) throw InvalidParameters("lens classes need q >= 1 and n >= 2");
    std::set<LensKey> keys;
    std::vector<int> s(static_cast<std::size_t>(n), 0);
    if (mode == SearchMode::manifolds) s[0] = 1;
    const std::size_t first_free = mode == SearchMode::manifolds ? 1 : 0;
    // odometer over the free coordinates
    while (true) {
        bool admissible = true;
        if (mode == SearchMode::manifolds) {
            for (int x : s) admissible = admissible && std::gcd(x, q) == 1;
        } else {
            int g = q;
            for (int x : s) g = std::gcd(g, x);
            admissible = g == 1;
        }
        if (admissible) keys.insert(canonical_key(q, s));
        std::size_t i = first_free;
        while (i < s.size() && ++s[i] == q) s[i++] = 0;
        if (i == s.size()) break;
    }
    return {keys.begin(), keys.end()};
}

std::vector<IsospectralFamily> search(int q, int n, int p0, SearchMode mode) {
    if (q < 2 || n < 2) throw InvalidParameters("search needs q >= 2 and n >= 2");
    if (p0 < 0 || p0 > n - 1) throw InvalidParameters("p0 must lie in 0..n-1");
    const auto keys = lens_classes(q, n, mode);

    std::vector<ThetaFamily> thetas(keys.size());
    std::vector<std::string> prints(keys.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < keys.size(); ++i) {
        thetas[i] = theta_family(lattice_from_key(keys[i]));
        prints[i] = theta_fingerprint(thetas[i], p0);
    }

    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < keys.size(); ++i) buckets[prints[i]].push_back(i);

    std::vector<IsospectralFamily> families;
    for (const auto& [print, members] : buckets) {
        if (members.size() < 2) continue;
        // exact verification inside the bucket
        std::vector<std::vector<std::size_t>> groups;
        for (std::size_t idx : members) {
            auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
                return isospectral_range(thetas[g.front()], thetas[idx], p0);
            });
            if (it == groups.end()) {
                groups.push_back({idx});
            } else {
                it->push_back(idx);
            }
        }
        for (const auto& g : groups) {
            if (g.size() < 2) continue;
            IsospectralFamily fam;
            fam.p0 = p0;
            for (std::size_t idx : g) fam.members.push_back(keys[idx]);
            std::sort(fam.members.begin(), fam.members.end());
            fam.fingerprint = fnv1a_hex(print);
            families.push_back(std::move(fam));
        }
    }
    std::sort(families.begin(), families.end(),
              [](const auto& x, const auto& y) { return x.members.front() < y.members.front(); });
    for (std::size_t i = 0; i < families.size(); ++i) families[i].id = static_cast<int>(i) + 1;
    return families;
}

}  // namespace lensspec
