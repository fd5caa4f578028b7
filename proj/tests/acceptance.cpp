// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lensspec/cli.hpp"
#include "lensspec/counting.hpp"
#include "lensspec/genfun.hpp"
#include "lensspec/isospec.hpp"
#include "lensspec/oracle.hpp"
#include "lensspec/selfcheck.hpp"
#include "lensspec/spectrum.hpp"
#include "lensspec/weightmult.hpp"
#include "naive.hpp"

using namespace lensspec;

namespace {

// All comparisons are exact; only the wall-clock budgets are tolerances.
constexpr double kWeightBudgetSeconds = 300.0;
constexpr double kCentralBudgetSeconds = 600.0;
constexpr int kSuiteMaxQ = 12;
constexpr int kCentralOrder = 30;
constexpr int kSphereKMax = 20;
constexpr int kConvolutionMaxA = 3;
constexpr int kAllPairsMaxQ = 12;

struct Tally {
    long cases = 0;
    std::string failure;
    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok && failure.empty()) failure = what;
    }
};

struct Member {
    std::string name;
    CongruenceLattice lattice;
};

std::vector<Member> build_suite() {
    std::vector<Member> suite;
    for (int n = 2; n <= 3; ++n) {
        std::vector<int> zero(static_cast<std::size_t>(n), 0);
        suite.push_back({lens_name(1, zero), lattice_from_lens(1, zero)});
        for (int q = 2; q <= kSuiteMaxQ; ++q)
            for (const auto& key : lens_classes(q, n, SearchMode::orbifolds)) suite.push_back({key.name(), lattice_from_key(key)});
    }
    return suite;
}

const std::vector<Member>& suite() {
    static const std::vector<Member> s = build_suite();
    return s;
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Tally()>& body, double budget = 0) {
    const auto start = std::chrono::steady_clock::now();
    Tally t = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && secs > budget && t.failure.empty()) t.failure = "time budget exceeded";
    const bool pass = t.failure.empty();
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %s  [%ld cases, %.2fs]%s%s\n", id, pass ? "PASS" : "FAIL", title.c_str(), t.cases, secs,
                pass ? "" : "  first failure: ", t.failure.c_str());
    std::fflush(stdout);
}

Tally weight_certification() {
    Tally t;
    for (int n = 2; n <= 4; ++n)
        for (int p = 1; p <= n; ++p)
            for (int k = 0; k <= 6; ++k)
                for (int zeros = 0; zeros <= n; ++zeros)
                    for (int norm = 0; norm <= k + p + 2; ++norm) {
                        WeightClass w{norm, zeros, n};
                        if (!w.feasible()) continue;
                        auto mu = oracle::class_representative(norm, zeros, n);
                        t.check(weight_multiplicity({k, p, n}, w) == oracle::oracle_weight_multiplicity(k, p, mu, n),
                                "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p) +
                                    " norm=" + std::to_string(norm) + " zeros=" + std::to_string(zeros));
                    }
    return t;
}

Tally dimension_sums() {
    Tally t;
    for (int n = 2; n <= 4; ++n)
        for (int p = 1; p <= n; ++p)
            for (int k = 0; k <= 6; ++k) {
                BigInt sum = 0;
                for (int zeros = 0; zeros <= n; ++zeros)
                    for (int norm = 0; norm <= k + p; ++norm) {
                        WeightClass w{norm, zeros, n};
                        if (w.feasible()) sum += weight_class_size(w) * weight_multiplicity({k, p, n}, w);
                    }
                BigInt weyl = 0;
                for (const auto& hw : oracle::pi_highest_weights(k, p, n)) weyl += oracle::weyl_dimension(hw, n);
                t.check(sum == weyl, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(p));
            }
    return t;
}

Tally central_identity() {
    Tally t;
    for (const auto& m : suite()) {
        const int n = m.lattice.rank();
        auto theta = theta_family(m.lattice);
        auto shells = shell_table(m.lattice, kCentralOrder + n + 1);
        for (int p = 1; p <= n; ++p) {
            auto got = series_expand(f_rational(theta, p - 1), kCentralOrder);
            auto want = invariant_dimension_series(shells, n, p, kCentralOrder);
            t.check(got == want, m.name + " p=" + std::to_string(p));
        }
    }
    return t;
}

Tally f0_closed_form_check() {
    Tally t;
    for (const auto& m : suite()) {
        auto theta = theta_family(m.lattice);
        t.check(series_equal(f_rational(theta, 0), f0_closed_form(theta)), m.name);
    }
    return t;
}

Tally theta_rationality() {
    Tally t;
    for (const auto& m : suite()) {
        const int n = m.lattice.rank();
        const int order = 3 * m.lattice.exponent();
        auto shells = shell_table(m.lattice, order);
        RationalSeries sum;
        for (int ell = 0; ell <= n; ++ell) {
            auto part = theta_ell_rational(m.lattice, ell);
            auto series = series_expand(part, order);
            for (int k = 0; k <= order; ++k)
                t.check(series[static_cast<std::size_t>(k)] == shells[static_cast<std::size_t>(k)][ell],
                        m.name + " l=" + std::to_string(ell) + " k=" + std::to_string(k));
            sum += part;
        }
        t.check(series_equal(theta_rational(m.lattice), sum), m.name + " theta = sum");
    }
    return t;
}

Tally sphere_sanity() {
    Tally t;
    auto table = spectrum_table(lattice_from_lens(1, std::vector<int>{0, 0}), 0, kSphereKMax);
    auto oracle_series = naive::expand(RationalSeries(LaurentPolynomial{{0, 1}, {1, 1}}, {{1, 3}}), kSphereKMax);
    t.check(table.entries.size() == static_cast<std::size_t>(kSphereKMax + 1), "entry count");
    for (int k = 0; k <= kSphereKMax && k < static_cast<int>(table.entries.size()); ++k) {
        const auto& e = table.entries[static_cast<std::size_t>(k)];
        t.check(e.eigenvalue == k * (k + 2), "eigenvalue k=" + std::to_string(k));
        t.check(e.multiplicity == (k + 1) * (k + 1), "multiplicity k=" + std::to_string(k));
        t.check(e.multiplicity == oracle_series[static_cast<std::size_t>(k)], "series k=" + std::to_string(k));
    }
    return t;
}

void check_pair_equivalence(Tally& t, const ThetaFamily& a, const ThetaFamily& b, const std::string& tag) {
    bool all = true;
    for (int p0 = 0; p0 < a.n; ++p0) {
        all = all && p_isospectral(a, b, p0);
        t.check(isospectral_range(a, b, p0) == all, tag + " p0=" + std::to_string(p0));
    }
    t.check(all == norm_star_isospectral(a, b), tag + " endpoint");
}

Tally characterization_equivalence() {
    Tally t;
    for (int n = 2; n <= 3; ++n)
        for (int q = 2; q <= kSuiteMaxQ; ++q)
            for (auto mode : {SearchMode::manifolds, SearchMode::orbifolds})
                for (int p0 = 0; p0 < n; ++p0)
                    for (const auto& fam : search(q, n, p0, mode)) {
                        std::vector<ThetaFamily> thetas;
                        for (const auto& key : fam.members) thetas.push_back(theta_family(lattice_from_key(key)));
                        for (std::size_t i = 0; i < thetas.size(); ++i)
                            for (std::size_t j = i + 1; j < thetas.size(); ++j) {
                                const std::string tag = fam.members[i].name() + " vs " + fam.members[j].name();
                                t.check(isospectral_range(thetas[i], thetas[j], p0), tag + " grouped");
                                check_pair_equivalence(t, thetas[i], thetas[j], tag);
                            }
                    }
    // every pair of classes, not only the grouped ones
    for (int n = 2; n <= 3; ++n)
        for (int q = 2; q <= kAllPairsMaxQ; ++q) {
            auto keys = lens_classes(q, n, SearchMode::orbifolds);
            std::vector<ThetaFamily> thetas;
            for (const auto& key : keys) thetas.push_back(theta_family(lattice_from_key(key)));
            for (std::size_t i = 0; i < keys.size(); ++i)
                for (std::size_t j = i + 1; j < keys.size(); ++j)
                    check_pair_equivalence(t, thetas[i], thetas[j], keys[i].name() + " vs " + keys[j].name());
        }
    return t;
}

Tally existence() {
    Tally t;
    auto fams = search(11, 3, 0, SearchMode::manifolds);
    t.check(!fams.empty(), "no family found");
    for (const auto& fam : fams)
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
                const auto& a = fam.members[i];
                const auto& b = fam.members[j];
                const std::string tag = a.name() + " vs " + b.name();
                t.check(a != b, tag + " isometric");
                auto la = lattice_from_key(a);
                auto lb = lattice_from_key(b);
                const bool direct = series_equal(f_rational(la, 0), f_rational(lb, 0));
                const bool theta = series_equal(theta_rational(la), theta_rational(lb));
                t.check(direct && theta, tag + " direct=" + std::to_string(direct) + " theta=" + std::to_string(theta));
            }
    return t;
}

Tally reduced_identity() {
    Tally t;
    for (const auto& m : suite()) {
        const int n = m.lattice.rank();
        const int q = m.lattice.exponent();
        auto reduced = reduced_counts(m.lattice);
        auto shells = shell_table(m.lattice, (kConvolutionMaxA + 1) * q - 1);
        for (int a = 0; a <= kConvolutionMaxA; ++a)
            for (int r = 0; r < q; ++r)
                for (int ell = 0; ell <= n; ++ell)
                    t.check(shells[static_cast<std::size_t>(a * q + r)][ell] == reduced_convolution(reduced, a, r, ell),
                            m.name + " a=" + std::to_string(a) + " r=" + std::to_string(r) + " l=" + std::to_string(ell));
    }
    return t;
}

std::string spectrum_output(const std::vector<std::string>& config, int threads) {
    std::vector<std::string> args{"lensspec", "spectrum"};
    args.insert(args.end(), config.begin(), config.end());
    args.insert(args.end(), {"--threads", std::to_string(threads)});
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

Tally determinism() {
    Tally t;
    const std::vector<std::vector<std::string>> configs{
        {"--space", "L(11;1,2,3)", "--p", "0", "--kmax", "30"},
        {"--space", "L(12;1,5,7)", "--p", "2", "--kmax", "25", "--format", "json"},
        {"--space", "4: 1,1,0,0; 6: 0,1,2,3", "--p", "3", "--kmax", "12", "--format", "csv"},
    };
    for (std::size_t c = 0; c < configs.size(); ++c) {
        const auto ref = spectrum_output(configs[c], 1);
        t.check(ref.rfind("0\n", 0) == 0, "config " + std::to_string(c) + " failed: " + ref);
        for (int threads : {4, 8}) t.check(spectrum_output(configs[c], threads) == ref, "config " + std::to_string(c) + " threads " + std::to_string(threads));
    }
    return t;
}

}  // namespace

int main() {
    criterion(1, "weight multiplicity = Freudenthal oracle (n<=4, k<=6)", weight_certification, kWeightBudgetSeconds);
    criterion(2, "class-weighted sums = Weyl dimension", dimension_sums);
    criterion(3, "F series = invariant dimensions to z^30 on the suite", central_identity, kCentralBudgetSeconds);
    criterion(4, "F^0 = (1/z)(theta/(1-z^2)^{n-1} - 1) on the suite", f0_closed_form_check);
    criterion(5, "theta^(l) = shell counts to k<=3q, theta = sum theta^(l)", theta_rationality);
    criterion(6, "round S^3 spectrum k(k+2) with multiplicity (k+1)^2", sphere_sanity);
    criterion(7, "[0,p0] criterion = direct F comparison, endpoint = norm* test", characterization_equivalence);
    criterion(8, "search(q=11, n=3, p0=0) finds non-isometric isospectral spaces", existence);
    criterion(9, "shell counts = reduced-count convolution (a<=3)", reduced_identity);
    criterion(10, "spectrum output identical for 1, 4, 8 threads", determinism);
    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
