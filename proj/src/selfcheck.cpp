#include "lensspec/selfcheck.hpp"

#include <sstream>

#include "lensspec/genfun.hpp"
#include "lensspec/isospec.hpp"
#include "lensspec/oracle.hpp"
#include "lensspec/weightmult.hpp"

namespace lensspec {

BigInt reduced_convolution(const ReducedTable& reduced, int a, int r, int ell) {
    const int n = reduced.n;
    const int q = reduced.modulus;
    BigInt total = 0;
    for (int s = 0; s <= n - ell; ++s) {
        BigInt inner = 0;
        for (int t = s; t <= a; ++t)
            inner += (n == ell ? BigInt(t == s) : binom(t - s + n - ell - 1, n - ell - 1)) *
                     reduced.at((a - t) * q + r, ell + s);
        BigInt c = binom(ell + s, s) * inner;
        c <<= s;
        total += c;
    }
    return total;
}

namespace {

class Recorder {
   public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }
    void check(bool ok, const std::string& what) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }
    CheckResult done() { return std::move(result_); }

   private:
    CheckResult result_;
};

std::string describe(int n, int k, int p, int norm, int zeros) {
    std::ostringstream os;
    os << "n=" << n << " k=" << k << " p=" << p << " norm=" << norm << " zeros=" << zeros;
    return os.str();
}

std::vector<CongruenceLattice> suite_lattices(int n, int q_max) {
    std::vector<CongruenceLattice> out;
    std::vector<int> zero(static_cast<std::size_t>(n), 0);
    out.push_back(lattice_from_lens(1, zero));
    for (int q = 2; q <= q_max; ++q)
        for (const auto& key : lens_classes(q, n, SearchMode::orbifolds)) out.push_back(lattice_from_key(key));
    return out;
}

}  // namespace

std::vector<CheckResult> run_self_checks(const VerifyConfig& cfg) {
    std::vector<CheckResult> out;
    const int n = cfg.n;

    {
        Recorder rec("weight multiplicity = Freudenthal");
        Recorder dims("class-weighted sum = Weyl dimension");
        Recorder ext("k=0 multiplicity = exterior-power count");
        Recorder sym("p=1 multiplicity = Sym^{k+1} - Sym^{k-1} count");
        for (int p = 1; p <= n; ++p) {
            for (int k = 0; k <= cfg.k_max; ++k) {
                BigInt weighted = 0;
                for (int norm = 0; norm <= k + p + 1; ++norm) {
                    for (int zeros = 0; zeros <= n; ++zeros) {
                        WeightClass w{norm, zeros, n};
                        if (!w.feasible()) continue;
                        const auto mu = oracle::class_representative(norm, zeros, n);
                        const BigInt closed = weight_multiplicity({k, p, n}, w);
                        rec.check(closed == oracle::oracle_weight_multiplicity(k, p, mu, n), describe(n, k, p, norm, zeros));
                        weighted += closed * weight_class_size(w);
                        if (k == 0)
                            ext.check(closed == oracle::monomial_weight_count(oracle::MonomialKind::ext, p, mu, n),
                                      describe(n, k, p, norm, zeros));
                        if (p == 1) {
                            BigInt expect = oracle::monomial_weight_count(oracle::MonomialKind::sym, k + 1, mu, n);
                            if (k >= 1) expect -= oracle::monomial_weight_count(oracle::MonomialKind::sym, k - 1, mu, n);
                            sym.check(closed == expect, describe(n, k, p, norm, zeros));
                        }
                    }
                }
                BigInt weyl = 0;
                for (const auto& hw : oracle::pi_highest_weights(k, p, n)) weyl += oracle::weyl_dimension(hw, n);
                dims.check(weighted == weyl, describe(n, k, p, -1, -1));
            }
        }
        out.push_back(rec.done());
        out.push_back(dims.done());
        out.push_back(ext.done());
        out.push_back(sym.done());
    }

    const auto lattices = suite_lattices(n, cfg.q_max);
    {
        Recorder central("F^{p-1} rational form = invariant dimensions");
        Recorder f0("F^0 = (1/z)(theta/(1-z^2)^{n-1} - 1)");
        Recorder theta("theta^(l) expansion = shell counts");
        Recorder conv("shell counts = reduced-count convolution");
        Recorder kernels("OpenMP kernels = serial reference");
        for (std::size_t li = 0; li < lattices.size(); ++li) {
            const auto& lat = lattices[li];
            const int q = lat.exponent();
            const std::string tag = "lattice #" + std::to_string(li) + " q=" + std::to_string(q);
            const auto fam = theta_family(lat);
            const int shells_to = std::max(cfg.order + n, 4 * q);
            const auto shells = shell_table(lat, shells_to);
            for (int p = 1; p <= n; ++p) {
                const auto direct = invariant_dimension_series(shells, n, p, cfg.order);
                central.check(f_rational(fam, p - 1).expand(cfg.order) == direct, tag + " p=" + std::to_string(p));
            }
            f0.check(series_equal(f_rational(fam, 0), f0_closed_form(fam)), tag);
            for (int ell = 0; ell <= n; ++ell) {
                const auto series = fam.by_zeros[static_cast<std::size_t>(ell)].expand(3 * q);
                for (int k = 0; k <= 3 * q; ++k)
                    theta.check(series[static_cast<std::size_t>(k)] == shells[static_cast<std::size_t>(k)][ell],
                                tag + " l=" + std::to_string(ell) + " k=" + std::to_string(k));
            }
            RationalSeries sum;
            for (const auto& part : fam.by_zeros) sum += part;
            theta.check(series_equal(fam.total, sum), tag + " theta = sum theta^(l)");
            const auto reduced = reduced_counts(lat);
            for (int a = 0; a <= 3; ++a)
                for (int r = 0; r < q; ++r)
                    for (int ell = 0; ell <= n; ++ell)
                        conv.check(shells[static_cast<std::size_t>(a * q + r)][ell] == reduced_convolution(reduced, a, r, ell),
                                   tag + " a=" + std::to_string(a) + " r=" + std::to_string(r));
            kernels.check(reduced.rows == reference::reduced_counts(lat).rows, tag + " reduced");
            const auto ref = reference::shell_table(lat, 2 * q);
            for (int k = 0; k <= 2 * q; ++k)
                kernels.check(ref[static_cast<std::size_t>(k)].counts == shells[static_cast<std::size_t>(k)].counts,
                              tag + " k=" + std::to_string(k));
        }
        out.push_back(central.done());
        out.push_back(f0.done());
        out.push_back(theta.done());
        out.push_back(conv.done());
        out.push_back(kernels.done());
    }

    {
        Recorder equiv("[0,p0] criterion = direct F comparison");
        for (int q = 2; q <= cfg.q_max; ++q) {
            const auto keys = lens_classes(q, n, SearchMode::orbifolds);
            std::vector<ThetaFamily> fams;
            for (const auto& key : keys) fams.push_back(theta_family(lattice_from_key(key)));
            for (std::size_t i = 0; i < keys.size(); ++i)
                for (std::size_t j = i + 1; j < keys.size(); ++j) {
                    bool all = true;
                    for (int p0 = 0; p0 < n; ++p0) {
                        all = all && p_isospectral(fams[i], fams[j], p0);
                        equiv.check(isospectral_range(fams[i], fams[j], p0) == all,
                                    keys[i].name() + " vs " + keys[j].name() + " p0=" + std::to_string(p0));
                    }
                    equiv.check(all == norm_star_isospectral(fams[i], fams[j]), keys[i].name() + " vs " + keys[j].name());
                }
        }
        out.push_back(equiv.done());
    }
    return out;
}

}  // namespace lensspec
