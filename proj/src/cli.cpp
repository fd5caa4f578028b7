#include "lensspec/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <optional>

#include "lensspec/errors.hpp"
#include "lensspec/genfun.hpp"
#include "lensspec/isospec.hpp"
#include "lensspec/render.hpp"
#include "lensspec/selfcheck.hpp"
#include "lensspec/spectrum.hpp"

namespace lensspec {

namespace {

struct RunConfig {
    std::string space, space2, gen_file, gen_file2;
    std::optional<int> p, p0;
    int k_max = 25;
    int order = 30;
    std::string format = "table";
    int threads = 0;
    std::string method = "theta";
    int q = 0;
    int n = 0;
    std::string mode = "manifolds";
};

SpaceSpec resolve_space(const std::string& shorthand, const std::string& file, const char* which) {
    if (!shorthand.empty() && !file.empty())
        throw InvalidParameters(std::string("give either --") + which + " or a generator file, not both");
    if (!shorthand.empty()) return parse_space(shorthand);
    if (!file.empty()) return load_generator_file(file);
    throw InvalidParameters(std::string("missing --") + which);
}

std::string coefficient_report(const RationalSeries& a, const RationalSeries& b, int k) {
    auto sa = series_expand(a, k);
    auto sb = series_expand(b, k);
    return "z^" + std::to_string(k) + ": " + sa.back().get_str() + " vs " + sb.back().get_str();
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    auto spec = resolve_space(cfg.space, cfg.gen_file, "space");
    if (cfg.k_max < 1) throw InvalidParameters("--kmax must be >= 1");
    auto table = spectrum_table_any_degree(spec.lattice(), cfg.p.value_or(0), cfg.k_max);
    out << render_spectrum(spec.name, table, parse_format(cfg.format));
    return 0;
}

int cmd_genfun(const RunConfig& cfg, std::ostream& out) {
    auto spec = resolve_space(cfg.space, cfg.gen_file, "space");
    if (cfg.order < 0) throw InvalidParameters("--order must be >= 0");
    auto format = parse_format(cfg.format);
    auto theta = theta_family(spec.lattice());
    std::vector<NamedFunction> fns;
    auto add = [&](std::string name, RationalSeries value) {
        value = value.simplified();
        auto series = series_expand(value, cfg.order);
        fns.push_back({std::move(name), std::move(value), std::move(series)});
    };
    add("theta", theta.total);
    for (int ell = 0; ell <= theta.n; ++ell) add("theta^(" + std::to_string(ell) + ")", theta.by_zeros[ell]);
    auto fs = f_family(theta);
    for (std::size_t p = 0; p < fs.size(); ++p) add("F^" + std::to_string(p), fs[p]);
    out << render_genfun(spec.name, theta.n, theta.q, fns, format);
    return 0;
}

int cmd_isospectral(const RunConfig& cfg, std::ostream& out) {
    auto a = resolve_space(cfg.space, cfg.gen_file, "space");
    auto b = resolve_space(cfg.space2, cfg.gen_file2, "space2");
    auto format = parse_format(cfg.format);
    auto la = a.lattice();
    auto lb = b.lattice();
    if (la.rank() != lb.rank())
        throw DimensionMismatch("spaces have n = " + std::to_string(la.rank()) + " and n = " + std::to_string(lb.rank()));
    const int n = la.rank();
    const int p0 = cfg.p0.value_or(n - 1);
    if (p0 < 0 || p0 > n - 1) throw InvalidParameters("--p0 must lie in 0.." + std::to_string(n - 1));
    if (cfg.method != "theta" && cfg.method != "direct")
        throw InvalidParameters("unknown method '" + cfg.method + "' (theta, direct)");

    auto ta = theta_family(la);
    auto tb = theta_family(lb);
    std::vector<Verdict> verdicts;
    std::optional<std::string> failure;
    for (int p = 0; p <= p0; ++p) {
        if (!failure) {
            if (cfg.method == "theta") {
                auto wa = weighted_theta(ta, p);
                auto wb = weighted_theta(tb, p);
                if (auto k = first_difference(wa, wb))
                    failure = "sum l^" + std::to_string(p) + " theta^(l) differs at " + coefficient_report(wa, wb, *k);
            } else {
                auto fa = f_rational(ta, p);
                auto fb = f_rational(tb, p);
                if (auto k = first_difference(fa, fb))
                    failure = "F^" + std::to_string(p) + " differs at " + coefficient_report(fa, fb, *k);
            }
        }
        Verdict v;
        v.p = p;
        v.isospectral = !failure;
        if (failure)
            v.certificate = *failure;
        else if (cfg.method == "theta")
            v.certificate = "sum l^h theta^(l) equal for h <= " + std::to_string(p);
        else
            v.certificate = "F^0..F^" + std::to_string(p) + " equal";
        verdicts.push_back(std::move(v));
    }
    out << render_isospectral(a.name, b.name, n, cfg.method, verdicts, format);
    return 0;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    auto format = parse_format(cfg.format);
    if (cfg.q < 1) throw InvalidParameters("--q must be >= 1");
    if (cfg.n < 2) throw InvalidParameters("--n must be >= 2");
    SearchMode mode;
    if (cfg.mode == "manifolds")
        mode = SearchMode::manifolds;
    else if (cfg.mode == "orbifolds")
        mode = SearchMode::orbifolds;
    else
        throw InvalidParameters("unknown mode '" + cfg.mode + "' (manifolds, orbifolds)");
    const int p0 = cfg.p0.value_or(0);
    if (p0 < 0 || p0 > cfg.n - 1) throw InvalidParameters("--p0 must lie in 0.." + std::to_string(cfg.n - 1));

    SearchReport report;
    report.q = cfg.q;
    report.n = cfg.n;
    report.p0 = p0;
    report.mode = cfg.mode;
    report.classes = lens_classes(cfg.q, cfg.n, mode).size();
    report.families = search(cfg.q, cfg.n, p0, mode);
    for (const auto& fam : report.families) {
        bool ok = true;
        const auto first = lattice_from_key(fam.members.front());
        for (std::size_t i = 1; i < fam.members.size() && ok; ++i) {
            const auto other = lattice_from_key(fam.members[i]);
            for (int p = 0; p <= p0 && ok; ++p) ok = p_isospectral(first, other, p);
        }
        report.direct_verified.push_back(ok);
    }
    out << render_search(report, format);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    auto format = parse_format(cfg.format);
    VerifyConfig vc;
    if (cfg.n) vc.n = cfg.n;
    vc.k_max = cfg.k_max;
    if (cfg.q) vc.q_max = cfg.q;
    vc.order = cfg.order;
    if (vc.n < 2 || vc.k_max < 0 || vc.q_max < 1 || vc.order < 0) throw InvalidParameters("invalid verify scale");
    auto checks = run_self_checks(vc);
    out << render_checks(checks, format);
    for (const auto& c : checks)
        if (!c.passed) return 1;
    return 0;
}

std::string one_line(std::string s) {
    for (char& ch : s)
        if (ch == '\n' || ch == '\r') ch = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Hodge-Laplace spectra and isospectrality of lens spaces and orbifolds", "lensspec"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)");
    };
    auto add_space = [&](CLI::App* sub) {
        sub->add_option("--space", cfg.space, "L(q;s1,...,sn) or inline generators \"q: s1,...,sn\"");
        sub->add_option("--gen-file", cfg.gen_file, "file with one generator \"q: s1,...,sn\" per line");
    };

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities on p-forms");
    add_space(spectrum);
    spectrum->add_option("--p", cfg.p, "form degree, 0..2n-1");
    spectrum->add_option("--kmax", cfg.k_max, "largest k (default 25)");
    add_common(spectrum);

    auto* genfun = app.add_subcommand("genfun", "theta series and F^p as rational functions");
    add_space(genfun);
    genfun->add_option("--order", cfg.order, "series preview order (default 30)");
    add_common(genfun);

    auto* iso = app.add_subcommand("isospectral", "decide p-isospectrality of two spaces");
    add_space(iso);
    iso->add_option("--space2", cfg.space2, "second space");
    iso->add_option("--gen-file2", cfg.gen_file2, "generator file of the second space");
    iso->add_option("--p0", cfg.p0, "largest degree to decide (default n-1)");
    iso->add_option("--method", cfg.method, "theta or direct");
    add_common(iso);

    auto* srch = app.add_subcommand("search", "families of isospectral lens spaces L(q;s)");
    srch->add_option("--q", cfg.q, "order of the cyclic group")->required();
    srch->add_option("--n", cfg.n, "sphere S^{2n-1}")->required();
    srch->add_option("--p0", cfg.p0, "spaces must be p-isospectral for p <= p0 (default 0)");
    srch->add_option("--mode", cfg.mode, "manifolds or orbifolds");
    add_common(srch);

    auto* verify = app.add_subcommand("verify", "run the internal consistency checks");
    verify->add_option("--n", cfg.n, "rank (default 3)");
    verify->add_option("--kmax", cfg.k_max, "largest k (default 6)");
    verify->add_option("--q", cfg.q, "largest lens order (default 7)");
    verify->add_option("--order", cfg.order, "series order (default 20)");
    add_common(verify);

    std::vector<std::string> rev;
    for (std::size_t i = args.size(); i > 1; --i) rev.push_back(args[i - 1]);

    try {
        app.parse(rev);
        if (verify->parsed()) {
            if (verify->count("--kmax") == 0) cfg.k_max = VerifyConfig{}.k_max;
            if (verify->count("--order") == 0) cfg.order = VerifyConfig{}.order;
        }
        if (cfg.threads < 0) throw InvalidParameters("--threads must be >= 0");
        if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

        if (spectrum->parsed()) return cmd_spectrum(cfg, out);
        if (genfun->parsed()) return cmd_genfun(cfg, out);
        if (iso->parsed()) return cmd_isospectral(cfg, out);
        if (srch->parsed()) return cmd_search(cfg, out);
        return cmd_verify(cfg, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: ArgumentError: " << one_line(e.what()) << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: InternalError: " << one_line(e.what()) << "\n";
        return 3;
    }
}

}  // namespace lensspec
