#include "lensspec/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "lensspec/errors.hpp"

namespace lensspec {

namespace {

int mod(std::int64_t a, int m) {
    auto r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

int gcd_all(int q, std::span<const int> s) {
    int g = q;
    for (int x : s) g = std::gcd(g, std::abs(x));
    return g;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& context) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + item + "' in '" + context + "'");
        }
    }
    return out;
}

}  // namespace

TorusSubgroup::TorusSubgroup(int n, std::vector<Generator> generators) : n_(n) {
    if (n < 2) throw InvalidParameters("rank n must be >= 2, got " + std::to_string(n));
    for (auto& g : generators) {
        if (g.order < 1) throw InvalidParameters("generator order must be >= 1");
        if (static_cast<int>(g.exponents.size()) != n)
            throw DimensionMismatch("generator has " + std::to_string(g.exponents.size()) + " exponents, expected " +
                                    std::to_string(n));
        for (int& s : g.exponents) s = mod(s, g.order);
        int d = gcd_all(g.order, g.exponents);
        g.order /= d;
        for (int& s : g.exponents) s /= d;
        if (g.order == 1) continue;
        exponent_ = std::lcm(exponent_, g.order);
        gens_.push_back(std::move(g));
    }
}

bool TorusSubgroup::acts_freely() const {
    // elements as exponent vectors modulo q(Gamma); closure under the generators
    const int q = exponent_;
    std::set<std::vector<int>> seen{std::vector<int>(static_cast<std::size_t>(n_), 0)};
    std::vector<std::vector<int>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens_) {
                std::vector<int> y(x);
                for (int j = 0; j < n_; ++j)
                    y[static_cast<std::size_t>(j)] =
                        mod(y[static_cast<std::size_t>(j)] + g.exponents[static_cast<std::size_t>(j)] * (q / g.order), q);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    for (const auto& x : seen) {
        bool identity = std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
        if (!identity && std::find(x.begin(), x.end(), 0) != x.end()) return false;
    }
    return true;
}

CongruenceLattice::CongruenceLattice(int n, std::vector<Congruence> congruences, bool manifold)
    : n_(n), manifold_(manifold) {
    if (n < 2) throw InvalidParameters("rank n must be >= 2, got " + std::to_string(n));
    for (auto& c : congruences) {
        if (c.modulus < 1) throw InvalidParameters("congruence modulus must be >= 1");
        if (static_cast<int>(c.coeffs.size()) != n) throw DimensionMismatch("congruence length differs from rank");
        if (c.modulus == 1) continue;
        for (int& s : c.coeffs) s = mod(s, c.modulus);
        q_ = std::lcm(q_, c.modulus);
        congs_.push_back(std::move(c));
    }
}

bool CongruenceLattice::member(std::span<const int> a) const {
    if (static_cast<int>(a.size()) != n_)
        throw DimensionMismatch("vector of length " + std::to_string(a.size()) + " for rank " + std::to_string(n_));
    return contains(a.data());
}

bool member(const CongruenceLattice& lattice, std::span<const int> a) { return lattice.member(a); }

CongruenceLattice lattice_from_lens(int q, std::span<const int> s) {
    if (q < 1) throw InvalidParameters("q must be >= 1");
    if (s.size() < 2) throw InvalidParameters("rank n must be >= 2");
    if (gcd_all(q, s) != 1) throw InvalidParameters("gcd(q, s_1, ..., s_n) must be 1 for " + lens_name(q, s));
    bool manifold = std::all_of(s.begin(), s.end(), [q](int x) { return std::gcd(q, std::abs(x)) == 1; });
    std::vector<Congruence> congs{{q, std::vector<int>(s.begin(), s.end())}};
    return CongruenceLattice(static_cast<int>(s.size()), std::move(congs), manifold);
}

CongruenceLattice lattice_from_group(const TorusSubgroup& group) {
    std::vector<Congruence> congs;
    for (const auto& g : group.generators()) congs.push_back({g.order, g.exponents});
    return CongruenceLattice(group.rank(), std::move(congs), group.acts_freely());
}

std::string lens_name(int q, std::span<const int> s) {
    std::ostringstream os;
    os << "L(" << q << ";";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

SpaceSpec parse_lens_shorthand(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 4 || t[0] != 'L' || t[1] != '(' || t.back() != ')')
        throw ParseError("expected L(q; s1,...,sn), got '" + text + "'");
    std::string inner = t.substr(2, t.size() - 3);
    auto semi = inner.find(';');
    if (semi == std::string::npos) throw ParseError("missing ';' in '" + text + "'");
    auto qs = parse_int_list(inner.substr(0, semi), text);
    if (qs.size() != 1) throw ParseError("bad modulus in '" + text + "'");
    auto s = parse_int_list(inner.substr(semi + 1), text);
    int q = qs[0];
    lattice_from_lens(q, s);  // validates
    std::vector<Generator> gens{{q, s}};
    return {lens_name(q, s), TorusSubgroup(static_cast<int>(s.size()), std::move(gens))};
}

SpaceSpec parse_generators(const std::string& text) {
    std::vector<Generator> gens;
    std::string normalized;
    std::string flat = text;
    std::replace(flat.begin(), flat.end(), ';', '\n');
    std::stringstream ss(flat);
    std::string line;
    int n = -1;
    while (std::getline(ss, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'q: s1,...,sn', got '" + line + "'");
        auto qs = parse_int_list(line.substr(0, colon), line);
        if (qs.size() != 1) throw ParseError("bad order in '" + line + "'");
        auto s = parse_int_list(line.substr(colon + 1), line);
        if (n >= 0 && static_cast<int>(s.size()) != n) throw DimensionMismatch("generators of different length");
        n = static_cast<int>(s.size());
        normalized += (normalized.empty() ? "" : ";") + std::to_string(qs[0]) + ":";
        for (std::size_t i = 0; i < s.size(); ++i) normalized += (i ? "," : "") + std::to_string(s[i]);
        gens.push_back({qs[0], std::move(s)});
    }
    if (n < 0) throw ParseError("no generators given");
    return {"G[" + normalized + "]", TorusSubgroup(n, std::move(gens))};
}

SpaceSpec parse_space(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t[0] == 'L') return parse_lens_shorthand(t);
    return parse_generators(t);
}

SpaceSpec load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameters("cannot open generator file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_generators(buf.str());
}

}  // namespace lensspec
