#include "lensspec/render.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "lensspec/errors.hpp"

namespace lensspec {

using Json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string join_series(const std::vector<BigInt>& series, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < series.size(); ++i) out += (i ? sep : "") + series[i].get_str();
    return out;
}

std::string contributors_text(const SpectrumEntry& e) {
    std::string out;
    for (std::size_t i = 0; i < e.contributors.size(); ++i) {
        const auto& c = e.contributors[i];
        out += (i ? " " : "") + std::to_string(c.k) + ":" + std::to_string(c.family) + ":" + c.multiplicity.get_str();
    }
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw InvalidParameters("unknown format '" + name + "' (table, json, csv)");
}

std::string render_spectrum(const std::string& space, const SpectrumTable& table, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            Json records = Json::array();
            for (const auto& e : table.entries) {
                Json contributors = Json::array();
                for (const auto& c : e.contributors)
                    contributors.push_back({{"k", c.k}, {"family", c.family}, {"multiplicity", c.multiplicity.get_str()}});
                records.push_back({{"space", space},
                                   {"n", table.n},
                                   {"p", table.p},
                                   {"eigenvalue", e.eigenvalue},
                                   {"multiplicity", e.multiplicity.get_str()},
                                   {"contributors", contributors}});
            }
            os << records.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "space,n,p,eigenvalue,multiplicity,contributors\n";
            for (const auto& e : table.entries)
                os << csv_field(space) << ',' << table.n << ',' << table.p << ',' << e.eigenvalue << ','
                   << e.multiplicity.get_str() << ',' << csv_field(contributors_text(e)) << "\n";
            break;
        case Format::table:
            os << "# space " << space << "  n=" << table.n << "  p=" << table.p << "  k_max=" << table.k_max << "\n";
            os << std::left << std::setw(14) << "eigenvalue" << std::setw(24) << "multiplicity"
               << "contributors (k:family:mult)\n";
            for (const auto& e : table.entries)
                os << std::left << std::setw(14) << e.eigenvalue << std::setw(24) << e.multiplicity.get_str()
                   << contributors_text(e) << "\n";
            break;
    }
    return os.str();
}

std::string render_genfun(const std::string& space, int n, int q, const std::vector<NamedFunction>& functions,
                          Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            Json fns = Json::array();
            for (const auto& f : functions) {
                Json series = Json::array();
                for (const auto& c : f.series) series.push_back(c.get_str());
                fns.push_back({{"name", f.name}, {"rational", to_string(f.value)}, {"series", series}});
            }
            Json doc = {{"space", space}, {"n", n}, {"q", q}, {"functions", fns}};
            os << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "space,name,rational,series\n";
            for (const auto& f : functions)
                os << csv_field(space) << ',' << csv_field(f.name) << ',' << csv_field(to_string(f.value)) << ','
                   << csv_field(join_series(f.series, ";")) << "\n";
            break;
        case Format::table:
            os << "# space " << space << "  n=" << n << "  q=" << q << "\n";
            for (const auto& f : functions) {
                os << f.name << " = " << to_string(f.value) << "\n";
                os << "  series: " << join_series(f.series, ", ") << "\n";
            }
            break;
    }
    return os.str();
}

std::string render_isospectral(const std::string& space1, const std::string& space2, int n, const std::string& method,
                               const std::vector<Verdict>& verdicts, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            Json vs = Json::array();
            for (const auto& v : verdicts)
                vs.push_back({{"p", v.p}, {"isospectral", v.isospectral}, {"certificate", v.certificate}});
            Json doc = {{"space", space1}, {"space2", space2}, {"n", n}, {"method", method}, {"verdicts", vs}};
            os << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "space,space2,n,method,p,isospectral,certificate\n";
            for (const auto& v : verdicts)
                os << csv_field(space1) << ',' << csv_field(space2) << ',' << n << ',' << method << ',' << v.p << ','
                   << (v.isospectral ? "true" : "false") << ',' << csv_field(v.certificate) << "\n";
            break;
        case Format::table:
            os << "# " << space1 << " vs " << space2 << "  n=" << n << "  method=" << method << "\n";
            os << "# verdict at p: p'-isospectral for every 0 <= p' <= p\n";
            os << std::left << std::setw(4) << "p" << std::setw(8) << "verdict" << "certificate\n";
            for (const auto& v : verdicts)
                os << std::left << std::setw(4) << v.p << std::setw(8) << (v.isospectral ? "true" : "false")
                   << v.certificate << "\n";
            break;
    }
    return os.str();
}

std::string render_search(const SearchReport& r, Format format) {
    std::ostringstream os;
    auto members_of = [](const IsospectralFamily& f, const std::string& sep) {
        std::string out;
        for (std::size_t i = 0; i < f.members.size(); ++i) out += (i ? sep : "") + f.members[i].name();
        return out;
    };
    switch (format) {
        case Format::json: {
            Json fams = Json::array();
            for (std::size_t i = 0; i < r.families.size(); ++i) {
                const auto& f = r.families[i];
                Json members = Json::array();
                for (const auto& m : f.members) members.push_back(m.name());
                fams.push_back({{"id", f.id},
                                {"p0", f.p0},
                                {"fingerprint", f.fingerprint},
                                {"direct_verified", static_cast<bool>(r.direct_verified[i])},
                                {"members", members}});
            }
            Json doc = {{"q", r.q}, {"n", r.n}, {"p0", r.p0}, {"mode", r.mode}, {"classes", r.classes}, {"families", fams}};
            os << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "family,p0,fingerprint,direct_verified,members\n";
            for (std::size_t i = 0; i < r.families.size(); ++i) {
                const auto& f = r.families[i];
                os << f.id << ',' << f.p0 << ',' << f.fingerprint << ',' << (r.direct_verified[i] ? "true" : "false") << ','
                   << csv_field(members_of(f, " ")) << "\n";
            }
            break;
        case Format::table:
            os << "# search q=" << r.q << " n=" << r.n << " p0=" << r.p0 << " mode=" << r.mode << " classes=" << r.classes
               << " families=" << r.families.size() << "\n";
            os << std::left << std::setw(8) << "family" << std::setw(4) << "p0" << std::setw(18) << "fingerprint"
               << std::setw(8) << "direct" << "members\n";
            for (std::size_t i = 0; i < r.families.size(); ++i) {
                const auto& f = r.families[i];
                os << std::left << std::setw(8) << f.id << std::setw(4) << f.p0 << std::setw(18) << f.fingerprint
                   << std::setw(8) << (r.direct_verified[i] ? "ok" : "FAIL") << members_of(f, " ") << "\n";
            }
            break;
    }
    return os.str();
}

std::string render_checks(const std::vector<CheckResult>& checks, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            Json arr = Json::array();
            for (const auto& c : checks)
                arr.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "name,passed,cases,detail\n";
            for (const auto& c : checks)
                os << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << c.cases << ','
                   << csv_field(c.detail) << "\n";
            break;
        case Format::table:
            for (const auto& c : checks) {
                os << (c.passed ? "PASS " : "FAIL ") << c.name << "  (" << c.cases << " cases)";
                if (!c.passed) os << "  first failure: " << c.detail;
                os << "\n";
            }
            break;
    }
    return os.str();
}

}  // namespace lensspec
