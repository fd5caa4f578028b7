#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "lensspec/cli.hpp"
#include "lensspec/genfun.hpp"
#include "lensspec/lattice.hpp"
#include "lensspec/rational_series.hpp"

using namespace lensspec;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "lensspec");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool single_error_line(const Run& r) {
    return r.out.empty() && r.err.rfind("error: ", 0) == 0 && r.err.find('\n') == r.err.size() - 1;
}

}  // namespace

TEST_CASE("spectrum json") {
    auto r = run({"spectrum", "--space", "L(4;1,1)", "--p", "0", "--kmax", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = Json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(!doc.empty());
    for (const auto& rec : doc) {
        CHECK(rec["space"] == "L(4;1,1)");
        CHECK(rec["eigenvalue"].is_number_integer());
        CHECK(rec["multiplicity"].is_string());
        BigInt sum = 0;
        for (const auto& c : rec["contributors"]) sum += BigInt(c["multiplicity"].get<std::string>());
        CHECK(sum == BigInt(rec["multiplicity"].get<std::string>()));
    }
    CHECK(doc[0]["eigenvalue"] == 0);
    CHECK(doc[0]["multiplicity"] == "1");
}

TEST_CASE("spectrum of the round sphere") {
    auto r = run({"spectrum", "--space", "L(1;0,0)", "--p", "0", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "space,n,p,eigenvalue,multiplicity,contributors");
    for (int k = 0; k <= 3; ++k) {
        std::getline(lines, line);
        CHECK(line.rfind("\"L(1;0,0)\",2,0," + std::to_string(k * (k + 2)) + "," + std::to_string((k + 1) * (k + 1)) + ",", 0) == 0);
    }
}

TEST_CASE("errors are single lines with exit code 2") {
    auto r = run({"spectrum", "--p", "5", "--space", "L(7;1,2)"});
    CHECK(r.code == 2);
    CHECK(single_error_line(r));
    CHECK(r.err.find("InvalidParameters") != std::string::npos);
    for (auto args : std::vector<std::vector<std::string>>{{"spectrum"},
                                                            {"spectrum", "--space", "L(4;2,2)"},
                                                            {"spectrum", "--space", "L(4;1"},
                                                            {"spectrum", "--space", "L(4;1,1)", "--format", "xml"},
                                                            {"genfun", "--gen-file", "/nonexistent/file"},
                                                            {"isospectral", "--space", "L(4;1,1)"},
                                                            {"isospectral", "--space", "L(4;1,1)", "--space2", "L(5;1,1,2)"},
                                                            {"isospectral", "--space", "L(4;1,1)", "--space2", "L(5;1,2)", "--method", "x"},
                                                            {"search", "--q", "5"},
                                                            {"frobnicate"},
                                                            {}}) {
        auto e = run(args);
        CHECK(e.code == 2);
        CHECK(single_error_line(e));
    }
}

TEST_CASE("genfun output round-trips") {
    for (std::string space : {"L(1;0,0)", "L(5;1,2)", "L(6;1,2,3)", "4: 1,1,0; 2: 0,1,1"}) {
        auto r = run({"genfun", "--space", space, "--format", "json", "--order", "40"});
        REQUIRE(r.code == 0);
        auto doc = Json::parse(r.out);
        auto lat = parse_space(space).lattice();
        auto fam = theta_family(lat);
        bool saw_f0 = false;
        for (const auto& f : doc["functions"]) {
            CHECK(f["series"].size() == 41);
            auto value = parse_rational_series(f["rational"].get<std::string>());
            auto series = series_expand(value, 40);
            for (std::size_t i = 0; i < series.size(); ++i) CHECK(series[i].get_str() == f["series"][i].get<std::string>());
            if (f["name"] == "F^0") {
                saw_f0 = true;
                CHECK(series_equal(value, f0_closed_form(fam)));
            }
            if (f["name"] == "theta") CHECK(series_equal(value, fam.total));
        }
        CHECK(saw_f0);
    }
    auto t = run({"genfun", "--space", "L(1;0,0)"});
    CHECK(t.out.find("theta = 1*z^0 + 2*z^1 + 1*z^2 | (1-z^1)^2") != std::string::npos);
}

TEST_CASE("isospectral verdicts") {
    auto same = run({"isospectral", "--space", "L(7;1,2,3)", "--space2", "L(7;2,4,6)", "--format", "json"});
    REQUIRE(same.code == 0);
    auto same_doc = Json::parse(same.out);
    for (const auto& v : same_doc["verdicts"]) CHECK(v["isospectral"] == true);

    auto diff = run({"isospectral", "--space", "L(1;0,0)", "--space2", "L(2;1,1)", "--format", "json"});
    REQUIRE(diff.code == 0);
    auto v0 = Json::parse(diff.out)["verdicts"][0];
    CHECK(v0["isospectral"] == false);
    CHECK(v0["certificate"].get<std::string>().find("z^1: 4 vs 0") != std::string::npos);

    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"L(11;1,2,3)", "L(11;1,2,4)"}, {"L(1;0,0)", "L(2;1,1)"}, {"L(8;1,3,5)", "L(8;1,1,3)"}, {"L(5;1,2)", "L(5;1,1)"}}) {
        auto theta = Json::parse(run({"isospectral", "--space", a, "--space2", b, "--format", "json"}).out);
        auto direct = Json::parse(run({"isospectral", "--space", a, "--space2", b, "--format", "json", "--method", "direct"}).out);
        REQUIRE(theta["verdicts"].size() == direct["verdicts"].size());
        for (std::size_t i = 0; i < theta["verdicts"].size(); ++i)
            CHECK(theta["verdicts"][i]["isospectral"] == direct["verdicts"][i]["isospectral"]);
    }
}

TEST_CASE("search and verify") {
    auto s = run({"search", "--q", "11", "--n", "3", "--p0", "0", "--format", "json"});
    REQUIRE(s.code == 0);
    auto doc = Json::parse(s.out);
    REQUIRE(!doc["families"].empty());
    for (const auto& f : doc["families"]) {
        CHECK(f["direct_verified"] == true);
        CHECK(f["members"].size() >= 2);
    }
    auto empty = run({"search", "--q", "5", "--n", "2", "--p0", "0", "--format", "json"});
    CHECK(empty.code == 0);
    CHECK(Json::parse(empty.out)["families"].empty());

    auto v = run({"verify", "--n", "3", "--kmax", "6"});
    CHECK(v.code == 0);
    CHECK(v.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output does not depend on the thread count") {
    for (std::vector<std::string> args : {std::vector<std::string>{"spectrum", "--space", "L(9;1,2,4)", "--p", "1", "--kmax", "15"},
                                          std::vector<std::string>{"genfun", "--space", "L(12;1,5,7)", "--format", "json"},
                                          std::vector<std::string>{"search", "--q", "12", "--n", "3", "--mode", "orbifolds"}}) {
        auto base = args;
        base.insert(base.end(), {"--threads", "1"});
        auto ref = run(base).out;
        for (std::string t : {"2", "4", "8"}) {
            auto a = args;
            a.insert(a.end(), {"--threads", t});
            CHECK(run(a).out == ref);
        }
    }
}
