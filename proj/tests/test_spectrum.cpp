#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lensspec/errors.hpp"
#include "lensspec/genfun.hpp"
#include "lensspec/spectrum.hpp"
#include "lensspec/weightmult.hpp"

using namespace lensspec;

namespace {

CongruenceLattice lens(int q, std::vector<int> s) { return lattice_from_lens(q, s); }

// multiplicity contributed by family f at k in a table
BigInt family_mult(const SpectrumTable& t, int k, int family) {
    for (const auto& e : t.entries)
        for (const auto& c : e.contributors)
            if (c.k == k && c.family == family) return c.multiplicity;
    return 0;
}

}  // namespace

TEST_CASE("eigenvalues") {
    CHECK(lambda(1, 0, 3) == 5);
    CHECK(lambda(2, -1, 2) == 0);
    CHECK(lambda(1, 1, 2) == 4);
}

TEST_CASE("round three-sphere") {
    auto t = spectrum_table(lens(1, {0, 0}), 0, 3);
    REQUIRE(t.entries.size() == 4);
    const std::int64_t ev[] = {0, 3, 8, 15};
    for (int k = 0; k < 4; ++k) {
        CHECK(t.entries[static_cast<std::size_t>(k)].eigenvalue == ev[k]);
        CHECK(t.entries[static_cast<std::size_t>(k)].multiplicity == (k + 1) * (k + 1));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(spectrum_table(lens(7, {1, 2}), 2, 5), InvalidParameters);
    CHECK_THROWS_AS(spectrum_table(lens(7, {1, 2}), -1, 5), InvalidParameters);
    CHECK_THROWS_AS(spectrum_table_any_degree(lens(7, {1, 2}), 5, 5), InvalidParameters);
}

TEST_CASE("table properties") {
    for (auto lat : {lens(1, {0, 0, 0}), lens(5, {1, 2, 3}), lens(6, {1, 2, 3}), lens(4, {1, 1}), lens(9, {1, 2, 4})}) {
        const int n = lat.rank();
        const int k_max = 12;
        auto theta = theta_family(lat);
        std::vector<SpectrumTable> tables;
        for (int p = 0; p < n; ++p) tables.push_back(spectrum_table(lat, p, k_max));
        for (int p = 0; p < n; ++p) {
            const auto& t = tables[static_cast<std::size_t>(p)];
            std::int64_t prev = -1;
            for (const auto& e : t.entries) {
                CHECK(e.eigenvalue > prev);
                prev = e.eigenvalue;
                BigInt sum = 0;
                for (const auto& c : e.contributors) {
                    sum += c.multiplicity;
                    CHECK(lambda(c.k, c.family, n) == e.eigenvalue);
                }
                CHECK(sum == e.multiplicity);
                CHECK(e.multiplicity > 0);
                if (p > 0) CHECK(e.eigenvalue > 0);
            }
            // coefficient k of F^p is the multiplicity of lambda_{k+1,p}
            auto f = series_expand(f_rational(theta, p), k_max - 1);
            for (int k = 0; k + 1 <= k_max; ++k) CHECK(family_mult(t, k + 1, p) == f[static_cast<std::size_t>(k)]);
            if (p + 1 < n)
                for (int k = 1; k <= k_max; ++k)
                    CHECK(family_mult(t, k, p) == family_mult(tables[static_cast<std::size_t>(p + 1)], k, p));
        }
    }
}

TEST_CASE("duality remap") {
    auto lat = lens(7, {1, 2, 3});
    for (int p = 3; p <= 5; ++p) {
        auto a = spectrum_table_any_degree(lat, p, 6);
        auto b = spectrum_table(lat, 5 - p, 6);
        CHECK(a.p == p);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(a.entries[i].eigenvalue == b.entries[i].eigenvalue);
            CHECK(a.entries[i].multiplicity == b.entries[i].multiplicity);
        }
    }
}
