#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "lensspec/counting.hpp"
#include "lensspec/errors.hpp"
#include "lensspec/lattice.hpp"
#include "naive.hpp"

using namespace lensspec;

namespace {

CongruenceLattice lens(int q, std::vector<int> s) { return lattice_from_lens(q, s); }

std::vector<CongruenceLattice> sample_lattices() {
    std::vector<CongruenceLattice> out;
    out.push_back(lens(1, {0, 0}));
    out.push_back(lens(1, {0, 0, 0}));
    out.push_back(lens(4, {1, 1}));
    out.push_back(lens(4, {1, 2}));
    out.push_back(lens(5, {1, 2}));
    out.push_back(lens(6, {1, 2, 3}));
    out.push_back(lens(7, {1, 2, 4}));
    out.push_back(lens(3, {1, 1, 1, 2}));
    out.push_back(parse_generators("4: 1,1,0; 2: 0,1,1").lattice());
    return out;
}

}  // namespace

TEST_CASE("lens lattices") {
    auto sphere = lens(1, {0, 0});
    CHECK(sphere.is_manifold());
    CHECK(sphere.exponent() == 1);
    CHECK(member(sphere, std::array{3, -7}));

    auto l411 = lens(4, {1, 1});
    CHECK(l411.is_manifold());
    CHECK(member(l411, std::array{1, -1}));
    CHECK_FALSE(member(l411, std::array{1, 1}));
    CHECK(member(l411, std::array{0, 0}));

    CHECK_FALSE(lens(4, {1, 2}).is_manifold());
    CHECK_THROWS_AS(lens(4, {2, 2}), InvalidParameters);
    CHECK_THROWS_AS(lens(0, {1, 1}), InvalidParameters);
    CHECK_THROWS_AS(lens(3, {1}), InvalidParameters);
    CHECK_THROWS_AS(member(l411, std::array{1, 2, 3}), DimensionMismatch);
}

TEST_CASE("lattice is periodic modulo its exponent") {
    for (const auto& lat : sample_lattices()) {
        const int q = lat.exponent();
        std::vector<int> a(static_cast<std::size_t>(lat.rank()));
        for (int trial = 0; trial < 200; ++trial) {
            for (std::size_t j = 0; j < a.size(); ++j) a[j] = (trial * 7 + static_cast<int>(j) * 13) % 11 - 5;
            bool in = lat.member(a);
            for (std::size_t j = 0; j < a.size(); ++j) {
                auto b = a;
                b[j] += q;
                CHECK(lat.member(b) == in);
                b[j] -= 3 * q;
                CHECK(lat.member(b) == in);
            }
        }
    }
}

TEST_CASE("torus subgroups") {
    TorusSubgroup g(2, {{4, {1, 1}}});
    CHECK(g.exponent() == 4);
    CHECK(g.acts_freely());
    TorusSubgroup h(2, {{4, {1, 2}}});
    CHECK_FALSE(h.acts_freely());
    TorusSubgroup two(3, {{4, {1, 1, 0}}, {6, {0, 3, 3}}});
    CHECK(two.exponent() == 4);  // 6: (0,3,3) reduces to 2: (0,1,1)
    CHECK(two.generators().size() == 2);
    CHECK(lattice_from_group(two).exponent() == 4);
}

TEST_CASE("space parsers") {
    auto s = parse_lens_shorthand("L(7; 1, 2)");
    CHECK(s.name == "L(7;1,2)");
    CHECK(s.lattice().rank() == 2);
    CHECK(parse_space("L(7;1,2)").name == "L(7;1,2)");
    auto g = parse_generators("# two generators\n4: 1,1,0\n2: 0,1,1\n");
    CHECK(g.group.generators().size() == 2);
    CHECK(parse_space("4: 1,1,0; 2: 0,1,1").group.generators().size() == 2);
    CHECK_THROWS_AS(parse_space("L(7;1,x)"), ParseError);
    CHECK_THROWS_AS(parse_generators("4: 1,1\n4: 1,1,1"), Error);

    const char* path = "lattice_test_generators.txt";
    {
        std::ofstream f(path);
        f << "5: 1,2\n";
    }
    CHECK(load_generator_file(path).lattice().exponent() == 5);
    std::remove(path);
    CHECK_THROWS_AS(load_generator_file("does/not/exist.txt"), Error);
}

TEST_CASE("shell counts, spec examples") {
    auto z3 = lens(1, {0, 0, 0});
    auto sc = shell_counts(z3, 2);
    CHECK(sc[3] == 0);
    CHECK(sc[2] == 6);
    CHECK(sc[1] == 12);
    CHECK(sc[0] == 0);
    CHECK(sc.total() == 18);

    auto l411 = shell_counts(lens(4, {1, 1}), 2);
    CHECK(l411[0] == 2);
    CHECK(l411[1] == 0);

    for (const auto& lat : sample_lattices()) {
        auto zero = shell_counts(lat, 0);
        for (int l = 0; l <= lat.rank(); ++l) CHECK(zero[l] == (l == lat.rank() ? 1 : 0));
    }
}

TEST_CASE("shell counts match full box enumeration") {
    for (const auto& lat : sample_lattices()) {
        const int k_max = lat.rank() >= 4 ? 5 : 8;
        auto table = shell_table(lat, k_max);
        REQUIRE(table.size() == static_cast<std::size_t>(k_max + 1));
        for (int k = 0; k <= k_max; ++k) {
            auto expect = naive::shell(lat, k);
            for (int l = 0; l <= lat.rank(); ++l) CHECK(table[static_cast<std::size_t>(k)][l] == expect[static_cast<std::size_t>(l)]);
            CHECK(shell_counts(lat, k).counts == table[static_cast<std::size_t>(k)].counts);
        }
    }
}

TEST_CASE("parallel kernels equal the serial reference") {
    for (const auto& lat : sample_lattices()) {
        auto par = shell_table(lat, 9);
        auto ser = reference::shell_table(lat, 9);
        for (std::size_t k = 0; k < par.size(); ++k) CHECK(par[k].counts == ser[k].counts);
        CHECK(reduced_counts(lat).rows == reference::reduced_counts(lat).rows);
        const int m = 2 * lat.exponent();
        CHECK(reduced_counts(lat, m).rows == reference::reduced_counts(lat, m).rows);
    }
    CHECK_THROWS_AS(reduced_counts(lens(4, {1, 1}), 6), InvalidParameters);
}

TEST_CASE("reduced counts and phi") {
    auto sphere = reduced_counts(lens(1, {0, 0, 0}));
    for (int l = 0; l <= 3; ++l)
        for (int k = 0; k <= sphere.max_norm(l); ++k) CHECK(sphere.at(k, l) == (k == 0 && l == 3 ? 1 : 0));

    auto phi = phi_polynomials(lens(2, {1, 1}));
    REQUIRE(phi.size() == 3);
    CHECK(phi[2] == LaurentPolynomial(1));
    CHECK(phi[1].is_zero());
    CHECK(phi[0] == LaurentPolynomial::monomial(4, 2));
}
