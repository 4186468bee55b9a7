#include "doctest.h"
#include "shellconf/degeneracy.hpp"
#include "shellconf/hydrogen.hpp"

#include <cmath>

using namespace shellconf;
using namespace shellconf::degeneracy;

namespace {
GridSpec spec(int n = 150) {
    GridSpec s;
    s.n_points = n;
    return s;
}
}  // namespace

TEST_CASE("counting formulas") {
    CHECK(count_total(4) == 20);
    CHECK(count_total(1) == 1);
    CHECK(count_total(3) == 10);
    const auto c4 = count_by_category(4);
    CHECK(c4.at(Regime::FHA) == 4);
    CHECK(c4.at(Regime::CHA) == 6);
    CHECK(c4.at(Regime::SCHA) == 4);
    CHECK(c4.at(Regime::LCHA) == 6);
    const auto c2 = count_by_category(2);
    CHECK(c2.at(Regime::FHA) == 2);
    CHECK(c2.at(Regime::CHA) == 1);
    CHECK(c2.at(Regime::SCHA) == 0);
    CHECK(c2.at(Regime::LCHA) == 1);
    long sum5 = 0;
    for (const auto& [reg, c] : count_by_category(5)) sum5 += c;
    CHECK(sum5 == count_total(5));
}

TEST_CASE("node-anchored geometries reproduce the table boundary pattern") {
    const auto nodes4s = hydrogen::radial_nodes({4, 0, 1.0});
    const auto g = node_geometries(nodes4s);
    REQUIRE(g.size() == 10);
    // adjacent spans first (node-less confined states), then wider spans
    CHECK(g[0].r_inner == 0.0);
    CHECK(*g[0].r_outer == doctest::Approx(nodes4s[0]));
    CHECK(*g[1].r_outer == doctest::Approx(nodes4s[1]));
    CHECK(g[1].r_inner == doctest::Approx(nodes4s[0]));
    CHECK(!g[3].r_outer.has_value());
    CHECK(g[3].r_inner == doctest::Approx(nodes4s[2]));
    CHECK(!g[9].r_outer.has_value());
    CHECK(g[9].r_inner == 0.0);

    CHECK(node_geometries({}).size() == 1);
    CHECK(!node_geometries({})[0].r_outer.has_value());

    const auto nodes4p = hydrogen::radial_nodes({4, 1, 1.0});
    const auto gp = node_geometries(nodes4p);
    REQUIRE(gp.size() == 6);
    const double lo = 10.0 - 2.0 * std::sqrt(5.0), hi = 10.0 + 2.0 * std::sqrt(5.0);
    CHECK(nodes4p[0] == doctest::Approx(lo).epsilon(1e-9));
    CHECK(nodes4p[1] == doctest::Approx(hi).epsilon(1e-9));
    for (const auto& geom : gp) {
        CHECK((geom.r_inner == 0.0 || std::fabs(geom.r_inner - lo) < 1e-8 ||
               std::fabs(geom.r_inner - hi) < 1e-8));
    }
}

TEST_CASE("numeric node finding in screened potentials") {
    const auto wcp2s = find_nodes_numeric(PotentialModel::debye(1.0, 0.01), 2, 0, spec(200));
    REQUIRE(wcp2s.size() == 1);
    CHECK(std::fabs(wcp2s[0] - 2.000390) < 1e-4);

    const auto ec3s = find_nodes_numeric(PotentialModel::exp_cosine(1.0, 0.01), 3, 0, spec(200));
    REQUIRE(ec3s.size() == 2);
    CHECK(std::fabs(ec3s[0] - 1.90200530) < 1e-4);
    CHECK(std::fabs(ec3s[1] - 7.0994429) < 1e-4);

    const auto c4s = find_nodes_numeric(PotentialModel::coulomb(1.0), 4, 0, spec(200));
    const auto exact = hydrogen::radial_nodes({4, 0, 1.0});
    REQUIRE(c4s.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(c4s[i] - exact[i]) < 1e-6);
}

TEST_CASE("unbound state is refused") {
    // lambda = 0.5 leaves WCP with no bound 4s
    CHECK_THROWS_AS(find_nodes_numeric(PotentialModel::debye(1.0, 0.5), 4, 0, spec(150)),
                    std::runtime_error);
}

TEST_CASE("atlas n=3 brute enumeration matches the closed form") {
    const auto rows = enumerate_atlas(3, PotentialModel::coulomb(1.0), spec(150));
    CHECK(long(rows.size()) == count_total(3));
    for (const auto& r : rows) CHECK(std::fabs(r.energy - (-1.0 / 18.0)) < 1e-6);
}

TEST_CASE("plasma atlases carry the free-level energy") {
    const auto wcp = enumerate_atlas(2, PotentialModel::debye(1.0, 0.01), spec(200));
    REQUIRE(wcp.size() == 3);
    for (const auto& r : wcp) CHECK(std::fabs(r.energy - (-0.115293282)) < 1e-6);

    const auto ec = enumerate_atlas(3, PotentialModel::exp_cosine(1.0, 0.01), spec(200));
    REQUIRE(ec.size() == 6);
    for (const auto& r : ec) CHECK(std::fabs(r.energy - (-0.045619079)) < 1e-6);
}

TEST_CASE("per-ell row counts and node bookkeeping, n = 4") {
    const auto rows = enumerate_atlas(4, PotentialModel::coulomb(1.0), spec(150));
    REQUIRE(long(rows.size()) == count_total(4));
    std::map<int, int> by_ell;
    std::map<Regime, int> by_reg;
    for (const auto& r : rows) {
        ++by_ell[r.ell];
        ++by_reg[r.regime];
        // interior node count equals the number of parent nodes inside
        const auto parent = hydrogen::radial_nodes({r.parent_n, r.parent_ell, 1.0});
        int inside = 0;
        for (double nd : parent)
            if (nd > r.geometry.r_inner && (!r.geometry.bounded() || nd < *r.geometry.r_outer))
                ++inside;
        CHECK(r.state_index == inside);
    }
    for (int l = 0; l < 4; ++l) CHECK(by_ell[l] == (4 - l) * (4 - l + 1) / 2);
    CHECK(by_reg[Regime::FHA] == 4);
    CHECK(by_reg[Regime::CHA] == 6);
    CHECK(by_reg[Regime::SCHA] == 4);
    CHECK(by_reg[Regime::LCHA] == 6);
}

TEST_CASE("a row failing the energy match reports its geometry") {
    AtlasOptions opts;
    opts.energy_tolerance = 1e-15;  // unreachably tight
    CHECK_THROWS_WITH_AS(enumerate_atlas(2, PotentialModel::coulomb(1.0), spec(64), opts),
                         doctest::Contains("geometry"), std::runtime_error);
}
