#include "doctest.h"
#include "shellconf/solver.hpp"

#include <cmath>

using namespace shellconf;

namespace {
GridSpec spec(int n = 200) {
    GridSpec s;
    s.n_points = n;
    return s;
}
}  // namespace

TEST_CASE("grid spec validation") {
    GridSpec s;
    s.n_points = 8;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = GridSpec{};
    s.map_scale = 0.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("interior Lobatto layout on (0,1)") {
    RadialGrid g(ConfinementGeometry::cavity(1.0), spec(32));
    const auto& r = g.radii();
    REQUIRE(r.size() == 32);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r[i] > 0.0);
        CHECK(r[i] < 1.0);
        if (i) CHECK(r[i] > r[i - 1]);
    }
    // symmetric clustering toward both endpoints
    for (std::size_t i = 0; i < r.size(); ++i)
        CHECK(r[i] + r[r.size() - 1 - i] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r[1] - r[0] < r[17] - r[16]);
}

TEST_CASE("smooth-function weights integrate exactly") {
    RadialGrid g(ConfinementGeometry::cavity(1.0), spec(32));
    const auto& r = g.radii();
    std::vector<double> one(r.size(), 1.0), r2(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) r2[i] = r[i] * r[i];
    CHECK(quadrature_integral(one, g.weights_smooth()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quadrature_integral(r2, g.weights_smooth()) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    std::vector<double> short_vec(3, 1.0);
    CHECK_THROWS_AS(quadrature_integral(short_vec, g.weights_smooth()), std::invalid_argument);
}

TEST_CASE("algebraic map endpoint lands on the truncation radius") {
    GridSpec s = spec(32);
    s.map_scale = 1.0;
    s.r_max_truncation = 200.0;
    RadialGrid g(ConfinementGeometry::free_atom(), s);
    CHECK(g.r_max() == doctest::Approx(200.0).epsilon(1e-8));
    for (double r : g.radii()) CHECK(r < 200.0);
}

TEST_CASE("degenerate domain is rejected") {
    CHECK_THROWS_AS(RadialGrid(ConfinementGeometry::shell(1.0, 1.0 + 1e-9), spec(32)),
                    std::invalid_argument);
}

TEST_CASE("hamiltonian is symmetric by construction") {
    RadialGrid g(ConfinementGeometry::cavity(1.0), spec(32));
    const Matrix h = assemble_hamiltonian(g, PotentialModel::coulomb(1.0), 0);
    CHECK(h.symmetry_defect() < 1e-12);
}

TEST_CASE("free-hydrogen ground state to 1e-10") {
    Spectrum sp = solve_radial(ConfinementGeometry::free_atom(), PotentialModel::coulomb(1.0), 0,
                               4, spec(200));
    CHECK(sp[0].energy == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(sp[1].energy == doctest::Approx(-0.125).epsilon(1e-9));
}

TEST_CASE("confined energies hit the degenerate level") {
    // walls on the 4s nodes, all states pinned at -1/32
    Spectrum a = solve_radial(ConfinementGeometry::cavity(1.87164450),
                              PotentialModel::coulomb(1.0), 0, 1, spec(200));
    CHECK(std::fabs(a[0].energy - (-0.03125)) < 1e-7);
    Spectrum b = solve_radial(ConfinementGeometry::shell(1.87164450, 6.6108150),
                              PotentialModel::coulomb(1.0), 0, 1, spec(200));
    CHECK(std::fabs(b[0].energy - (-0.03125)) < 1e-7);
    Spectrum h = solve_radial(ConfinementGeometry::cavity(15.51755), PotentialModel::coulomb(1.0),
                              0, 3, spec(200));
    CHECK(std::fabs(h[2].energy - (-0.03125)) < 1e-7);
    CHECK(h[2].count_nodes() == 2);
}

TEST_CASE("weakly screened free states match the reference energies") {
    Spectrum w = solve_radial(ConfinementGeometry::free_atom(), PotentialModel::debye(1.0, 0.01),
                              0, 4, spec(200));
    CHECK(std::fabs(w[1].energy - (-0.115293282)) < 1e-7);
    Spectrum e = solve_radial(ConfinementGeometry::free_atom(),
                              PotentialModel::exp_cosine(1.0, 0.01), 0, 4, spec(200));
    CHECK(std::fabs(e[1].energy - (-0.115013458)) < 1e-7);
}

TEST_CASE("solution normalization and orthogonality in the eigen metric") {
    Spectrum sp = solve_radial(ConfinementGeometry::cavity(5.0), PotentialModel::coulomb(1.0), 0,
                               10, spec(120));
    for (const auto& s : sp.solutions) {
        std::vector<double> u2(s.u.size());
        for (std::size_t i = 0; i < s.u.size(); ++i) u2[i] = s.u[i] * s.u[i];
        CHECK(quadrature_integral(u2, s.weights()) == doctest::Approx(1.0).epsilon(1e-10));
    }
    for (std::size_t a = 0; a < sp.size(); ++a)
        for (std::size_t b = a + 1; b < sp.size(); ++b) {
            std::vector<double> prod(sp[a].u.size());
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = sp[a].u[i] * sp[b].u[i];
            CHECK(std::fabs(quadrature_integral(prod, sp[a].weights())) < 1e-8);
        }
    // energies strictly increasing
    for (std::size_t k = 1; k < sp.size(); ++k) CHECK(sp[k].energy > sp[k - 1].energy);
}

TEST_CASE("interpolant vanishes at the walls and tracks u") {
    Spectrum sp = solve_radial(ConfinementGeometry::shell(1.0, 4.0), PotentialModel::coulomb(1.0),
                               1, 2, spec(80));
    const auto& s = sp[1];
    CHECK(std::fabs(s.grid->interpolate(s.u, 1.0)) < 1e-12);
    CHECK(std::fabs(s.grid->interpolate(s.u, 4.0)) < 1e-12);
    const auto& r = s.radii();
    CHECK(s.grid->interpolate(s.u, r[40]) == doctest::Approx(s.u[40]).epsilon(1e-13));
    const double mid = 0.5 * (r[40] + r[41]);
    CHECK(std::fabs(s.grid->interpolate(s.u, mid) - 0.5 * (s.u[40] + s.u[41])) < 1e-3);
}

TEST_CASE("n_states precondition") {
    CHECK_THROWS_AS(solve_radial(ConfinementGeometry::cavity(1.0), PotentialModel::coulomb(1.0),
                                 0, 31, spec(32)),
                    std::invalid_argument);
}

TEST_CASE("grid doubling leaves a converged energy untouched") {
    const auto e1 = solve_radial(ConfinementGeometry::cavity(1.87164450),
                                 PotentialModel::coulomb(1.0), 0, 1, spec(100))[0].energy;
    const auto e2 = solve_radial(ConfinementGeometry::cavity(1.87164450),
                                 PotentialModel::coulomb(1.0), 0, 1, spec(200))[0].energy;
    CHECK(std::fabs(e1 - e2) < 1e-10);
}

TEST_CASE("R is recovered as u/r on demand") {
    Spectrum sp = solve_radial(ConfinementGeometry::free_atom(), PotentialModel::coulomb(1.0), 0,
                               1, spec(200));
    // free 1s: R(r) = 2 e^{-r}
    for (double r : {0.3, 1.0, 2.5, 6.0})
        CHECK(std::fabs(sp[0].r_function(r)) ==
              doctest::Approx(2.0 * std::exp(-r)).epsilon(1e-8));
}
