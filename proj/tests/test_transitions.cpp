#include "doctest.h"
#include "shellconf/transitions.hpp"

#include <cmath>
#include <random>

using namespace shellconf;
using namespace shellconf::transitions;

namespace {

GridSpec spec(int n = 200) {
    GridSpec s;
    s.n_points = n;
    return s;
}

// independent oracle: Racah sum formula for the 3j symbol with zero projections
double racah_3j000(int l1, int l2, int l3) {
    auto lnfact = [](int n) { return std::lgamma(n + 1.0); };
    if ((l1 + l2 + l3) % 2) return 0.0;
    if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;
    double sum = 0.0;
    for (int t = std::max(0, std::max(l2 - l3, l1 - l3)); t <= std::min(l1 + l2 - l3, std::min(l1, l2));
         ++t) {
        const double ln = lnfact(t) + lnfact(l3 - l2 + t) + lnfact(l3 - l1 + t) +
                          lnfact(l1 + l2 - l3 - t) + lnfact(l1 - t) + lnfact(l2 - t);
        sum += ((t % 2) ? -1.0 : 1.0) * std::exp(-ln);
    }
    const double tri = std::exp(0.5 * (lnfact(l1 + l2 - l3) + lnfact(l1 - l2 + l3) +
                                       lnfact(-l1 + l2 + l3) - lnfact(l1 + l2 + l3 + 1)));
    const double pre = std::exp(lnfact(l1) + lnfact(l2) + lnfact(l3));
    const int sgn = ((l1 - l2) % 2) ? -1 : 1;  // phase irrelevant, squared below
    return sgn * tri * pre * sum;
}

}  // namespace

TEST_CASE("selection rules") {
    CHECK(selection_final_ells(1, 0) == std::set<int>{1});
    CHECK(selection_final_ells(2, 1) == std::set<int>{1, 3});
    CHECK(selection_final_ells(4, 4) == std::set<int>{0, 2, 4, 6, 8});
    CHECK(selection_final_ells(2, 0) == std::set<int>{2});
    CHECK(selection_final_ells(3, 0) == std::set<int>{3});
}

TEST_CASE("squared 3j with zero projections: exact rationals and Racah oracle") {
    CHECK(wigner3j_zero_sq(1, 1, 0) == Rational(1, 3));
    CHECK(wigner3j_zero_sq(2, 1, 0) == 0);
    CHECK(wigner3j_zero_sq(1, 2, 1) == Rational(2, 15));
    for (int l1 = 0; l1 <= 8; ++l1)
        for (int k = 0; k <= 6; ++k)
            for (int l2 = 0; l2 <= 8; ++l2) {
                const double exact = wigner3j_zero_sq(l1, k, l2).convert_to<double>();
                const double brute = racah_3j000(l1, k, l2);
                CHECK(exact == doctest::Approx(brute * brute).epsilon(1e-10));
                const bool vanish = ((l1 + k + l2) % 2 != 0) || l2 < std::abs(l1 - k) ||
                                    l2 > l1 + k;
                CHECK((exact == 0.0) == vanish);
            }
}

TEST_CASE("radial matrix elements") {
    auto grid = std::make_shared<const RadialGrid>(ConfinementGeometry::free_atom(), spec(200));
    Spectrum s0 = solve_radial(grid, PotentialModel::coulomb(1.0), 0, 6);
    Spectrum s1 = solve_radial(grid, PotentialModel::coulomb(1.0), 1, 6);
    CHECK(radial_matrix_element(s0[0], s0[0], 0) == doctest::Approx(1.0).epsilon(1e-10));
    // <1s| r |2p> = 128 sqrt(6)/243, brute-force integral of the analytic functions
    CHECK(std::fabs(radial_matrix_element(s0[0], s1[0], 1)) ==
          doctest::Approx(1.2902662019598634).epsilon(1e-9));
    CHECK(std::fabs(radial_matrix_element(s0[0], s0[1], 0)) < 1e-8);

    Spectrum other = solve_radial(ConfinementGeometry::cavity(2.0), PotentialModel::coulomb(1.0),
                                  1, 2, spec(200));
    CHECK_THROWS_AS(radial_matrix_element(s0[0], other[0], 1), std::invalid_argument);
}

TEST_CASE("oscillator strengths against the reference table") {
    auto grid = std::make_shared<const RadialGrid>(ConfinementGeometry::cavity(1.0), spec(200));
    const auto m = PotentialModel::coulomb(1.0);
    Spectrum s0 = solve_radial(grid, m, 0, 4);
    Spectrum s1 = solve_radial(grid, m, 1, 4);
    CHECK(oscillator_strength(1, s0[0], s1[0]).f_value ==
          doctest::Approx(0.98455839).epsilon(1e-6));
    CHECK(oscillator_strength(1, s1[0], s0[0]).f_value ==
          doctest::Approx(-0.32818613).epsilon(1e-6));

    auto fgrid = std::make_shared<const RadialGrid>(ConfinementGeometry::free_atom(), spec(200));
    Spectrum f0 = solve_radial(fgrid, m, 0, 4);
    Spectrum f1 = solve_radial(fgrid, m, 1, 4);
    CHECK(oscillator_strength(1, f0[0], f1[0]).f_value ==
          doctest::Approx(0.41619672).epsilon(1e-6));

    // sign follows delta E
    const auto up = oscillator_strength(1, s0[0], s1[0]);
    CHECK(up.f_value * up.delta_e > 0.0);
    // forbidden pair comes back flagged with f = 0
    const auto forb = oscillator_strength(1, s0[0], s0[1]);
    CHECK(forb.forbidden);
    CHECK(forb.f_value == 0.0);
}

TEST_CASE("emission/absorption reciprocity is exact") {
    auto grid = std::make_shared<const RadialGrid>(ConfinementGeometry::shell(1.0, 5.0), spec(150));
    const auto m = PotentialModel::coulomb(1.0);
    std::map<int, Spectrum> sp;
    for (int l = 0; l <= 3; ++l) sp.emplace(l, solve_radial(grid, m, l, 5));
    for (const auto& [la, lb, k] : {std::tuple{0, 1, 1}, {1, 2, 1}, {0, 2, 2}, {1, 2, 3}}) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double fab = oscillator_strength(k, sp.at(la)[i], sp.at(lb)[j]).f_value;
                const double fba = oscillator_strength(k, sp.at(lb)[j], sp.at(la)[i]).f_value;
                const double expect = -(2.0 * la + 1.0) / (2.0 * lb + 1.0) * fab;
                CHECK(fba == doctest::Approx(expect).epsilon(1e-10));
            }
    }
}

TEST_CASE("multipole sum rule closes on the discrete basis") {
    auto grid = std::make_shared<const RadialGrid>(ConfinementGeometry::cavity(1.0), spec(150));
    const auto m = PotentialModel::coulomb(1.0);
    std::map<int, Spectrum> store;
    std::map<int, const Spectrum*> view;
    for (int l = 0; l <= 4; ++l) store.emplace(l, solve_radial(grid, m, l, 148));
    for (auto& [l, s] : store) view[l] = &s;

    SumRuleResult trk = sum_rule(1, store.at(0)[0], view);
    CHECK(trk.rhs == doctest::Approx(1.0).epsilon(1e-10));  // <r^0> = 1
    CHECK(trk.lhs == doctest::Approx(trk.rhs).epsilon(1e-6));
    SumRuleResult k3 = sum_rule(3, store.at(0)[0], view);
    CHECK(k3.lhs == doctest::Approx(k3.rhs).epsilon(1e-6));

    // FHA 1s, k=2: rhs = 2 <r^2> = 6
    auto fgrid = std::make_shared<const RadialGrid>(ConfinementGeometry::free_atom(), spec(150));
    std::map<int, Spectrum> fs;
    std::map<int, const Spectrum*> fv;
    for (int l : {0, 2}) fs.emplace(l, solve_radial(fgrid, m, l, 148));
    for (auto& [l, s] : fs) fv[l] = &s;
    SumRuleResult k2 = sum_rule(2, fs.at(0)[0], fv);
    CHECK(k2.rhs == doctest::Approx(6.0).epsilon(1e-8));
    CHECK(k2.lhs == doctest::Approx(k2.rhs).epsilon(1e-6));
}
