#include "shellconf/transitions.hpp"

#include <cmath>

namespace shellconf::transitions {

using boost::multiprecision::cpp_int;

std::set<int> selection_final_ells(int k, int ell) {
    if (k < 1 || k > 4) throw std::invalid_argument("selection rule: k must be 1..4");
    if (ell < 0) throw std::invalid_argument("selection rule: ell must be >= 0");
    std::set<int> out;
    for (int lp = std::abs(ell - k); lp <= ell + k; ++lp)
        if ((ell + lp + k) % 2 == 0) out.insert(lp);
    return out;
}

namespace {

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Rational wigner3j_zero_sq(int ell_p, int k, int ell) {
    const int J = ell_p + k + ell;
    if (J % 2 != 0) return 0;
    if (J - 2 * ell_p < 0 || J - 2 * k < 0 || J - 2 * ell < 0) return 0;  // triangle
    const int h = J / 2;
    Rational v(factorial(J - 2 * ell_p) * factorial(J - 2 * k) * factorial(J - 2 * ell),
               factorial(J + 1));
    const Rational m(factorial(h), factorial(h - ell_p) * factorial(h - k) * factorial(h - ell));
    return v * m * m;
}

double radial_matrix_element(const RadialSolution& a, const RadialSolution& b, int k) {
    if (!a.grid->same_points(*b.grid) || !(a.model == b.model))
        throw std::invalid_argument("radial_matrix_element: states live on different grids");
    const auto& r = a.radii();
    const auto& w = a.weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
        acc += w[i] * a.u[i] * b.u[i] * std::pow(r[i], double(k));
    return acc;
}

TransitionRecord oscillator_strength(int k, const RadialSolution& initial,
                                     const RadialSolution& final_state) {
    TransitionRecord rec;
    rec.k = k;
    rec.initial = {initial.state_index, initial.ell};
    rec.final = {final_state.state_index, final_state.ell};
    rec.geometry = initial.geometry;
    rec.model = initial.model;
    rec.delta_e = final_state.energy - initial.energy;

    const auto allowed = selection_final_ells(k, initial.ell);
    if (!allowed.count(final_state.ell)) {
        rec.forbidden = true;
        return rec;
    }
    rec.radial_element = radial_matrix_element(initial, final_state, k);
    const double w3 = wigner3j_zero_sq(final_state.ell, k, initial.ell).convert_to<double>();
    rec.f_value = 2.0 * (2.0 * final_state.ell + 1.0) / (2.0 * k + 1.0) * rec.delta_e *
                  rec.radial_element * rec.radial_element * w3;
    return rec;
}

SumRuleResult sum_rule(int k, const RadialSolution& initial,
                       const std::map<int, const Spectrum*>& spectra) {
    SumRuleResult out;
    for (int lp : selection_final_ells(k, initial.ell)) {
        const auto it = spectra.find(lp);
        if (it == spectra.end())
            throw std::invalid_argument("sum_rule: missing spectrum for ell' = " +
                                        std::to_string(lp));
        for (const auto& fin : it->second->solutions)
            out.lhs += oscillator_strength(k, initial, fin).f_value;
    }
    out.rhs = k * radial_matrix_element(initial, initial, 2 * k - 2);
    return out;
}

}  // namespace shellconf::transitions
