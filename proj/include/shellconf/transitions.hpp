#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <vector>

#include "shellconf/solver.hpp"

namespace shellconf::transitions {

using Rational = boost::multiprecision::cpp_rational;

struct StateLabel {
    int state_index = 0;
    int ell = 0;
};

/// One 2^k-pole transition between two states solved on a shared grid.
/// Absorption carries f > 0, emission f < 0; a selection-rule-violating pair
/// yields f = 0 with forbidden = true.
struct TransitionRecord {
    int k = 1;
    StateLabel initial, final;
    ConfinementGeometry geometry;
    PotentialModel model;
    double delta_e = 0.0;        // E_final - E_initial
    double radial_element = 0.0; // <r^k>
    double f_value = 0.0;
    bool forbidden = false;
};

/// { ell' >= 0 : |ell-k| <= ell' <= ell+k, ell+ell'+k even }
std::set<int> selection_final_ells(int k, int ell);

/// Squared 3j symbol with all projections zero, exact closed form
/// (parity prefactor times a factorial ratio, integer arithmetic throughout).
Rational wigner3j_zero_sq(int ell_p, int k, int ell);

/// <a| r^k |b> on the shared grid; throws if the grids differ.
double radial_matrix_element(const RadialSolution& a, const RadialSolution& b, int k);

/// f^(k) = 2 (2 ell'+1)/(2k+1) dE |<r^k>|^2 (3j)^2, m-independent.
TransitionRecord oscillator_strength(int k, const RadialSolution& initial,
                                     const RadialSolution& final_state);

struct SumRuleResult {
    double lhs = 0.0;  // sum of f over the complete pseudospectrum
    double rhs = 0.0;  // k <r^{2k-2}>
};

/// Both sides of the multipole sum rule. `spectra` must contain a complete
/// spectrum (all pseudostates the grid supports) for every allowed ell'.
SumRuleResult sum_rule(int k, const RadialSolution& initial,
                       const std::map<int, const Spectrum*>& spectra);

}  // namespace shellconf::transitions
