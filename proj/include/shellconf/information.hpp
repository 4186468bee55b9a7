#pragma once

#include <vector>

#include "shellconf/solver.hpp"

namespace shellconf::information {

struct PGridSpec {
    double p_max = 30.0;  // inverse bohr
    int n_points = 400;   // Gauss-Legendre points on [0, p_max]
};

/// Radial momentum function psi_l(p) = sqrt(2/pi) \int R(r) j_l(pr) r^2 dr on
/// a Gauss-Legendre momentum grid, with sum w |psi|^2 p^2 = 1 to the captured
/// norm.
struct MomentumWavefunction {
    int ell = 0;
    std::vector<double> momenta;
    std::vector<double> values;
    std::vector<double> weights;
    double captured_norm = 0.0;
};

/// Spherical Bessel transform of the solution. Throws if the grid captures
/// less than 1 - 1e-5 of the norm (advice: raise p_max).
MomentumWavefunction momentum_transform(const RadialSolution& s, const PGridSpec& pg);

struct EntropyParts {
    double radial = 0.0;
    double angular = 0.0;
    double full = 0.0;  // radial + angular for S, radial * angular for E
};

/// Position-space Shannon entropy of |R|^2 plus the angular part of
/// |Y_{l m}|^2 (m = 0 by default).
EntropyParts shannon_entropy_position(const RadialSolution& s, int m = 0);
EntropyParts shannon_entropy_momentum(const MomentumWavefunction& mw, int m = 0);

/// Onicescu information energy (second entropic moment), same split.
EntropyParts onicescu_energy_position(const RadialSolution& s, int m = 0);
EntropyParts onicescu_energy_momentum(const MomentumWavefunction& mw, int m = 0);

/// Everything Table-style consumers need for one state.
struct EntropyReport {
    double s_r_full = 0.0, s_p_full = 0.0, s_total = 0.0;
    double e_r_full = 0.0, e_p_full = 0.0, e_total = 0.0;
    double angular_s = 0.0, angular_e = 0.0;
    double momentum_norm = 0.0;
};

EntropyReport entropy_report(const ConfinementGeometry& geometry, const PotentialModel& model,
                             int ell, int state_index, const GridSpec& spec, const PGridSpec& pg,
                             int m = 0);

/// 3 (1 + ln pi), the BBM lower bound on s_total.
double bbm_bound();

}  // namespace shellconf::information
