#pragma once

#include <map>
#include <vector>

#include "shellconf/transitions.hpp"

namespace shellconf::response {

/// Multipole polarizability alpha^(k) of one state, summed over the full
/// box-discretized pseudospectrum (bound + discretized continuum).
struct MultipoleResponse {
    int k = 1;
    transitions::StateLabel state;
    std::map<int, double> per_channel;  // ell' -> contribution, bohr^{2k+2}
    double total = 0.0;
    int n_pseudostates_used = 0;
    int n_excluded = 0;                 // terms under the degeneracy floor
    double truncation_radius = 0.0;     // effective wall for unbounded domains
};

/// Pseudostate pairs closer in energy than this never enter the 1/dE^2 sum
/// (guards the exactly degenerate FHA pairs).
inline constexpr double degeneracy_floor = 1e-9;

MultipoleResponse polarizability(int k, const transitions::StateLabel& initial,
                                 const ConfinementGeometry& geometry, const PotentialModel& model,
                                 const GridSpec& spec);

/// Like polarizability(), but reuses pre-solved spectra (keyed by ell; must
/// include the initial state's ell and every allowed ell').
MultipoleResponse polarizability_from_spectra(int k, const transitions::StateLabel& initial,
                                              const std::map<int, const Spectrum*>& spectra);

struct Channel {
    int ell_final;
    std::string label;  // appendix-style, e.g. "alpha(1)_{n l}(l+1)"
};

/// The allowed ell' channels whose contributions sum to alpha^(k).
std::vector<Channel> channel_decomposition(int k, int ell);

struct ScanRow {
    ConfinementGeometry geometry;
    transitions::StateLabel state;
    double alpha = 0.0;
    bool negative = false;
};

/// alpha^(1) across a geometry list, flagging sign changes.
std::vector<ScanRow> negative_polarizability_scan(const std::vector<transitions::StateLabel>& states,
                                                  const std::vector<ConfinementGeometry>& geometries,
                                                  const PotentialModel& model, const GridSpec& spec);

}  // namespace shellconf::response
