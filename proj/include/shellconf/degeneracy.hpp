#pragma once

#include <map>
#include <optional>
#include <vector>

#include "shellconf/solver.hpp"

namespace shellconf::degeneracy {

/// One verified incidental-degeneracy entry: a confined state whose energy
/// matches a free-state level because the walls sit on that state's nodes.
struct AtlasRow {
    int state_index = 0;  // confined state: interior node count
    int ell = 0;
    ConfinementGeometry geometry;
    double energy = 0.0;
    int parent_n = 0;  // free state supplying the nodes
    int parent_ell = 0;
    Regime regime = Regime::FHA;
    std::optional<double> alpha1;     // filled on request
    std::optional<double> entropy_r;  // position-space Shannon entropy (full)
};

/// n(n+1)(n+2)/6 degenerate states share a given free level n.
long count_total(int n);

/// Per-regime split of count_total(n).
std::map<Regime, long> count_by_category(int n);

/// All shells whose walls are drawn from {0, node_1, ..., node_m, unbounded},
/// ordered by span then inner edge (the table layout: node-less states first).
std::vector<ConfinementGeometry> node_geometries(const std::vector<double>& parent_nodes);

/// Interior nodes of the free (n, ell) state of `model`, by sign-change
/// bracketing on the solved u(r) plus interpolated bisection. Throws if the
/// state is not bound.
std::vector<double> find_nodes_numeric(const PotentialModel& model, int n, int ell,
                                       const GridSpec& spec);

struct AtlasOptions {
    bool with_alpha1 = false;
    bool with_entropy = false;
    double energy_tolerance = 1e-6;
};

/// The full degeneracy atlas for level n: Coulomb potentials enumerate every
/// ell <= n-1 (the free level is ell-degenerate); screened potentials carry
/// no accidental degeneracy, so their atlases follow the free s states only.
/// Every row is verified against the parent energy before being emitted.
std::vector<AtlasRow> enumerate_atlas(int n, const PotentialModel& model, const GridSpec& spec,
                                      const AtlasOptions& opts = {});

}  // namespace shellconf::degeneracy
