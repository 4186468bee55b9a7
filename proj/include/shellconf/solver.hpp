#pragma once

#include <memory>
#include <vector>

#include "shellconf/grid.hpp"

namespace shellconf {

/// One radial eigenpair in reduced form u(r) = r R(r), normalized so that
/// sum_i weights_i u_i^2 = 1 in the grid's eigen metric.
struct RadialSolution {
    int state_index = 0;  // number of interior radial nodes
    int ell = 0;
    double energy = 0.0;
    std::vector<double> u;
    std::shared_ptr<const RadialGrid> grid;
    ConfinementGeometry geometry;
    PotentialModel model;

    const std::vector<double>& radii() const { return grid->radii(); }
    const std::vector<double>& weights() const { return grid->weights_eigen(); }

    double r_function(double r) const {  // R = u/r, recovered on demand
        return grid->interpolate(u, r) / r;
    }

    /// Strict sign changes of u across interior radii; samples below
    /// 1e-8 * max|u| are treated as numerical zeros and skipped.
    int count_nodes() const;
};

struct Spectrum {
    std::shared_ptr<const RadialGrid> grid;
    ConfinementGeometry geometry;
    PotentialModel model;
    int ell = 0;
    std::vector<RadialSolution> solutions;

    std::size_t size() const { return solutions.size(); }
    const RadialSolution& operator[](std::size_t i) const { return solutions[i]; }
};

/// Build the symmetric discrete Hamiltonian for one (geometry, model, ell).
Matrix assemble_hamiltonian(const RadialGrid& grid, const PotentialModel& model, int ell);

/// Lowest n_states eigenpairs; n_states <= n_points - 2. Eigenvalues below
/// -10 Z^2 are discarded as discretization artifacts (variational bound for
/// every supported potential).
Spectrum solve_radial(const ConfinementGeometry& geometry, const PotentialModel& model, int ell,
                      int n_states, const GridSpec& spec);

/// Same, reusing an existing grid (both states of a transition must live on
/// an identical grid).
Spectrum solve_radial(std::shared_ptr<const RadialGrid> grid, const PotentialModel& model,
                      int ell, int n_states);

}  // namespace shellconf
