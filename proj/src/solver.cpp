#include "shellconf/solver.hpp"

#include <algorithm>
#include <cmath>

namespace shellconf {

int RadialSolution::count_nodes() const {
    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::fabs(v));
    const double floor = 1e-8 * umax;
    int nodes = 0;
    double prev = 0.0;
    for (double v : u) {
        if (std::fabs(v) <= floor) continue;
        if (prev != 0.0 && v * prev < 0.0) ++nodes;
        prev = v;
    }
    return nodes;
}

Matrix assemble_hamiltonian(const RadialGrid& grid, const PotentialModel& model, int ell) {
    model.validate();
    if (ell < 0) throw std::invalid_argument("solve: ell must be >= 0");
    Matrix H = grid.kinetic();
    const auto& r = grid.radii();
    const double cf = 0.5 * ell * (ell + 1.0);
    for (int i = 0; i < grid.n_interior(); ++i)
        H(i, i) += evaluate(model, r[i]) + cf / (r[i] * r[i]);
    return H;
}

namespace {

// Rayleigh-Ritz polish of the lowest eigenpairs: re-diagonalizing Y^T H Y in
// the kept subspace scrubs the O(eps ||H|| / gap) mixing between neighboring
// states that the rotation sweeps leave behind. Only worth it for small
// subsets; completeness consumers are insensitive to it.
void rayleigh_ritz_polish(const Matrix& H, SymmetricEigenSolution& eig, int first, int count) {
    const int n = int(H.rows());
    Matrix hy(count, n);
    for (int a = 0; a < count; ++a) {
        const double* y = eig.eigenvectors.row(first + a);
        for (int i = 0; i < n; ++i) {
            long double acc = 0.0L;
            const double* Hi = H.row(i);
            for (int j = 0; j < n; ++j) acc += (long double)Hi[j] * y[j];
            hy(a, i) = double(acc);
        }
    }
    Matrix b(count, count);
    for (int a = 0; a < count; ++a)
        for (int c = a; c < count; ++c) {
            long double acc = 0.0L;
            const double* y = eig.eigenvectors.row(first + c);
            for (int i = 0; i < n; ++i) acc += (long double)hy(a, i) * y[i];
            b(a, c) = b(c, a) = double(acc);
        }
    const auto small = jacobi_eigensolve(b);
    Matrix rotated(count, n);
    for (int a = 0; a < count; ++a) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int c = 0; c < count; ++c)
                acc += small.eigenvectors(a, c) * eig.eigenvectors(first + c, i);
            rotated(a, i) = acc;
        }
    }
    for (int a = 0; a < count; ++a) {
        eig.eigenvalues[first + a] = small.eigenvalues[a];
        std::copy(rotated.row(a), rotated.row(a) + n, eig.eigenvectors.row(first + a));
    }
}

}  // namespace

Spectrum solve_radial(std::shared_ptr<const RadialGrid> grid, const PotentialModel& model,
                      int ell, int n_states) {
    const int n = grid->n_interior();
    if (n_states > n - 2)
        throw std::invalid_argument("solve: n_states must be <= n_points - 2");

    Matrix H = assemble_hamiltonian(*grid, model, ell);
    SymmetricEigenSolution eig = jacobi_eigensolve(H);

    if (n_states <= 48) {
        int first = 0;
        const double spurious = -10.0 * model.z * model.z;
        while (first < n && eig.eigenvalues[first] < spurious) ++first;
        const int count = std::min(n_states + 2, n - first);
        if (count > 1) rayleigh_ritz_polish(H, eig, first, count);
    }

    Spectrum sp;
    sp.grid = grid;
    sp.geometry = grid->geometry();
    sp.model = model;
    sp.ell = ell;

    const auto& we = grid->weights_eigen();
    const double spurious_floor = -10.0 * model.z * model.z;
    int emitted = 0;
    for (int k = 0; k < n && emitted < n_states; ++k) {
        if (eig.eigenvalues[k] < spurious_floor) continue;
        RadialSolution s;
        s.ell = ell;
        s.energy = eig.eigenvalues[k];
        s.grid = grid;
        s.geometry = grid->geometry();
        s.model = model;
        s.u.resize(n);
        const double* y = eig.eigenvectors.row(k);
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) {
            s.u[i] = y[i] / std::sqrt(we[i]);
            nrm += we[i] * s.u[i] * s.u[i];
        }
        const double scale = 1.0 / std::sqrt(nrm);
        for (int i = 0; i < n; ++i) s.u[i] *= scale;
        // fix the overall sign: positive slope at the inner wall
        if (grid->derivative_at_inner_wall(s.u) < 0.0)
            for (double& v : s.u) v = -v;
        s.state_index = emitted;
        sp.solutions.push_back(std::move(s));
        ++emitted;
    }
    return sp;
}

Spectrum solve_radial(const ConfinementGeometry& geometry, const PotentialModel& model, int ell,
                      int n_states, const GridSpec& spec) {
    auto grid = std::make_shared<const RadialGrid>(geometry, spec);
    return solve_radial(std::move(grid), model, ell, n_states);
}

}  // namespace shellconf
