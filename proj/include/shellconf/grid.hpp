#pragma once

#include <memory>
#include <span>
#include <vector>

#include "shellconf/linalg.hpp"
#include "shellconf/potentials.hpp"

namespace shellconf {

struct GridSpec {
    int n_points = 200;             // interior collocation points
    double map_scale = 25.0;        // algebraic-map length scale (unbounded domains only)
    double r_max_truncation = 200.0;  // numerical wall standing in for infinity

    void validate() const;
};

/// Gauss-Legendre nodes/weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Collocation grid for one geometry: interior Legendre-Lobatto points mapped
/// onto [r_inner, r_outer] (linear map) or [r_inner, r_max_truncation] via the
/// algebraic map r = r_inner + L(1+x)/(1-x+beta), beta = 2L/(r_max - r_inner).
///
/// Two weight sets coexist on the interior nodes:
///   weights_smooth — interpolatory rule, integrates plain smooth functions of
///                    r exactly up to the interpolation degree (sums to the
///                    domain length);
///   weights_eigen  — Lobatto rule restricted to interior nodes; this is the
///                    metric of the discrete Hamiltonian and must be used for
///                    all wavefunction inner products (endpoint terms vanish
///                    for Dirichlet integrands, so the restriction is exact).
/// Completeness sums (sum rules, polarizabilities) telescope only in the
/// eigen metric.
class RadialGrid {
  public:
    RadialGrid(const ConfinementGeometry& g, const GridSpec& s);

    const ConfinementGeometry& geometry() const { return geom_; }
    const GridSpec& spec() const { return spec_; }
    int n_interior() const { return int(radii_.size()); }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }

    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& weights_smooth() const { return w_smooth_; }
    const std::vector<double>& weights_eigen() const { return w_eigen_; }

    /// Symmetric kinetic-energy block in the eigen metric,
    /// T = (1/2) M^{-1/2} D^T diag(w/f') D M^{-1/2} on interior nodes.
    const Matrix& kinetic() const { return kinetic_; }

    /// Interpolate Dirichlet samples (values on interior radii, zero at the
    /// walls) to an arbitrary radius inside the domain.
    double interpolate(std::span<const double> u, double r) const;

    /// Interpolant derivative du/dr at the domain walls.
    double derivative_at_inner_wall(std::span<const double> u) const;
    double derivative_at_outer_wall(std::span<const double> u) const;

    bool same_points(const RadialGrid& other) const;

  private:
    double x_of_r(double r) const;

    ConfinementGeometry geom_;
    GridSpec spec_;
    double r_min_ = 0.0, r_max_ = 0.0;
    bool algebraic_ = false;
    double beta_ = 0.0;

    std::vector<double> x_;        // all Lobatto nodes incl. endpoints
    std::vector<double> bary_;     // barycentric weights for the full node set
    std::vector<double> radii_;    // interior r_j
    std::vector<double> fp_;       // dr/dx at all nodes
    std::vector<double> w_smooth_;
    std::vector<double> w_eigen_;
    std::vector<double> dwall_inner_, dwall_outer_;  // d/dr rows at the walls
    Matrix kinetic_;
};

/// Plain weighted sum; throws on length mismatch.
double quadrature_integral(std::span<const double> f, std::span<const double> w);

}  // namespace shellconf
