#include "shellconf/grid.hpp"

#include <algorithm>
#include <cmath>

namespace shellconf {

void GridSpec::validate() const {
    if (n_points < 16) throw std::invalid_argument("grid: n_points must be >= 16");
    if (!(map_scale > 0.0)) throw std::invalid_argument("grid: map_scale must be > 0");
    if (!(r_max_truncation > 0.0)) throw std::invalid_argument("grid: r_max_truncation must be > 0");
}

namespace {

// P_N(x) and P_N'(x) by the three-term recurrence.
void legendre_pair(int N, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (N == 0) { p = 1.0; dp = 0.0; return; }
    for (int k = 2; k <= N; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = N * (x * p1 - p0) / (x * x - 1.0);
}

// Lobatto nodes = {-1} U {roots of P_N'} U {+1}, plus P_N at the nodes.
void lobatto_nodes(int N, std::vector<double>& x, std::vector<double>& pn) {
    x.assign(N + 1, 0.0);
    pn.assign(N + 1, 0.0);
    x[0] = -1.0;
    x[N] = 1.0;
    pn[0] = (N % 2 == 0) ? 1.0 : -1.0;
    pn[N] = 1.0;
    for (int j = 1; j < N; ++j) {
        // Chebyshev-Lobatto start, then Newton on P_N'.
        double xi = -std::cos(M_PI * j / N);
        for (int it = 0; it < 100; ++it) {
            double p, dp;
            legendre_pair(N, xi, p, dp);
            // d/dx P_N' from the Legendre ODE: (1-x^2) P'' = 2x P' - N(N+1) P
            const double ddp = (2.0 * xi * dp - N * (N + 1.0) * p) / (1.0 - xi * xi);
            const double step = dp / ddp;
            xi -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        double p, dp;
        legendre_pair(N, xi, p, dp);
        x[j] = xi;
        pn[j] = p;
    }
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < n / 2 + n % 2; ++i) {
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(n, xi, p, dp);
            const double step = p / dp;
            xi -= step;
            if (std::fabs(step) < 1e-15) break;
        }
        legendre_pair(n, xi, p, dp);
        x[i] = -xi;
        x[n - 1 - i] = xi;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
}

RadialGrid::RadialGrid(const ConfinementGeometry& g, const GridSpec& s) : geom_(g), spec_(s) {
    g.validate();
    s.validate();
    const int N = s.n_points + 1;  // Lobatto order; N+1 nodes, n_points interior

    std::vector<double> pn;
    lobatto_nodes(N, x_, pn);

    std::vector<double> w_lob(N + 1);
    for (int j = 0; j <= N; ++j) w_lob[j] = 2.0 / (N * (N + 1.0) * pn[j] * pn[j]);

    // barycentric weights of the full Lobatto set: 1/q'(x_j) = -1/(N(N+1) P_N(x_j))
    bary_.resize(N + 1);
    for (int j = 0; j <= N; ++j) bary_[j] = 1.0 / pn[j];

    r_min_ = g.r_inner;
    fp_.resize(N + 1);
    std::vector<double> r_all(N + 1);
    if (g.bounded()) {
        algebraic_ = false;
        r_max_ = *g.r_outer;
        if (r_max_ - r_min_ < 1e-8)
            throw std::invalid_argument("grid: degenerate domain, r_outer - r_inner < 1e-8");
        const double half = 0.5 * (r_max_ - r_min_);
        for (int j = 0; j <= N; ++j) {
            r_all[j] = r_min_ + half * (1.0 + x_[j]);
            fp_[j] = half;
        }
    } else {
        algebraic_ = true;
        r_max_ = s.r_max_truncation;
        if (r_max_ - r_min_ < 1e-8)
            throw std::invalid_argument("grid: truncation radius must exceed r_inner");
        const double L = s.map_scale;
        beta_ = 2.0 * L / (r_max_ - r_min_);
        for (int j = 0; j <= N; ++j) {
            const double den = 1.0 - x_[j] + beta_;
            r_all[j] = r_min_ + L * (1.0 + x_[j]) / den;
            fp_[j] = L * (2.0 + beta_) / (den * den);
        }
        r_all[N] = r_max_;  // exact by construction of beta
    }

    radii_.assign(r_all.begin() + 1, r_all.end() - 1);

    // eigen-metric weights: Lobatto rule restricted to interior nodes
    w_eigen_.resize(s.n_points);
    for (int j = 1; j < N; ++j) w_eigen_[j - 1] = w_lob[j] * fp_[j];

    // smooth-function weights: interpolatory rule on the interior nodes.
    // Interior-set barycentric weights are (1 - x^2)/P_N(x).
    {
        const int n = s.n_points;
        std::vector<double> lam(n);
        for (int j = 0; j < n; ++j) lam[j] = (1.0 - x_[j + 1] * x_[j + 1]) / pn[j + 1];
        // Gauss rule of matching parity so no quadrature node coincides with x=0
        int ng = n + 8;
        if ((n % 2) != (ng % 2)) ++ng;
        std::vector<double> xg, wg;
        gauss_legendre(ng, xg, wg);
        std::vector<double> den(ng, 0.0);
        Matrix card(ng, n);
        for (int q = 0; q < ng; ++q) {
            for (int j = 0; j < n; ++j) {
                const double d = xg[q] - x_[j + 1];
                card(q, j) = lam[j] / d;
                den[q] += card(q, j);
            }
        }
        w_smooth_.assign(n, 0.0);
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int q = 0; q < ng; ++q) acc += wg[q] * card(q, j) / den[q];
            w_smooth_[j] = acc * fp_[j + 1];
        }
    }

    // differentiation matrix rows needed: all rows k (including endpoints),
    // interior columns j; assemble kinetic = (1/2) M^{-1/2} D^T diag(w/f') D M^{-1/2}
    {
        const int n = s.n_points;
        Matrix D(N + 1, n);
        for (int k = 0; k <= N; ++k) {
            for (int j = 1; j < N; ++j) {
                if (k == j) {
                    D(k, j - 1) = 0.0;  // interior diagonal entries vanish on Lobatto grids
                } else {
                    D(k, j - 1) = (pn[k] / pn[j]) / (x_[k] - x_[j]);
                }
            }
        }
        dwall_inner_.resize(n);
        dwall_outer_.resize(n);
        for (int j = 0; j < n; ++j) {
            dwall_inner_[j] = D(0, j) / fp_[0];
            dwall_outer_[j] = D(N, j) / fp_[N];
        }
        std::vector<double> wf(N + 1);
        for (int k = 0; k <= N; ++k) wf[k] = w_lob[k] / fp_[k];
        kinetic_ = Matrix(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double acc = 0.0;
                for (int k = 0; k <= N; ++k) acc += wf[k] * D(k, i) * D(k, j);
                kinetic_(i, j) = kinetic_(j, i) = 0.5 * acc;
            }
        }
        for (int i = 0; i < n; ++i) {
            const double si = 1.0 / std::sqrt(w_eigen_[i]);
            for (int j = 0; j < n; ++j) kinetic_(i, j) *= si;
        }
        for (int j = 0; j < n; ++j) {
            const double sj = 1.0 / std::sqrt(w_eigen_[j]);
            for (int i = 0; i < n; ++i) kinetic_(i, j) *= sj;
        }
    }
}

double RadialGrid::x_of_r(double r) const {
    if (!algebraic_) return -1.0 + 2.0 * (r - r_min_) / (r_max_ - r_min_);
    const double t = r - r_min_;
    return (t * (1.0 + beta_) - spec_.map_scale) / (t + spec_.map_scale);
}

double RadialGrid::interpolate(std::span<const double> u, double r) const {
    if (int(u.size()) != n_interior()) throw std::invalid_argument("interpolate: size mismatch");
    const double x = x_of_r(r);
    const int N = int(x_.size()) - 1;
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= N; ++j) {
        const double d = x - x_[j];
        if (std::fabs(d) < 1e-300) return (j == 0 || j == N) ? 0.0 : u[j - 1];
        const double t = bary_[j] / d;
        den += t;
        if (j > 0 && j < N) num += t * u[j - 1];
    }
    return num / den;
}

double RadialGrid::derivative_at_inner_wall(std::span<const double> u) const {
    return quadrature_integral(u, dwall_inner_);
}

double RadialGrid::derivative_at_outer_wall(std::span<const double> u) const {
    return quadrature_integral(u, dwall_outer_);
}

bool RadialGrid::same_points(const RadialGrid& other) const {
    return radii_ == other.radii_;
}

double quadrature_integral(std::span<const double> f, std::span<const double> w) {
    if (f.size() != w.size())
        throw std::invalid_argument("quadrature_integral: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += w[i] * f[i];
    return acc;
}

}  // namespace shellconf
