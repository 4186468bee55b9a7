#include "shellconf/information.hpp"

#include <cmath>

#include "shellconf/grid.hpp"

namespace shellconf::information {

namespace {

// spherical Bessel j_l; explicit trig forms for l <= 2 away from the origin
// (they dominate the transform cost), series/stdlib elsewhere
double sph_j(int l, double x) {
    if (x < 0.5 * (l + 1) || (l > 2 && x < double(l))) return std::sph_bessel(unsigned(l), x);
    const double sx = std::sin(x), cx = std::cos(x);
    switch (l) {
        case 0: return sx / x;
        case 1: return sx / (x * x) - cx / x;
        case 2: return (3.0 / (x * x * x) - 1.0 / x) * sx - 3.0 * cx / (x * x);
        default: return std::sph_bessel(unsigned(l), x);
    }
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Legendre P_l(t) and the normalized |Theta_{l m}|^2 for m >= 0
double theta_sq(int l, int m, double t) {
    if (m == 0) {
        double p0 = 1.0, p1 = t;
        if (l == 0) return 0.5;
        for (int k = 2; k <= l; ++k) {
            const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return (l + 0.5) * p1 * p1;
    }
    const double pm = std::assoc_legendre(unsigned(l), unsigned(m), t);
    const double norm = (l + 0.5) * std::exp(std::lgamma(l - m + 1.0) - std::lgamma(l + m + 1.0));
    return norm * pm * pm;
}

struct AngularParts {
    double s;  // -int |Y|^2 ln |Y|^2 dOmega
    double e;  // int |Y|^4 dOmega
};

AngularParts angular_parts(int l, int m) {
    if (m < 0) m = -m;
    if (m > l) throw std::invalid_argument("angular parts: need |m| <= l");
    if (l == 0) return {std::log(4.0 * M_PI), 1.0 / (4.0 * M_PI)};
    static thread_local std::vector<double> tg, wg;
    if (tg.empty()) gauss_legendre(512, tg, wg);
    double s = 0.0, e = 0.0;
    for (std::size_t i = 0; i < tg.size(); ++i) {
        const double chi = theta_sq(l, m, tg[i]);
        s -= wg[i] * xlogx(chi);
        e += wg[i] * chi * chi;
    }
    return {s + std::log(2.0 * M_PI), e / (2.0 * M_PI)};
}

}  // namespace

MomentumWavefunction momentum_transform(const RadialSolution& s, const PGridSpec& pg) {
    if (!(pg.p_max > 0.0) || pg.n_points < 16)
        throw std::invalid_argument("momentum grid: need p_max > 0 and n_points >= 16");

    // support of u: full domain for bounded geometries, otherwise cut the
    // negligible tail so the fine quadrature does not chase zeros
    const RadialGrid& g = *s.grid;
    const double a = g.r_min();
    double b = g.r_max();
    if (!s.geometry.bounded()) {
        // neglected-tail error in psi(p) is ~ |u(cut)| * r_cut / kappa, well
        // under 1e-7 at a 1e-10 relative amplitude cut
        double umax = 0.0;
        for (double v : s.u) umax = std::max(umax, std::fabs(v));
        const auto& r = g.radii();
        double last = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (std::fabs(s.u[i]) > 1e-10 * umax) last = r[i];
        b = std::min(b, last * 1.3 + 1.0);
    }

    // p-independent fine composite rule resolving j_l(p_max r) oscillations
    const int n_panels = std::max(24, int(std::ceil(pg.p_max * (b - a) / 6.0)));
    static thread_local std::vector<double> x16, w16;
    if (x16.empty()) gauss_legendre(16, x16, w16);
    std::vector<double> rf, wf;
    rf.reserve(16 * n_panels);
    wf.reserve(16 * n_panels);
    for (int i = 0; i < n_panels; ++i) {
        const double lo = a + (b - a) * i / n_panels;
        const double hi = a + (b - a) * (i + 1.0) / n_panels;
        const double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
        for (int q = 0; q < 16; ++q) {
            rf.push_back(c + h * x16[q]);
            wf.push_back(h * w16[q]);
        }
    }
    std::vector<double> uf(rf.size());
    for (std::size_t i = 0; i < rf.size(); ++i) uf[i] = wf[i] * g.interpolate(s.u, rf[i]) * rf[i];

    MomentumWavefunction mw;
    mw.ell = s.ell;
    std::vector<double> xp, wp;
    gauss_legendre(pg.n_points, xp, wp);
    mw.momenta.resize(pg.n_points);
    mw.weights.resize(pg.n_points);
    mw.values.resize(pg.n_points);
    const double c = std::sqrt(2.0 / M_PI);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < pg.n_points; ++i) {
        const double p = 0.5 * pg.p_max * (xp[i] + 1.0);
        double acc = 0.0;
        for (std::size_t q = 0; q < rf.size(); ++q) acc += uf[q] * sph_j(s.ell, p * rf[q]);
        mw.momenta[i] = p;
        mw.weights[i] = 0.5 * pg.p_max * wp[i];
        mw.values[i] = c * acc;
    }
    double nrm = 0.0;
    for (int i = 0; i < pg.n_points; ++i)
        nrm += mw.weights[i] * mw.values[i] * mw.values[i] * mw.momenta[i] * mw.momenta[i];
    mw.captured_norm = nrm;
    if (nrm < 1.0 - 1e-5)
        throw std::runtime_error(
            "momentum_transform: grid captures only " + std::to_string(nrm) +
            " of the norm; increase p_max");
    return mw;
}

EntropyParts shannon_entropy_position(const RadialSolution& s, int m) {
    const auto& r = s.radii();
    const auto& w = s.weights();
    double sr = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double rho = (s.u[i] / r[i]) * (s.u[i] / r[i]);
        sr -= w[i] * xlogx(rho) * r[i] * r[i];
    }
    const auto ang = angular_parts(s.ell, m);
    return {sr, ang.s, sr + ang.s};
}

EntropyParts shannon_entropy_momentum(const MomentumWavefunction& mw, int m) {
    double sp = 0.0;
    for (std::size_t i = 0; i < mw.momenta.size(); ++i) {
        const double pi = mw.values[i] * mw.values[i];
        sp -= mw.weights[i] * xlogx(pi) * mw.momenta[i] * mw.momenta[i];
    }
    const auto ang = angular_parts(mw.ell, m);
    return {sp, ang.s, sp + ang.s};
}

EntropyParts onicescu_energy_position(const RadialSolution& s, int m) {
    const auto& r = s.radii();
    const auto& w = s.weights();
    double er = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double rho = (s.u[i] / r[i]) * (s.u[i] / r[i]);
        er += w[i] * rho * rho * r[i] * r[i];
    }
    const auto ang = angular_parts(s.ell, m);
    return {er, ang.e, er * ang.e};
}

EntropyParts onicescu_energy_momentum(const MomentumWavefunction& mw, int m) {
    double ep = 0.0;
    for (std::size_t i = 0; i < mw.momenta.size(); ++i) {
        const double pi = mw.values[i] * mw.values[i];
        ep += mw.weights[i] * pi * pi * mw.momenta[i] * mw.momenta[i];
    }
    const auto ang = angular_parts(mw.ell, m);
    return {ep, ang.e, ep * ang.e};
}

EntropyReport entropy_report(const ConfinementGeometry& geometry, const PotentialModel& model,
                             int ell, int state_index, const GridSpec& spec, const PGridSpec& pg,
                             int m) {
    Spectrum sp = solve_radial(geometry, model, ell, state_index + 1, spec);
    if (state_index >= int(sp.size()))
        throw std::runtime_error("entropy_report: requested state not in spectrum");
    const RadialSolution& s = sp[state_index];
    const MomentumWavefunction mw = momentum_transform(s, pg);

    EntropyReport rep;
    const auto sr = shannon_entropy_position(s, m);
    const auto spm = shannon_entropy_momentum(mw, m);
    const auto er = onicescu_energy_position(s, m);
    const auto ep = onicescu_energy_momentum(mw, m);
    rep.s_r_full = sr.full;
    rep.s_p_full = spm.full;
    rep.s_total = sr.full + spm.full;
    rep.e_r_full = er.full;
    rep.e_p_full = ep.full;
    rep.e_total = er.full * ep.full;
    rep.angular_s = sr.angular;
    rep.angular_e = er.angular;
    rep.momentum_norm = mw.captured_norm;
    return rep;
}

double bbm_bound() { return 3.0 * (1.0 + std::log(M_PI)); }

}  // namespace shellconf::information
