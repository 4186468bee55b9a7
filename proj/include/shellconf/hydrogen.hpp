#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

namespace shellconf::hydrogen {

using Rational = boost::multiprecision::cpp_rational;

struct HydrogenState {
    int n = 1;
    int ell = 0;
    double z = 1.0;

    void validate() const;
};

/// -Z^2 / (2 n^2)
double energy(const HydrogenState& s);

/// Normalized R_{n ell}(r); int R^2 r^2 dr = 1.
double radial_wavefunction(const HydrogenState& s, double r);

/// The n - ell - 1 positive roots of the Laguerre factor of R_{n ell},
/// by sign-bracketed bisection on the exact polynomial, ascending.
std::vector<double> radial_nodes(const HydrogenState& s);

/// <r^power>, power >= -2, via the Kramers-Pasternack recursion.
double expectation_r_power(const HydrogenState& s, int power);

// --- closed-form multipole oscillator strengths and bound polarizabilities ---
//
// One channel per printed formula: f^{(k)} from a fixed initial orbital to the
// n-indexed family with a fixed final ell, and the matching bound-state
// polarizability series.

struct AnalyticChannel {
    int k = 1;          // multipole order, 1..4
    int n_initial = 1;  // 1s, 2p, 3d, 4f or 5g
    int ell_initial = 0;
    int ell_final = 0;

    std::string label() const;  // e.g. "f1 1s->np"
    bool operator==(const AnalyticChannel&) const = default;
};

/// The fourteen printed channels, in appendix order.
const std::vector<AnalyticChannel>& analytic_channels();

/// First n carried by the printed polarizability series for this channel.
int first_series_n(const AnalyticChannel& ch);

/// f^{(k)} exactly as printed, evaluated in exact rational arithmetic at
/// Z = 1. Throws std::invalid_argument for the excluded final n (the
/// initial orbital's own n) and for unprintable channels.
Rational analytic_f_rational(const AnalyticChannel& ch, int n_final);

/// Printed formula value including its explicit Z power (Z^-(4k+3)).
double analytic_f(const AnalyticChannel& ch, int n_final, double z = 1.0);

/// Partial sum of the printed polarizability series up to j = n_max
/// (bound-state contribution only); empty sum below the first allowed term.
/// Carries the printed Z^-(4k+5).
double analytic_alpha_bound(const AnalyticChannel& ch, int n_max, double z = 1.0);

// --- errata bookkeeping -----------------------------------------------------
//
// Each printed formula is transcribed verbatim and validated against the
// numeric solver; a channel whose worst relative deviation exceeds the flag
// threshold lands in the report and the numeric route is authoritative for it.

struct ErrataEntry {
    AnalyticChannel channel;
    int worst_n = 0;
    double printed = 0.0;
    double numeric = 0.0;
    double rel_diff = 0.0;
};

struct ErrataReport {
    std::vector<ErrataEntry> entries;
    double flag_threshold = 1e-4;

    bool flagged(const AnalyticChannel& ch) const;
};

/// Compare every printed f-formula against `numeric_f(channel, n_final)` for
/// all final n <= n_max (skipping the excluded n); deviations beyond
/// flag_threshold are recorded.
ErrataReport validate_f_formulas(
    const std::function<double(const AnalyticChannel&, int)>& numeric_f, int n_max,
    double flag_threshold = 1e-4);

}  // namespace shellconf::hydrogen
