#include "shellconf/hydrogen.hpp"

#include <cmath>
#include <stdexcept>

namespace shellconf::hydrogen {

using boost::multiprecision::cpp_int;

void HydrogenState::validate() const {
    if (n < 1) throw std::invalid_argument("hydrogen: n must be >= 1");
    if (ell < 0 || ell > n - 1) throw std::invalid_argument("hydrogen: need 0 <= ell <= n-1");
    if (!(z > 0.0)) throw std::invalid_argument("hydrogen: Z must be positive");
}

double energy(const HydrogenState& s) {
    s.validate();
    return -0.5 * s.z * s.z / (double(s.n) * s.n);
}

namespace {

// generalized Laguerre L_m^a(x) by upward recurrence
double laguerre(int m, int a, double x) {
    if (m == 0) return 1.0;
    double l0 = 1.0, l1 = 1.0 + a - x;
    for (int i = 1; i < m; ++i) {
        const double l2 = ((2 * i + 1 + a - x) * l1 - (i + a) * l0) / (i + 1);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

}  // namespace

double radial_wavefunction(const HydrogenState& s, double r) {
    s.validate();
    if (r < 0.0) throw std::domain_error("hydrogen: r must be >= 0");
    const int n = s.n, l = s.ell;
    const double rho = 2.0 * s.z * r / n;
    const double lognorm =
        0.5 * (3.0 * std::log(2.0 * s.z / n) + std::lgamma(n - l) - std::log(2.0 * n) -
               std::lgamma(n + l + 1.0));
    double amp = std::exp(lognorm - 0.5 * rho);
    for (int i = 0; i < l; ++i) amp *= rho;
    return amp * laguerre(n - l - 1, 2 * l + 1, rho);
}

std::vector<double> radial_nodes(const HydrogenState& s) {
    s.validate();
    const int m = s.n - s.ell - 1;
    std::vector<double> out;
    if (m == 0) return out;
    const int a = 2 * s.ell + 1;
    auto poly = [&](double rho) { return laguerre(m, a, rho); };
    // all roots of L_m^a lie below a + 2m + 2 sqrt(m(m+a)) + 2
    const double hi = a + 2.0 * m + 2.0 * std::sqrt(double(m) * (m + a)) + 2.0;
    const int scan = 200 * m;
    double x0 = hi * 1e-9, f0 = poly(x0);
    for (int i = 1; i <= scan; ++i) {
        const double x1 = hi * i / scan;
        const double f1 = poly(x1);
        if (f0 == 0.0) out.push_back(x0);
        else if (f0 * f1 < 0.0) {
            double lo = x0, up = x1, flo = f0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + up);
                const double fm = poly(mid);
                if (fm == 0.0) { lo = up = mid; break; }
                if (flo * fm < 0.0) up = mid;
                else { lo = mid; flo = fm; }
                if (up - lo < 1e-14 * up) break;
            }
            out.push_back(0.5 * (lo + up));
        }
        x0 = x1;
        f0 = f1;
    }
    if (int(out.size()) != m)
        throw std::runtime_error("hydrogen: node scan found wrong root count");
    for (double& rho : out) rho *= s.n / (2.0 * s.z);  // rho -> r
    return out;
}

double expectation_r_power(const HydrogenState& s, int power) {
    s.validate();
    if (power < -2) throw std::invalid_argument("expectation_r_power: power must be >= -2");
    const double n = s.n, l = s.ell;
    if (power == -2) return s.z * s.z / (n * n * n * (l + 0.5));
    // Kramers-Pasternack at Z=1, scaled by Z^-power afterwards
    double am1 = 1.0 / (n * n);  // <r^-1>
    double a0 = 1.0;
    if (power == -1) return am1 * s.z;
    if (power == 0) return 1.0;
    double prev2 = am1, prev1 = a0, cur = 0.0;
    for (int sp = 1; sp <= power; ++sp) {
        cur = ((2.0 * sp + 1.0) * prev1 -
               (sp / 4.0) * ((2.0 * l + 1.0) * (2.0 * l + 1.0) - double(sp) * sp) * prev2) *
              n * n / (sp + 1.0);
        prev2 = prev1;
        prev1 = cur;
    }
    return cur / std::pow(s.z, power);
}

// ---------------------------------------------------------------------------

namespace {

struct ChannelRow {
    AnalyticChannel ch;
    int series_first;  // printed lower limit of the alpha sum
};

const std::vector<ChannelRow>& rows() {
    static const std::vector<ChannelRow> t = {
        {{1, 1, 0, 1}, 2},  // f1 1s->np
        {{1, 2, 1, 0}, 1},  // f1 2p->ns
        {{2, 1, 0, 2}, 3},  // f2 1s->nd
        {{2, 2, 1, 1}, 3},  // f2 2p->np
        {{2, 3, 2, 0}, 1},  // f2 3d->ns
        {{3, 1, 0, 3}, 4},  // f3 1s->nf
        {{3, 2, 1, 2}, 3},  // f3 2p->nd
        {{3, 3, 2, 1}, 1},  // f3 3d->np
        {{3, 4, 3, 0}, 2},  // f3 4f->ns
        {{4, 1, 0, 4}, 5},  // f4 1s->ng
        {{4, 2, 1, 3}, 4},  // f4 2p->nf
        {{4, 3, 2, 2}, 3},  // f4 3d->nd
        {{4, 4, 3, 1}, 2},  // f4 4f->np
        {{4, 5, 4, 0}, 1},  // f4 5g->ns
    };
    return t;
}

const ChannelRow& find_row(const AnalyticChannel& ch) {
    for (const auto& r : rows())
        if (r.ch == ch) return r;
    throw std::invalid_argument("analytic channel has no printed formula: " + ch.label());
}

const char* ell_letter(int l) {
    static const char* letters[] = {"s", "p", "d", "f", "g", "h"};
    return l <= 5 ? letters[l] : "?";
}

// (base)^expo as an exact rational, expo possibly negative
Rational rpow(long base, long expo) {
    if (base == 0 && expo <= 0) throw std::domain_error("rpow: 0 to nonpositive power");
    cpp_int b = base < 0 ? -base : base;
    cpp_int p = 1;
    for (long i = 0; i < std::labs(expo); ++i) p *= b;
    Rational v = (expo >= 0) ? Rational(p) : Rational(1, p);
    if (base < 0 && (expo % 2 != 0)) v = -v;
    return v;
}

Rational poly5g(long n) {  // printed with +1743750 in the f-formula
    const cpp_int n2 = cpp_int(n) * n;
    const cpp_int v = 187 * n2 * n2 * n2 - 9350 * n2 * n2 + 204625 * n2 + 1743750;
    return Rational(v);
}

}  // namespace

std::string AnalyticChannel::label() const {
    return "f" + std::to_string(k) + " " + std::to_string(n_initial) + ell_letter(ell_initial) +
           "->n" + ell_letter(ell_final);
}

const std::vector<AnalyticChannel>& analytic_channels() {
    static const std::vector<AnalyticChannel> t = [] {
        std::vector<AnalyticChannel> v;
        for (const auto& r : rows()) v.push_back(r.ch);
        return v;
    }();
    return t;
}

int first_series_n(const AnalyticChannel& ch) { return find_row(ch).series_first; }

Rational analytic_f_rational(const AnalyticChannel& ch, int nf) {
    find_row(ch);  // validates
    const long n = nf;
    if (nf == ch.n_initial)
        throw std::invalid_argument(ch.label() + ": n_final = " + std::to_string(nf) +
                                    " is excluded");
    if (nf < 1) throw std::invalid_argument("analytic_f: n_final must be >= 1");
    const cpp_int n2 = cpp_int(n) * n;
    const Rational nn(n);

    const int key = ch.k * 100 + ch.n_initial * 10 + ch.ell_final;
    switch (key) {
        case 111:  // f1 1s->np
            return Rational(256, 3) * rpow(n, 5) * rpow(n - 1, 2 * n - 4) / rpow(n + 1, 2 * n + 4);
        case 120:  // f1 2p->ns
            return Rational(8192, 27) * rpow(n, 7) * rpow(n - 2, 2 * n - 5) / rpow(n + 2, 2 * n + 5);
        case 212:  // f2 1s->nd
            return Rational(4096, 5) * rpow(n, 7) * Rational(n2 - 4) * rpow(n - 1, 2 * n - 6) /
                   rpow(n + 1, 2 * n + 6);
        case 221:  // f2 2p->np
            return Rational(cpp_int(1) << 22, 75) * rpow(n, 9) * Rational(n2 - 1) *
                   rpow(n - 2, 2 * n - 7) / rpow(n + 2, 2 * n + 7);
        case 230:  // f2 3d->ns
            return Rational(cpp_int(131072) * 2187, 125) * rpow(n, 13) * Rational((n2 - 6) * (n2 - 6)) *
                   rpow(n - 3, 2 * n - 9) / rpow(n + 3, 2 * n + 9);
        case 313:  // f3 1s->nf
            return Rational(9 * 4096, 7) * rpow(n, 9) * Rational((n2 - 4) * (n2 - 9)) *
                   rpow(n - 1, 2 * n - 8) / rpow(n + 1, 2 * n + 8);
        case 322:  // f3 2p->nd
            return Rational(cpp_int(1) << 27, 49) * rpow(n, 13) *
                   Rational((n2 - 1) * (n2 - 16) * (n2 - 16)) * rpow(n - 2, 2 * n - 10) /
                   rpow(n + 2, 2 * n + 10);
        case 331:  // f3 3d->np
            return Rational((cpp_int(1) << 18) * 1594323, 25 * 49) * rpow(n, 13) *
                   Rational((n2 - 1) * (4 * n2 - 9) * (4 * n2 - 9)) * rpow(n - 3, 2 * n - 12) /
                   rpow(n + 3, 2 * n + 12);
        case 340: {  // f3 4f->ns
            const cpp_int p = 141 * n2 * n2 - 3008 * n2 + 18176;
            return Rational(cpp_int(1) << 34, 245) * rpow(n, 15) * Rational(p * p) *
                   rpow(n - 4, 2 * n - 13) / rpow(n + 4, 2 * n + 13);
        }
        case 414:  // f4 1s->ng
            return Rational(cpp_int(1) << 18, 9) * rpow(n, 11) *
                   Rational((n2 - 16) * (n2 - 9) * (n2 - 4)) * rpow(n - 1, 2 * n - 10) /
                   rpow(n + 1, 2 * n + 10);
        case 423: {  // f4 2p->nf
            const cpp_int p = 7 * n2 + 68;
            return Rational(cpp_int(1) << 33, 243) * rpow(n, 13) *
                   Rational((n2 - 1) * (n2 - 9) * p * p) * rpow(n - 2, 2 * n - 12) /
                   rpow(n + 2, 2 * n + 12);
        }
        case 432: {  // f4 3d->nd
            const cpp_int p = n2 - 21;
            return Rational((cpp_int(1) << 20) * 14348907, 35) * rpow(n, 17) *
                   Rational((n2 - 1) * (n2 - 4) * p * p) * rpow(n - 3, 2 * n - 13) /
                   rpow(n + 3, 2 * n + 13);
        }
        case 441: {  // f4 4f->np
            const cpp_int p = 31 * n2 * n2 - 4768 * n2 + 43776;
            return Rational(cpp_int(1) << 43, 8505) * rpow(n, 17) * Rational((n2 - 1) * p * p) *
                   rpow(n - 4, 2 * n - 15) / rpow(n + 4, 2 * n + 15);
        }
        case 450: {  // f4 5g->ns
            const Rational p = poly5g(n);
            return Rational((cpp_int(1) << 21) * cpp_int(48828125), 7 * 729) * rpow(n, 19) * p * p *
                   rpow(n - 5, 2 * n - 17) / rpow(n + 5, 2 * n + 17);
        }
    }
    throw std::invalid_argument("analytic_f: unhandled channel " + ch.label());
}

double analytic_f(const AnalyticChannel& ch, int nf, double z) {
    const Rational v = analytic_f_rational(ch, nf);
    return v.convert_to<double>() / std::pow(z, 4.0 * ch.k + 3.0);
}

namespace {

// one term of the printed bound-polarizability series, exact rational at Z=1
Rational alpha_term_printed(const AnalyticChannel& ch, long j) {
    const cpp_int j2 = cpp_int(j) * j;
    const int key = ch.k * 100 + ch.n_initial * 10 + ch.ell_final;
    switch (key) {
        case 111:  // alpha1 1s(p), Eq. after the dipole f pair
            return Rational(1024, 3) * rpow(j, 9) * rpow(j - 1, 2 * j - 6) / rpow(j + 1, 2 * j + 6);
        case 120:  // alpha1 2p(s)
            return Rational(cpp_int(1) << 19, 27) * rpow(j, 11) * rpow(j - 2, 2 * j - 7) /
                   rpow(j + 2, 2 * j + 7);
        case 212:  // alpha2 1s(d)
            return Rational(4096, 5) * rpow(j, 11) * Rational(j2 - 4) * rpow(j - 1, 2 * j - 8) /
                   rpow(j + 1, 2 * j + 8);
        case 221:  // alpha2 2p(p)
            return Rational(cpp_int(1) << 28, 75) * rpow(j, 13) * Rational(j2 - 1) *
                   rpow(j - 2, 2 * j - 8) / rpow(j + 2, 2 * j + 8);
        case 230:  // alpha2 3d(s)
            return Rational((cpp_int(1) << 19) * 177147, 125) * rpow(j, 17) *
                   Rational((j2 - 6) * (j2 - 6)) * rpow(j - 3, 2 * j - 11) / rpow(j + 3, 2 * j + 11);
        case 313:  // alpha3 1s(f)
            return Rational(9 * (cpp_int(1) << 14), 7) * rpow(j, 13) *
                   Rational((j2 - 4) * (j2 - 9)) * rpow(j - 1, 2 * j - 10) / rpow(j + 1, 2 * j + 10);
        case 322:  // alpha3 2p(d)
            return Rational(cpp_int(1) << 33, 49) * rpow(j, 17) *
                   Rational((j2 - 1) * (j2 - 16) * (j2 - 16)) * rpow(j - 2, 2 * j - 12) /
                   rpow(j + 2, 2 * j + 12);
        case 331:  // alpha3 3d(p)
            return Rational((cpp_int(1) << 20) * cpp_int(129140163), 25 * 49) * rpow(j, 17) *
                   Rational((j2 - 1) * (4 * j2 - 9) * (4 * j2 - 9)) * rpow(j - 3, 2 * j - 14) /
                   rpow(j + 3, 2 * j + 14);
        case 340: {  // alpha3 4f(s)
            const cpp_int p = 141 * j2 * j2 - 3008 * j2 + 18176;
            return Rational(cpp_int(1) << 44, 245) * rpow(j, 19) * Rational(p * p) *
                   rpow(j - 4, 2 * j - 15) / rpow(j + 4, 2 * j + 15);
        }
        case 414:  // alpha4 1s(g)
            return Rational(cpp_int(1) << 20, 9) * rpow(j, 15) *
                   Rational((j2 - 16) * (j2 - 9) * (j2 - 4)) * rpow(j - 1, 2 * j - 12) /
                   rpow(j + 1, 2 * j + 12);
        case 423: {  // alpha4 2p(f)
            const cpp_int p = 7 * j2 + 68;
            return Rational(cpp_int(1) << 39, 243) * rpow(j, 17) *
                   Rational((j2 - 1) * (j2 - 9) * p * p) * rpow(j - 2, 2 * j - 14) /
                   rpow(j + 2, 2 * j + 14);
        }
        case 432: {  // alpha4 3d(d)
            const cpp_int p = j2 - 21;
            return Rational((cpp_int(1) << 22) * cpp_int(1162261467), 35) * rpow(j, 21) *
                   Rational((j2 - 1) * (j2 - 4) * p * p) * rpow(j - 3, 2 * j - 13) /
                   rpow(j + 3, 2 * j + 13);
        }
        case 441: {  // alpha4 4f(p)
            const cpp_int p = 31 * j2 * j2 - 4768 * j2 + 43776;
            return Rational(cpp_int(1) << 53, 8505) * rpow(j, 13) * Rational(p * p) *
                   rpow(j - 4, 2 * j - 13) / rpow(j + 4, 2 * j + 13);
        }
        case 450: {  // alpha4 5g(s); the polynomial carries -1743750 here
            const cpp_int p = 187 * j2 * j2 * j2 - 9350 * j2 * j2 + 204625 * j2 - 1743750;
            return Rational((cpp_int(1) << 27) * cpp_int("19073486328125"), 7 * 729) * rpow(j, 23) *
                   Rational(p * p) * rpow(j - 5, 2 * j - 19) / rpow(j + 5, 2 * j + 19);
        }
    }
    throw std::invalid_argument("analytic_alpha_bound: unhandled channel " + ch.label());
}

}  // namespace

double analytic_alpha_bound(const AnalyticChannel& ch, int n_max, double z) {
    const ChannelRow& row = find_row(ch);
    double acc = 0.0;
    for (int j = row.series_first; j <= n_max; ++j) {
        if (j == ch.n_initial) continue;
        acc += alpha_term_printed(ch, j).convert_to<double>();
    }
    return acc / std::pow(z, 4.0 * ch.k + 5.0);
}

bool ErrataReport::flagged(const AnalyticChannel& ch) const {
    for (const auto& e : entries)
        if (e.channel == ch) return true;
    return false;
}

ErrataReport validate_f_formulas(const std::function<double(const AnalyticChannel&, int)>& numeric_f,
                                 int n_max, double flag_threshold) {
    ErrataReport rep;
    rep.flag_threshold = flag_threshold;
    for (const auto& ch : analytic_channels()) {
        ErrataEntry worst;
        worst.channel = ch;
        for (int n = std::max(1, ch.ell_final + 1); n <= n_max; ++n) {
            if (n == ch.n_initial) continue;
            const double printed = analytic_f(ch, n);
            const double numeric = numeric_f(ch, n);
            if (printed == 0.0 && std::fabs(numeric) < 1e-12) continue;
            const double rel = std::fabs(printed - numeric) / std::max(std::fabs(numeric), 1e-300);
            if (rel > worst.rel_diff) {
                worst.rel_diff = rel;
                worst.worst_n = n;
                worst.printed = printed;
                worst.numeric = numeric;
            }
        }
        if (worst.rel_diff > flag_threshold) rep.entries.push_back(worst);
    }
    return rep;
}

}  // namespace shellconf::hydrogen
