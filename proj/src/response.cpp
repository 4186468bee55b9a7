#include "shellconf/response.hpp"

#include <cmath>

namespace shellconf::response {

using transitions::StateLabel;

MultipoleResponse polarizability_from_spectra(int k, const StateLabel& initial,
                                              const std::map<int, const Spectrum*>& spectra) {
    if (k < 1 || k > 4) throw std::invalid_argument("polarizability: k must be 1..4");
    const auto it0 = spectra.find(initial.ell);
    if (it0 == spectra.end() || initial.state_index >= int(it0->second->size()))
        throw std::invalid_argument("polarizability: initial state not found in spectrum");
    const Spectrum& base = *it0->second;
    const RadialSolution& init = base[initial.state_index];

    MultipoleResponse out;
    out.k = k;
    out.state = initial;
    out.truncation_radius = init.grid->r_max();

    for (int lp : transitions::selection_final_ells(k, initial.ell)) {
        const auto it = spectra.find(lp);
        if (it == spectra.end())
            throw std::invalid_argument("polarizability: missing spectrum for ell' = " +
                                        std::to_string(lp));
        double channel = 0.0;
        for (const auto& fin : it->second->solutions) {
            const double de = fin.energy - init.energy;
            if (std::fabs(de) < degeneracy_floor) {
                ++out.n_excluded;
                continue;
            }
            const auto rec = transitions::oscillator_strength(k, init, fin);
            channel += rec.f_value / (de * de);
            ++out.n_pseudostates_used;
        }
        out.per_channel[lp] = channel;
        out.total += channel;
    }
    return out;
}

MultipoleResponse polarizability(int k, const StateLabel& initial,
                                 const ConfinementGeometry& geometry, const PotentialModel& model,
                                 const GridSpec& spec) {
    auto grid = std::make_shared<const RadialGrid>(geometry, spec);
    const int n_states = grid->n_interior() - 2;
    std::map<int, Spectrum> store;
    std::map<int, const Spectrum*> view;
    store.emplace(initial.ell, solve_radial(grid, model, initial.ell, n_states));
    for (int lp : transitions::selection_final_ells(k, initial.ell))
        if (!store.count(lp)) store.emplace(lp, solve_radial(grid, model, lp, n_states));
    for (const auto& [l, sp] : store) view[l] = &sp;
    return polarizability_from_spectra(k, initial, view);
}

std::vector<Channel> channel_decomposition(int k, int ell) {
    std::vector<Channel> out;
    for (int lp : transitions::selection_final_ells(k, ell)) {
        const int d = lp - ell;
        std::string suffix = d == 0 ? "l" : (d > 0 ? "l+" + std::to_string(d)
                                                   : "l-" + std::to_string(-d));
        out.push_back({lp, "alpha(" + std::to_string(k) + ")_{n l}(" + suffix + ")"});
    }
    return out;
}

std::vector<ScanRow> negative_polarizability_scan(const std::vector<StateLabel>& states,
                                                  const std::vector<ConfinementGeometry>& geometries,
                                                  const PotentialModel& model, const GridSpec& spec) {
    std::vector<ScanRow> rows(states.size() * geometries.size());
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::size_t gi = 0; gi < geometries.size(); ++gi) {
        for (std::size_t si = 0; si < states.size(); ++si) {
            const auto resp = polarizability(1, states[si], geometries[gi], model, spec);
            rows[gi * states.size() + si] =
                ScanRow{geometries[gi], states[si], resp.total, resp.total < 0.0};
        }
    }
    return rows;
}

}  // namespace shellconf::response
