#include "shellconf/degeneracy.hpp"

#include <algorithm>
#include <cmath>

#include "shellconf/hydrogen.hpp"
#include "shellconf/information.hpp"
#include "shellconf/response.hpp"

namespace shellconf::degeneracy {

long count_total(int n) {
    if (n < 1) throw std::invalid_argument("count_total: n must be >= 1");
    return long(n) * (n + 1) * (n + 2) / 6;
}

std::map<Regime, long> count_by_category(int n) {
    if (n < 1) throw std::invalid_argument("count_by_category: n must be >= 1");
    const long nl = n;
    return {{Regime::FHA, nl},
            {Regime::CHA, nl * (nl - 1) / 2},
            {Regime::SCHA, nl * (nl - 1) * (nl - 2) / 6},
            {Regime::LCHA, nl * (nl - 1) / 2}};
}

std::vector<ConfinementGeometry> node_geometries(const std::vector<double>& parent_nodes) {
    std::vector<double> edges = parent_nodes;
    std::sort(edges.begin(), edges.end());
    const int m = int(edges.size());
    // edge index 0 = origin, 1..m = nodes, m+1 = unbounded
    std::vector<ConfinementGeometry> out;
    for (int span = 1; span <= m + 1; ++span) {
        for (int i = 0; i + span <= m + 1; ++i) {
            const int j = i + span;
            ConfinementGeometry g;
            g.r_inner = (i == 0) ? 0.0 : edges[i - 1];
            if (j <= m) g.r_outer = edges[j - 1];
            out.push_back(g);
        }
    }
    return out;
}

std::vector<double> find_nodes_numeric(const PotentialModel& model, int n, int ell,
                                       const GridSpec& spec) {
    if (n < 1 || ell < 0 || ell > n - 1)
        throw std::invalid_argument("find_nodes_numeric: invalid (n, ell)");
    const int idx = n - ell - 1;
    Spectrum sp = solve_radial(ConfinementGeometry::free_atom(), model, ell, idx + 1, spec);
    if (int(sp.size()) <= idx || sp[idx].energy >= 0.0)
        throw std::runtime_error("find_nodes_numeric: state (" + std::to_string(n) + "," +
                                 std::to_string(ell) + ") is not bound for this potential");
    const RadialSolution& s = sp[idx];
    const auto& r = s.radii();
    double umax = 0.0;
    for (double v : s.u) umax = std::max(umax, std::fabs(v));
    const double floor = 1e-8 * umax;

    std::vector<double> nodes;
    int prev = -1;
    for (int i = 0; i < int(r.size()); ++i) {
        if (std::fabs(s.u[i]) <= floor) continue;
        if (prev >= 0 && s.u[i] * s.u[prev] < 0.0) {
            double lo = r[prev], hi = r[i];
            double flo = s.u[prev];
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = s.grid->interpolate(s.u, mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if (flo * fm < 0.0) hi = mid;
                else { lo = mid; flo = fm; }
                if (hi - lo < 1e-9) break;
            }
            nodes.push_back(0.5 * (lo + hi));
        }
        prev = i;
    }
    if (int(nodes.size()) != idx)
        throw std::runtime_error("find_nodes_numeric: expected " + std::to_string(idx) +
                                 " nodes, found " + std::to_string(nodes.size()));
    return nodes;
}

std::vector<AtlasRow> enumerate_atlas(int n, const PotentialModel& model, const GridSpec& spec,
                                      const AtlasOptions& opts) {
    if (n < 1) throw std::invalid_argument("enumerate_atlas: n must be >= 1");
    const bool coulomb = model.kind == PotentialKind::Coulomb;

    struct Job {
        int ell;
        ConfinementGeometry geometry;
        int inside_nodes;
        double parent_energy;
        int parent_n, parent_ell;
    };
    std::vector<Job> jobs;
    const std::vector<int> ells = [&] {
        std::vector<int> v;
        if (coulomb)
            for (int l = 0; l < n; ++l) v.push_back(l);
        else
            v.push_back(0);  // screened potentials: s states only (no l-degeneracy)
        return v;
    }();

    for (int ell : ells) {
        std::vector<double> nodes;
        double e_parent;
        if (coulomb) {
            hydrogen::HydrogenState hs{n, ell, model.z};
            nodes = hydrogen::radial_nodes(hs);
            e_parent = hydrogen::energy(hs);
        } else {
            nodes = find_nodes_numeric(model, n, ell, spec);
            Spectrum free_sp =
                solve_radial(ConfinementGeometry::free_atom(), model, ell, n - ell, spec);
            e_parent = free_sp[n - ell - 1].energy;
        }
        for (const auto& g : node_geometries(nodes)) {
            int inside = 0;
            for (double nd : nodes)
                if (nd > g.r_inner && (!g.bounded() || nd < *g.r_outer)) ++inside;
            jobs.push_back({ell, g, inside, e_parent, n, ell});
        }
    }

    std::vector<AtlasRow> rows(jobs.size());
    std::vector<std::string> failures(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const Job& job = jobs[j];
        try {
            Spectrum sp = solve_radial(job.geometry, model, job.ell, job.inside_nodes + 1, spec);
            const RadialSolution& s = sp[job.inside_nodes];
            AtlasRow row;
            row.state_index = job.inside_nodes;
            row.ell = job.ell;
            row.geometry = job.geometry;
            row.energy = s.energy;
            row.parent_n = job.parent_n;
            row.parent_ell = job.parent_ell;
            row.regime = classify(job.geometry);
            if (std::fabs(s.energy - job.parent_energy) > opts.energy_tolerance)
                throw std::runtime_error(
                    "atlas row failed the degeneracy check: E = " + std::to_string(s.energy) +
                    " vs parent " + std::to_string(job.parent_energy) + " at geometry [" +
                    std::to_string(job.geometry.r_inner) + ", " +
                    (job.geometry.bounded() ? std::to_string(*job.geometry.r_outer) : "inf") + "]");
            if (opts.with_alpha1)
                row.alpha1 = response::polarizability(1, {job.inside_nodes, job.ell}, job.geometry,
                                                      model, spec)
                                 .total;
            if (opts.with_entropy) {
                const auto se = information::shannon_entropy_position(s);
                row.entropy_r = se.full;
            }
            rows[j] = std::move(row);
        } catch (const std::exception& e) {
#pragma omp critical
            failures[j] = e.what();
        }
    }
    for (const auto& f : failures)
        if (!f.empty()) throw std::runtime_error(f);

    std::stable_sort(rows.begin(), rows.end(), [](const AtlasRow& a, const AtlasRow& b) {
        if (a.ell != b.ell) return a.ell < b.ell;
        if (a.state_index != b.state_index) return a.state_index < b.state_index;
        return a.geometry.r_inner < b.geometry.r_inner;
    });
    return rows;
}

}  // namespace shellconf::degeneracy
