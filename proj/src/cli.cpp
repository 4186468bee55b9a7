#include "shellconf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shellconf/degeneracy.hpp"
#include "shellconf/metallicity.hpp"
#include "shellconf/response.hpp"

namespace shellconf::cli {

namespace {

const std::vector<std::string>& valid_keys() {
    static const std::vector<std::string> keys = {
        "command",
        "potential.kind", "potential.z", "potential.lambda",
        "geometry.r_inner", "geometry.r_outer",
        "quantum.ell", "quantum.state_index", "quantum.label", "quantum.labels",
        "numerics.n_points", "numerics.map_scale", "numerics.truncation",
        "numerics.p_max", "numerics.p_points",
        "transitions.k", "transitions.n_final_max",
        "response.k",
        "atlas.n", "atlas.with_alpha", "atlas.with_entropy",
        "herzfeld.mode",
        "sweep.variable", "sweep.start", "sweep.stop", "sweep.step", "sweep.values",
        "sweep.fixed_gap", "sweep.observable",
        "output.path", "output.reproducible",
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigError("config: cannot parse '" + v + "' as a number for " + key);
    }
}

int parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (...) {
        throw ConfigError("config: cannot parse '" + v + "' as an integer for " + key);
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config: cannot parse '" + v + "' as a boolean for " + key);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

void apply_pair(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (std::find(valid_keys().begin(), valid_keys().end(), key) == valid_keys().end()) {
        std::string msg = "config: unknown key '" + key + "'. Valid keys:";
        for (const auto& k : valid_keys()) msg += " " + k;
        throw ConfigError(msg);
    }
    cfg.echo[key] = value;
    if (key == "command") {
        static const std::map<std::string, Command> cmds = {
            {"solve", Command::Solve},       {"atlas", Command::Atlas},
            {"transitions", Command::Transitions}, {"polarizability", Command::Polarizability},
            {"herzfeld", Command::Herzfeld}, {"entropy", Command::Entropy},
            {"sweep", Command::Sweep}};
        const auto it = cmds.find(value);
        if (it == cmds.end()) throw ConfigError("config: unknown command '" + value + "'");
        cfg.command = it->second;
    } else if (key == "potential.kind") {
        if (value == "coulomb") cfg.potential.kind = PotentialKind::Coulomb;
        else if (value == "debye" || value == "wcp") cfg.potential.kind = PotentialKind::Debye;
        else if (value == "expcosine" || value == "ecscp") cfg.potential.kind = PotentialKind::ExpCosine;
        else throw ConfigError("config: unknown potential.kind '" + value + "'");
    } else if (key == "potential.z") {
        cfg.potential.z = parse_double(key, value);
    } else if (key == "potential.lambda") {
        cfg.potential.lambda = parse_double(key, value);
    } else if (key == "geometry.r_inner") {
        cfg.geometry.r_inner = parse_double(key, value);
    } else if (key == "geometry.r_outer") {
        if (value == "inf" || value == "unbounded" || value == "infinity")
            cfg.geometry.r_outer.reset();
        else
            cfg.geometry.r_outer = parse_double(key, value);
    } else if (key == "quantum.ell") {
        cfg.ell = parse_int(key, value);
    } else if (key == "quantum.state_index") {
        cfg.state_index = parse_int(key, value);
    } else if (key == "quantum.label") {
        cfg.labels = {value};
    } else if (key == "quantum.labels") {
        cfg.labels = split_list(value);
    } else if (key == "numerics.n_points") {
        cfg.numerics.n_points = parse_int(key, value);
    } else if (key == "numerics.map_scale") {
        cfg.numerics.map_scale = parse_double(key, value);
    } else if (key == "numerics.truncation") {
        cfg.numerics.r_max_truncation = parse_double(key, value);
    } else if (key == "numerics.p_max") {
        cfg.momentum.p_max = parse_double(key, value);
    } else if (key == "numerics.p_points") {
        cfg.momentum.n_points = parse_int(key, value);
    } else if (key == "transitions.k") {
        cfg.transitions_k = parse_int(key, value);
    } else if (key == "transitions.n_final_max") {
        cfg.transitions_n_final_max = parse_int(key, value);
    } else if (key == "response.k") {
        cfg.response_k = parse_int(key, value);
    } else if (key == "atlas.n") {
        cfg.atlas_n.clear();
        for (const auto& tok : split_list(value)) cfg.atlas_n.push_back(parse_int(key, tok));
        if (cfg.atlas_n.empty()) throw ConfigError("config: atlas.n needs at least one level");
    } else if (key == "atlas.with_alpha") {
        cfg.atlas_with_alpha = parse_bool(key, value);
    } else if (key == "atlas.with_entropy") {
        cfg.atlas_with_entropy = parse_bool(key, value);
    } else if (key == "herzfeld.mode") {
        if (value != "check" && value != "rm")
            throw ConfigError("config: herzfeld.mode must be 'check' or 'rm'");
        cfg.herzfeld_mode = value;
    } else if (key == "sweep.variable") {
        if (value != "r_inner" && value != "r_outer" && value != "fixed_gap")
            throw ConfigError("config: sweep.variable must be r_inner, r_outer or fixed_gap");
        cfg.sweep.variable = value;
    } else if (key == "sweep.start") {
        cfg.sweep.start = parse_double(key, value);
    } else if (key == "sweep.stop") {
        cfg.sweep.stop = parse_double(key, value);
    } else if (key == "sweep.step") {
        cfg.sweep.step = parse_double(key, value);
    } else if (key == "sweep.values") {
        cfg.sweep.values.clear();
        for (const auto& tok : split_list(value)) cfg.sweep.values.push_back(parse_double(key, tok));
    } else if (key == "sweep.fixed_gap") {
        cfg.sweep.fixed_gap = parse_double(key, value);
    } else if (key == "sweep.observable") {
        static const std::vector<std::string> obs = {"energy", "transitions", "polarizability",
                                                     "entropy", "herzfeld"};
        if (std::find(obs.begin(), obs.end(), value) == obs.end())
            throw ConfigError("config: unknown sweep.observable '" + value + "'");
        cfg.sweep.observable = value;
    } else if (key == "output.path") {
        cfg.output_path = value;
    } else if (key == "output.reproducible") {
        cfg.reproducible = parse_bool(key, value);
    }
}

void validate(RunConfig& cfg) {
    try {
        cfg.geometry.validate();
        cfg.potential.validate();
        cfg.numerics.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (cfg.ell < 0) throw ConfigError("config: quantum.ell must be >= 0");
    if (cfg.state_index < 0) throw ConfigError("config: quantum.state_index must be >= 0");
    if (cfg.transitions_k < 1 || cfg.transitions_k > 4)
        throw ConfigError("config: transitions.k must be 1..4");
    if (cfg.response_k < 1 || cfg.response_k > 4)
        throw ConfigError("config: response.k must be 1..4");
    for (int n : cfg.atlas_n)
        if (n < 1) throw ConfigError("config: atlas.n entries must be >= 1");
    if (cfg.command == Command::Sweep) {
        if (cfg.sweep.values.empty()) {
            if (!(cfg.sweep.step > 0.0)) throw ConfigError("config: sweep.step must be > 0");
            if (cfg.sweep.stop < cfg.sweep.start)
                throw ConfigError("config: sweep.stop must be >= sweep.start");
        }
        for (double v : cfg.sweep.points()) {
            ConfinementGeometry g = cfg.geometry;
            if (cfg.sweep.variable == "r_inner") g.r_inner = v;
            else if (cfg.sweep.variable == "r_outer") g.r_outer = v;
            else { g.r_inner = v; g.r_outer = v + cfg.sweep.fixed_gap; }
            try {
                g.validate();
            } catch (const std::invalid_argument& e) {
                throw ConfigError("config: sweep point " + std::to_string(v) +
                                  " violates geometry invariants: " + e.what());
            }
        }
    }
}

}  // namespace

std::vector<double> SweepSpec::points() const {
    if (!values.empty()) return values;
    std::vector<double> out;
    for (double v = start; v <= stop + 1e-12 * std::max(1.0, std::fabs(stop)); v += step)
        out.push_back(v);
    return out;
}

std::pair<int, int> parse_label(const std::string& label) {
    static const std::string letters = "spdfgh";
    if (label.size() < 2) throw ConfigError("config: bad quantum label '" + label + "'");
    const char lc = std::tolower(label.back());
    const auto pos = letters.find(lc);
    if (pos == std::string::npos)
        throw ConfigError("config: bad orbital letter in label '" + label + "'");
    int n = 0;
    try {
        n = std::stoi(label.substr(0, label.size() - 1));
    } catch (...) {
        throw ConfigError("config: bad principal number in label '" + label + "'");
    }
    const int ell = int(pos);
    if (n < ell + 1) throw ConfigError("config: label '" + label + "' has n < ell+1");
    return {ell, n - ell - 1};
}

std::string state_label(int state_index, int ell) {
    static const std::string letters = "spdfgh";
    const std::string letter = ell < int(letters.size()) ? std::string(1, letters[ell])
                                                         : "(l=" + std::to_string(ell) + ")";
    return std::to_string(state_index + ell + 1) + letter;
}

RunConfig parse_config(const std::string& file_path, const std::vector<std::string>& overrides) {
    RunConfig cfg;
    auto apply_line = [&cfg](std::string line, const std::string& where) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) return;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key=value in " + where + ", got '" + line + "'");
        apply_pair(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    };
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw ConfigError("config: cannot open file '" + file_path + "'");
        std::string line;
        while (std::getline(in, line)) apply_line(line, file_path);
    }
    for (const auto& ov : overrides) apply_line(ov, "command line");
    validate(cfg);
    return cfg;
}

namespace {

struct LabeledState {
    transitions::StateLabel label;
    std::string name;
};

std::vector<LabeledState> resolve_states(const RunConfig& cfg) {
    std::vector<LabeledState> out;
    if (cfg.labels.empty()) {
        out.push_back({{cfg.state_index, cfg.ell}, state_label(cfg.state_index, cfg.ell)});
    } else {
        for (const auto& lb : cfg.labels) {
            const auto [ell, idx] = parse_label(lb);
            out.push_back({{idx, ell}, lb});
        }
    }
    return out;
}

void add_provenance(ResultTable& t, const RunConfig& cfg) {
    t.provenance.push_back(std::string("shellconf ") + version);
    if (!cfg.reproducible) {
        char buf[64];
        const std::time_t now = std::time(nullptr);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        t.provenance.push_back(std::string("generated ") + buf);
    }
    t.provenance.push_back("n_points=" + std::to_string(cfg.numerics.n_points) +
                           " map_scale=" + std::to_string(cfg.numerics.map_scale) +
                           " truncation=" + std::to_string(cfg.numerics.r_max_truncation));
    for (const auto& [k, v] : cfg.echo) t.provenance.push_back(k + "=" + v);
}

// CSV cells must stay finite; -1 encodes an unbounded outer radius.
double geometry_outer_code(const ConfinementGeometry& g) {
    return g.bounded() ? *g.r_outer : -1.0;
}

ResultTable run_solve(const RunConfig& cfg) {
    ResultTable t;
    t.header = {"r_inner", "r_outer", "ell", "state_index", "energy", "nodes"};
    for (const auto& st : resolve_states(cfg)) {
        Spectrum sp = solve_radial(cfg.geometry, cfg.potential, st.label.ell,
                                   st.label.state_index + 1, cfg.numerics);
        const RadialSolution& s = sp[st.label.state_index];
        t.rows.push_back({cfg.geometry.r_inner, geometry_outer_code(cfg.geometry),
                          double(s.ell), double(s.state_index), s.energy,
                          double(s.count_nodes())});
    }
    return t;
}

ResultTable run_atlas(const RunConfig& cfg) {
    ResultTable t;
    t.header = {"parent_n", "parent_ell", "nodes", "ell", "r_inner", "r_outer",
                "energy", "regime"};
    if (cfg.atlas_with_alpha) t.header.push_back("alpha1");
    if (cfg.atlas_with_entropy) t.header.push_back("s_r");
    degeneracy::AtlasOptions opts;
    opts.with_alpha1 = cfg.atlas_with_alpha;
    opts.with_entropy = cfg.atlas_with_entropy;
    for (int n : cfg.atlas_n) {
        const auto rows = degeneracy::enumerate_atlas(n, cfg.potential, cfg.numerics, opts);
        for (const auto& r : rows) {
            std::vector<double> row = {double(r.parent_n), double(r.parent_ell),
                                       double(r.state_index), double(r.ell), r.geometry.r_inner,
                                       geometry_outer_code(r.geometry), r.energy,
                                       double(int(r.regime))};
            if (cfg.atlas_with_alpha) row.push_back(r.alpha1.value_or(0.0));
            if (cfg.atlas_with_entropy) row.push_back(r.entropy_r.value_or(0.0));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

std::vector<std::vector<double>> transitions_rows(const RunConfig& cfg,
                                                  const ConfinementGeometry& geom) {
    std::vector<std::vector<double>> rows;
    auto grid = std::make_shared<const RadialGrid>(geom, cfg.numerics);
    const int n_states = grid->n_interior() - 2;
    std::map<int, Spectrum> spectra;
    auto need = [&](int ell) -> const Spectrum& {
        auto it = spectra.find(ell);
        if (it == spectra.end())
            it = spectra.emplace(ell, solve_radial(grid, cfg.potential, ell, n_states)).first;
        return it->second;
    };
    for (const auto& st : resolve_states(cfg)) {
        const Spectrum& base = need(st.label.ell);
        if (st.label.state_index >= int(base.size()))
            throw std::runtime_error("transitions: initial state " + st.name + " not available");
        const RadialSolution& init = base[st.label.state_index];
        for (int lp : transitions::selection_final_ells(cfg.transitions_k, st.label.ell)) {
            const Spectrum& fs = need(lp);
            for (int j = 0; j < int(fs.size()); ++j) {
                const int n_label = j + lp + 1;
                if (n_label > cfg.transitions_n_final_max) break;
                if (lp == st.label.ell && j == st.label.state_index) continue;
                const auto rec = transitions::oscillator_strength(cfg.transitions_k, init, fs[j]);
                rows.push_back({geom.r_inner, geometry_outer_code(geom), double(st.label.ell),
                                double(st.label.state_index), double(lp), double(j), rec.delta_e,
                                rec.radial_element, rec.f_value});
            }
        }
    }
    return rows;
}

ResultTable run_transitions(const RunConfig& cfg) {
    ResultTable t;
    t.header = {"r_inner", "r_outer", "ell_i", "index_i", "ell_f", "index_f",
                "delta_e", "radial_element", "f"};
    t.rows = transitions_rows(cfg, cfg.geometry);
    return t;
}

std::vector<std::vector<double>> polarizability_rows(const RunConfig& cfg,
                                                     const ConfinementGeometry& geom) {
    std::vector<std::vector<double>> rows;
    for (const auto& st : resolve_states(cfg)) {
        const auto resp =
            response::polarizability(cfg.response_k, st.label, geom, cfg.potential, cfg.numerics);
        const double vol = geom.bounded() ? std::pow(*geom.r_outer, 3) - std::pow(geom.r_inner, 3)
                                          : -1.0;
        rows.push_back({geom.r_inner, geometry_outer_code(geom), vol, double(st.label.ell),
                        double(st.label.state_index), double(cfg.response_k), resp.total,
                        resp.total < 0.0 ? 1.0 : 0.0});
    }
    return rows;
}

ResultTable run_polarizability(const RunConfig& cfg) {
    ResultTable t;
    t.header = {"r_inner", "r_outer", "volume", "ell", "state_index", "k", "alpha", "negative"};
    t.rows = polarizability_rows(cfg, cfg.geometry);
    return t;
}

std::vector<std::vector<double>> entropy_rows(const RunConfig& cfg,
                                              const ConfinementGeometry& geom) {
    std::vector<std::vector<double>> rows;
    for (const auto& st : resolve_states(cfg)) {
        const auto rep = information::entropy_report(geom, cfg.potential, st.label.ell,
                                                     st.label.state_index, cfg.numerics,
                                                     cfg.momentum);
        rows.push_back({geom.r_inner, geometry_outer_code(geom), double(st.label.ell),
                        double(st.label.state_index), rep.s_r_full, rep.s_p_full, rep.s_total,
                        rep.e_r_full, rep.e_p_full, rep.e_total});
    }
    return rows;
}

ResultTable run_entropy(const RunConfig& cfg) {
    ResultTable t;
    t.header = {"r_inner", "r_outer", "ell", "state_index", "s_r", "s_p", "s_t",
                "e_r", "e_p", "e_t"};
    t.rows = entropy_rows(cfg, cfg.geometry);
    return t;
}

std::vector<std::vector<double>> herzfeld_rows(const RunConfig& cfg,
                                               const ConfinementGeometry& geom) {
    std::vector<std::vector<double>> rows;
    for (const auto& st : resolve_states(cfg)) {
        if (cfg.herzfeld_mode == "check") {
            const auto pt = metallicity::herzfeld_check(geom, st.label, cfg.potential, cfg.numerics);
            rows.push_back({geom.r_inner, *geom.r_outer, double(st.label.ell),
                            double(st.label.state_index), pt.volume_param, pt.alpha1,
                            pt.metallic ? 1.0 : 0.0});
        } else {
            if (!geom.bounded()) throw ConfigError("herzfeld rm: geometry.r_outer must be finite");
            const auto rm = metallicity::find_rm(*geom.r_outer, st.label, cfg.potential,
                                                 cfg.numerics);
            rows.push_back({geom.r_inner, *geom.r_outer, double(st.label.ell),
                            double(st.label.state_index),
                            rm.status == metallicity::RmStatus::Found ? rm.r_m : -1.0,
                            double(int(rm.status)), 0.0});
        }
    }
    return rows;
}

ResultTable run_herzfeld(const RunConfig& cfg) {
    ResultTable t;
    if (cfg.herzfeld_mode == "check")
        t.header = {"r_inner", "r_outer", "ell", "state_index", "volume", "alpha1", "metallic"};
    else
        t.header = {"r_inner", "r_outer", "ell", "state_index", "r_m", "status", "pad"};
    t.rows = herzfeld_rows(cfg, cfg.geometry);
    return t;
}

ResultTable run_sweep(const RunConfig& cfg) {
    ResultTable t;
    const auto pts = cfg.sweep.points();
    std::vector<std::vector<std::vector<double>>> chunks(pts.size());
    std::vector<std::string> errors(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pts.size(); ++i) {
        try {
            ConfinementGeometry g = cfg.geometry;
            if (cfg.sweep.variable == "r_inner") g.r_inner = pts[i];
            else if (cfg.sweep.variable == "r_outer") g.r_outer = pts[i];
            else { g.r_inner = pts[i]; g.r_outer = pts[i] + cfg.sweep.fixed_gap; }
            if (cfg.sweep.observable == "energy") {
                RunConfig c2 = cfg;
                c2.geometry = g;
                chunks[i] = run_solve(c2).rows;
            } else if (cfg.sweep.observable == "transitions") {
                chunks[i] = transitions_rows(cfg, g);
            } else if (cfg.sweep.observable == "polarizability") {
                chunks[i] = polarizability_rows(cfg, g);
            } else if (cfg.sweep.observable == "entropy") {
                chunks[i] = entropy_rows(cfg, g);
            } else {
                chunks[i] = herzfeld_rows(cfg, g);
            }
        } catch (const std::exception& e) {
#pragma omp critical
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);

    if (cfg.sweep.observable == "energy")
        t.header = {"r_inner", "r_outer", "ell", "state_index", "energy", "nodes"};
    else if (cfg.sweep.observable == "transitions")
        t.header = {"r_inner", "r_outer", "ell_i", "index_i", "ell_f", "index_f",
                    "delta_e", "radial_element", "f"};
    else if (cfg.sweep.observable == "polarizability")
        t.header = {"r_inner", "r_outer", "volume", "ell", "state_index", "k", "alpha", "negative"};
    else if (cfg.sweep.observable == "entropy")
        t.header = {"r_inner", "r_outer", "ell", "state_index", "s_r", "s_p", "s_t",
                    "e_r", "e_p", "e_t"};
    else
        t.header = {"r_inner", "r_outer", "ell", "state_index", "r_m", "status", "pad"};
    for (auto& ch : chunks)
        for (auto& row : ch) t.rows.push_back(std::move(row));
    return t;
}

}  // namespace

ResultTable run(const RunConfig& cfg) {
    ResultTable t;
    switch (cfg.command) {
        case Command::Solve: t = run_solve(cfg); break;
        case Command::Atlas: t = run_atlas(cfg); break;
        case Command::Transitions: t = run_transitions(cfg); break;
        case Command::Polarizability: t = run_polarizability(cfg); break;
        case Command::Herzfeld: t = run_herzfeld(cfg); break;
        case Command::Entropy: t = run_entropy(cfg); break;
        case Command::Sweep: t = run_sweep(cfg); break;
    }
    add_provenance(t, cfg);
    return t;
}

void emit_csv(const ResultTable& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << table.header[i] << (i + 1 < table.header.size() ? "," : "\n");
    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.9g", row[i]);
            os << buf << (i + 1 < row.size() ? "," : "\n");
        }
    }
    for (const auto& p : table.provenance) os << "# " << p << "\n";
}

int main_entry(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_file, out_path;
    std::vector<std::string> overrides;
    bool reproducible = false;

    try {
        if (args.empty() || args[0] == "--help" || args[0] == "-h") {
            std::cout
                << "usage: shellconf <command> [--config FILE] [--key=value ...] [--out PATH] "
                   "[--reproducible]\n"
                   "commands: solve atlas transitions polarizability herzfeld entropy sweep\n"
                   "defaults: potential.kind=coulomb potential.z=1 geometry=(0,inf)\n"
                   "          numerics.n_points=200 numerics.map_scale=25 numerics.truncation=200\n"
                   "          numerics.p_max=30 numerics.p_points=400 quantum.ell=0 "
                   "quantum.state_index=0\n"
                   "config file: one key=value per line, '#' comments; flags override the file.\n";
            return args.empty() ? 1 : 0;
        }
        overrides.push_back("command=" + args[0]);
        for (std::size_t i = 1; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto next = [&]() -> std::string {
                if (i + 1 >= args.size()) throw ConfigError("config: missing value after " + a);
                return args[++i];
            };
            if (a == "--config") config_file = next();
            else if (a.rfind("--config=", 0) == 0) config_file = a.substr(9);
            else if (a == "--out") out_path = next();
            else if (a.rfind("--out=", 0) == 0) out_path = a.substr(6);
            else if (a == "--reproducible") reproducible = true;
            else if (a.rfind("--", 0) == 0 && a.find('=') != std::string::npos)
                overrides.push_back(a.substr(2));
            else
                throw ConfigError("config: unrecognized argument '" + a + "'");
        }
        // file first, then flag overrides, preserving precedence
        std::vector<std::string> file_then_flags = overrides;
        RunConfig cfg = parse_config(config_file, file_then_flags);
        if (reproducible) cfg.reproducible = true;
        if (!out_path.empty()) cfg.output_path = out_path;

        const ResultTable t = run(cfg);
        if (cfg.output_path.empty()) {
            emit_csv(t, std::cout);
        } else {
            std::ofstream out(cfg.output_path);
            if (!out) {
                std::cerr << "error: cannot open output path " << cfg.output_path << "\n";
                return 2;
            }
            emit_csv(t, out);
            if (!out.good()) {
                std::cerr << "error: write failure on " << cfg.output_path << "\n";
                return 2;
            }
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace shellconf::cli
