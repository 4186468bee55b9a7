#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "shellconf/grid.hpp"
#include "shellconf/information.hpp"

namespace shellconf::cli {

inline constexpr const char* version = "1.0.0";

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Command { Solve, Atlas, Transitions, Polarizability, Herzfeld, Entropy, Sweep };

struct SweepSpec {
    std::string variable = "r_inner";  // r_inner | r_outer | fixed_gap
    double start = 0.0, stop = 0.0, step = 0.0;
    std::vector<double> values;  // explicit points override start/stop/step
    double fixed_gap = 1.0;
    std::string observable = "energy";

    std::vector<double> points() const;
};

struct RunConfig {
    Command command = Command::Solve;
    PotentialModel potential;
    ConfinementGeometry geometry = ConfinementGeometry::free_atom();
    std::vector<std::string> labels;  // quantum labels like "2p"; empty = use ell/state_index
    int ell = 0;
    int state_index = 0;
    GridSpec numerics;
    information::PGridSpec momentum;
    int transitions_k = 1;
    int transitions_n_final_max = 4;
    int response_k = 1;
    std::vector<int> atlas_n = {4};
    bool atlas_with_alpha = false;
    bool atlas_with_entropy = false;
    std::string herzfeld_mode = "check";  // check | rm
    SweepSpec sweep;
    std::string output_path;  // empty = stdout
    bool reproducible = false;

    std::map<std::string, std::string> echo;  // key/value pairs as parsed
};

struct ResultTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> provenance;  // emitted as trailing comments
};

/// Parse "key=value" pairs from an optional file plus override pairs
/// (overrides win). Unknown keys raise ConfigError listing the valid keys.
RunConfig parse_config(const std::string& file_path, const std::vector<std::string>& overrides);

/// Dispatch the configured command.
ResultTable run(const RunConfig& cfg);

/// RFC-4180-style CSV: header row, data rows with 9 significant digits,
/// provenance as trailing '#' comment lines.
void emit_csv(const ResultTable& table, std::ostream& os);

/// Full command line entry point; returns the process exit code
/// (0 ok, 1 config error, 2 numerical failure).
int main_entry(int argc, const char* const* argv);

/// "2p" -> (ell, state_index); accepts s..h orbital letters.
std::pair<int, int> parse_label(const std::string& label);
std::string state_label(int state_index, int ell);

}  // namespace shellconf::cli
