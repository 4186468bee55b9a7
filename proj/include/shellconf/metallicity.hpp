#pragma once

#include "shellconf/response.hpp"

namespace shellconf::metallicity {

/// Herzfeld comparison for a finite shell: metallic once the shell volume
/// parameter V = R_b^3 - R_a^3 no longer exceeds alpha^(1).
struct MetallicityPoint {
    ConfinementGeometry geometry;
    double volume_param = 0.0;
    double alpha1 = 0.0;
    bool metallic = false;
};

MetallicityPoint herzfeld_check(const ConfinementGeometry& geometry,
                                const transitions::StateLabel& state, const PotentialModel& model,
                                const GridSpec& spec);

enum class RmStatus { Found, AlwaysMetallic, NeverMetallic };

struct RmResult {
    RmStatus status = RmStatus::Found;
    double r_m = 0.0;  // meaningful only when status == Found
};

/// Inner radius where alpha^(1) overtakes the volume parameter at fixed
/// r_outer, by bisection (full re-solve per probe) to 1e-4 bohr.
RmResult find_rm(double r_outer, const transitions::StateLabel& state, const PotentialModel& model,
                 const GridSpec& spec);

}  // namespace shellconf::metallicity
