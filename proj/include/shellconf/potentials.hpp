#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace shellconf {

/// Radial shell [r_inner, r_outer] with infinite walls outside.
/// An empty r_outer means the outer wall is absent (unbounded domain).
struct ConfinementGeometry {
    double r_inner = 0.0;
    std::optional<double> r_outer{};  // nullopt = unbounded

    static ConfinementGeometry shell(double a, double b) { return {a, b}; }
    static ConfinementGeometry cavity(double rc) { return {0.0, rc}; }
    static ConfinementGeometry free_atom() { return {0.0, std::nullopt}; }
    static ConfinementGeometry left_confined(double a) { return {a, std::nullopt}; }

    bool bounded() const { return r_outer.has_value(); }
    void validate() const;
    bool operator==(const ConfinementGeometry&) const = default;
};

enum class Regime { FHA, CHA, SCHA, LCHA };

const char* to_string(Regime r);

/// Boundary regime from the geometry alone; total on valid geometries.
Regime classify(const ConfinementGeometry& g);

enum class PotentialKind { Coulomb, Debye, ExpCosine };

const char* to_string(PotentialKind k);

/// Central attraction: -Z/r, -Z/r e^{-lambda r}, or -Z/r e^{-lambda r} cos(lambda r).
/// `lambda` is ignored for Coulomb; with lambda = 0 the screened forms reduce
/// to the bare Coulomb potential exactly.
struct PotentialModel {
    PotentialKind kind = PotentialKind::Coulomb;
    double z = 1.0;
    double lambda = 0.0;

    static PotentialModel coulomb(double z = 1.0) { return {PotentialKind::Coulomb, z, 0.0}; }
    static PotentialModel debye(double z, double lam) { return {PotentialKind::Debye, z, lam}; }
    static PotentialModel exp_cosine(double z, double lam) { return {PotentialKind::ExpCosine, z, lam}; }

    void validate() const;
    bool operator==(const PotentialModel&) const = default;
};

/// v(r) in hartree; throws std::domain_error for r <= 0 (the 1/r singularity
/// is never sampled: collocation grids exclude the domain endpoints).
double evaluate(const PotentialModel& model, double r);

}  // namespace shellconf
