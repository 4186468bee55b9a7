#include "shellconf/potentials.hpp"

#include <cmath>

namespace shellconf {

void ConfinementGeometry::validate() const {
    if (r_inner < 0.0)
        throw std::invalid_argument("geometry: r_inner must be >= 0, got " + std::to_string(r_inner));
    if (r_outer && !(*r_outer > r_inner))
        throw std::invalid_argument("geometry: r_outer must exceed r_inner");
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::FHA: return "FHA";
        case Regime::CHA: return "CHA";
        case Regime::SCHA: return "SCHA";
        case Regime::LCHA: return "LCHA";
    }
    return "?";
}

Regime classify(const ConfinementGeometry& g) {
    g.validate();
    const bool inner = g.r_inner > 0.0;
    if (!inner && !g.bounded()) return Regime::FHA;
    if (!inner && g.bounded()) return Regime::CHA;
    if (inner && g.bounded()) return Regime::SCHA;
    return Regime::LCHA;
}

const char* to_string(PotentialKind k) {
    switch (k) {
        case PotentialKind::Coulomb: return "coulomb";
        case PotentialKind::Debye: return "debye";
        case PotentialKind::ExpCosine: return "expcosine";
    }
    return "?";
}

void PotentialModel::validate() const {
    if (!(z > 0.0))
        throw std::invalid_argument("potential: nuclear charge must be positive");
    if (kind != PotentialKind::Coulomb && lambda < 0.0)
        throw std::invalid_argument("potential: screening parameter must be >= 0");
}

double evaluate(const PotentialModel& model, double r) {
    if (!(r > 0.0))
        throw std::domain_error("potential evaluated at r <= 0");
    switch (model.kind) {
        case PotentialKind::Coulomb:
            return -model.z / r;
        case PotentialKind::Debye:
            return -model.z / r * std::exp(-model.lambda * r);
        case PotentialKind::ExpCosine:
            return -model.z / r * std::exp(-model.lambda * r) * std::cos(model.lambda * r);
    }
    return 0.0;
}

}  // namespace shellconf
