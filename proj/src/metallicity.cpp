#include "shellconf/metallicity.hpp"

#include <cmath>

namespace shellconf::metallicity {

MetallicityPoint herzfeld_check(const ConfinementGeometry& geometry,
                                const transitions::StateLabel& state, const PotentialModel& model,
                                const GridSpec& spec) {
    if (!geometry.bounded())
        throw std::invalid_argument("herzfeld_check: volume parameter undefined for unbounded geometry");
    MetallicityPoint pt;
    pt.geometry = geometry;
    const double rb = *geometry.r_outer, ra = geometry.r_inner;
    pt.volume_param = rb * rb * rb - ra * ra * ra;
    pt.alpha1 = response::polarizability(1, state, geometry, model, spec).total;
    pt.metallic = pt.volume_param <= pt.alpha1;
    return pt;
}

RmResult find_rm(double r_outer, const transitions::StateLabel& state, const PotentialModel& model,
                 const GridSpec& spec) {
    if (!(r_outer > 0.0)) throw std::invalid_argument("find_rm: r_outer must be positive");
    auto g = [&](double ra) {
        const ConfinementGeometry geom{ra, r_outer};
        const double alpha = response::polarizability(1, state, geom, model, spec).total;
        return alpha - (r_outer * r_outer * r_outer - ra * ra * ra);
    };
    double lo = 1e-6 * r_outer, hi = r_outer - 1e-3;
    double glo = g(lo), ghi = g(hi);
    if (glo > 0.0) return {RmStatus::AlwaysMetallic, 0.0};
    if (ghi < 0.0) return {RmStatus::NeverMetallic, 0.0};
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) hi = mid;
        else lo = mid;
    }
    return {RmStatus::Found, 0.5 * (lo + hi)};
}

}  // namespace shellconf::metallicity
