#include "doctest.h"
#include "shellconf/metallicity.hpp"

#include <cmath>

using namespace shellconf;
using namespace shellconf::metallicity;

namespace {
GridSpec spec(int n = 150) {
    GridSpec s;
    s.n_points = n;
    return s;
}
const auto H = PotentialModel::coulomb(1.0);
}  // namespace

TEST_CASE("herzfeld comparison at reference shells") {
    const auto metal = herzfeld_check(ConfinementGeometry::shell(1.8, 2.0), {0, 0}, H, spec());
    CHECK(metal.alpha1 == doctest::Approx(8.67861281).epsilon(1e-4));
    CHECK(metal.volume_param == doctest::Approx(2.168).epsilon(1e-12));
    CHECK(metal.metallic);

    const auto insul = herzfeld_check(ConfinementGeometry::cavity(1.0), {0, 0}, H, spec());
    CHECK(insul.alpha1 == doctest::Approx(0.02879202).epsilon(1e-4));
    CHECK(insul.volume_param == doctest::Approx(1.0));
    CHECK(!insul.metallic);

    // thin shell: V -> 0 while alpha stays positive
    const auto thin = herzfeld_check(ConfinementGeometry::shell(2.9, 3.0), {0, 0}, H, spec());
    CHECK(thin.metallic);
    CHECK(thin.alpha1 > thin.volume_param);

    CHECK_THROWS_AS(herzfeld_check(ConfinementGeometry::free_atom(), {0, 0}, H, spec()),
                    std::invalid_argument);
}

TEST_CASE("threshold radius by bisection") {
    const auto rm1 = find_rm(1.0, {0, 0}, H, spec());
    REQUIRE(rm1.status == RmStatus::Found);
    CHECK(std::fabs(rm1.r_m - 0.81776) < 2e-3);

    const auto rm10 = find_rm(10.0, {3, 0}, H, spec());
    REQUIRE(rm10.status == RmStatus::Found);
    CHECK(std::fabs(rm10.r_m - 3.2191) < 5e-3);

    // defining equation closes at the root
    const auto pt = herzfeld_check(ConfinementGeometry::shell(rm1.r_m, 1.0), {0, 0}, H, spec());
    CHECK(std::fabs(pt.alpha1 - pt.volume_param) / pt.volume_param < 1e-3);
}
