#include "doctest.h"
#include "property_suite.hpp"

#include <cstdio>

using shellconf::props::PropertyResult;

namespace {
void report(const PropertyResult& r) {
    INFO(r.name, ": ", r.detail);
    CHECK_MESSAGE(r.pass, r.name, " -- ", r.detail);
    std::printf("  %-60s %s (%.1fs)%s%s\n", r.name.c_str(), r.pass ? "ok" : "FAIL", r.seconds,
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
}
}  // namespace

TEST_CASE("property suite") {
    double total = 0.0;
    for (const auto& r : shellconf::props::run_property_suite()) {
        report(r);
        total += r.seconds;
    }
    std::printf("  property suite total: %.1fs\n", total);
    CHECK(total < 300.0);
}

TEST_CASE("figure trend assertions") {
    for (const auto& r : shellconf::props::run_figure_trends()) report(r);
}
