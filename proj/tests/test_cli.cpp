#include "doctest.h"
#include "shellconf/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace shellconf;
using namespace shellconf::cli;

TEST_CASE("defaults and overrides") {
    const auto cfg = parse_config("", {"command=solve"});
    CHECK(cfg.numerics.n_points == 200);
    CHECK(cfg.potential.kind == PotentialKind::Coulomb);
    CHECK(!cfg.geometry.bounded());

    const auto cfg2 = parse_config("", {"command=solve", "geometry.r_outer=inf"});
    CHECK(!cfg2.geometry.bounded());
    const auto cfg3 = parse_config("", {"command=solve", "geometry.r_outer=5.5"});
    CHECK(*cfg3.geometry.r_outer == 5.5);
}

TEST_CASE("config file parsing with comments, overrides win") {
    const std::string path = "test_cli_tmp.conf";
    {
        std::ofstream f(path);
        f << "# reference run\n"
          << "command=solve\n"
          << "quantum.label = 2s  # second s state\n"
          << "numerics.n_points=64\n";
    }
    const auto cfg = parse_config(path, {"numerics.n_points=72"});
    CHECK(cfg.numerics.n_points == 72);
    REQUIRE(cfg.labels.size() == 1);
    CHECK(cfg.labels[0] == "2s");
    std::remove(path.c_str());
}

TEST_CASE("unknown keys and invariant violations are config errors") {
    CHECK_THROWS_WITH_AS(parse_config("", {"command=solve", "geomtry.r_inner=1"}),
                         doctest::Contains("Valid keys"), ConfigError);
    CHECK_THROWS_AS(parse_config("", {"command=solve", "geometry.r_inner=-1"}), ConfigError);
    CHECK_THROWS_AS(
        parse_config("", {"command=sweep", "sweep.start=2", "sweep.stop=1", "sweep.step=0.5"}),
        ConfigError);
    CHECK_THROWS_AS(parse_config("", {"command=frobnicate"}), ConfigError);
}

TEST_CASE("label parsing") {
    CHECK(parse_label("1s") == std::pair{0, 0});
    CHECK(parse_label("2p") == std::pair{1, 0});
    CHECK(parse_label("4d") == std::pair{2, 1});
    CHECK_THROWS_AS(parse_label("1p"), ConfigError);
    CHECK_THROWS_AS(parse_label("xy"), ConfigError);
    CHECK(state_label(1, 2) == "4d");
}

TEST_CASE("atlas run reproduces the n=4 table shape") {
    const auto cfg = parse_config("", {"command=atlas", "atlas.n=4", "numerics.n_points=120"});
    const auto t = run(cfg);
    CHECK(t.rows.size() == 20);
    for (const auto& row : t.rows) CHECK(std::fabs(row[6] - (-0.03125)) < 1e-6);
}

TEST_CASE("entropy run carries the free-atom reference row") {
    const auto cfg = parse_config("", {"command=entropy"});
    const auto t = run(cfg);
    REQUIRE(t.rows.size() == 1);
    const auto& r = t.rows[0];
    CHECK(r[4] == doctest::Approx(4.14473).epsilon(1e-4));   // s_r
    CHECK(r[5] == doctest::Approx(2.42186).epsilon(1e-4));   // s_p
}

TEST_CASE("sweep over r_inner at fixed gap: ground energy climbs") {
    const auto cfg = parse_config(
        "", {"command=sweep", "sweep.variable=fixed_gap", "sweep.fixed_gap=1", "sweep.start=0.5",
             "sweep.stop=4.5", "sweep.step=1", "quantum.label=1s", "numerics.n_points=80"});
    const auto t = run(cfg);
    REQUIRE(t.rows.size() == 5);
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i][4] > t.rows[i - 1][4]);
}

TEST_CASE("csv emission: empty rows, round-trip, determinism") {
    ResultTable t;
    t.header = {"a", "b"};
    t.provenance = {"shellconf test"};
    std::ostringstream empty;
    emit_csv(t, empty);
    CHECK(empty.str() == "a,b\n# shellconf test\n");

    t.rows.push_back({1.0 / 3.0, -0.0312500372});
    t.rows.push_back({123456789.25, 2e-11});
    std::ostringstream out1, out2;
    emit_csv(t, out1);
    emit_csv(t, out2);
    CHECK(out1.str() == out2.str());

    std::istringstream in(out1.str());
    std::string line;
    std::getline(in, line);  // header
    std::getline(in, line);
    double a, b;
    CHECK(std::sscanf(line.c_str(), "%lf,%lf", &a, &b) == 2);
    char ra[40], rb[40];
    std::snprintf(ra, sizeof ra, "%.9g", a);
    std::snprintf(rb, sizeof rb, "%.9g", b);
    char ea[40], eb[40];
    std::snprintf(ea, sizeof ea, "%.9g", t.rows[0][0]);
    std::snprintf(eb, sizeof eb, "%.9g", t.rows[0][1]);
    CHECK(std::string(ra) == ea);
    CHECK(std::string(rb) == eb);
}

TEST_CASE("reproducible runs are byte-identical") {
    const auto cfg = parse_config(
        "", {"command=solve", "quantum.label=1s", "numerics.n_points=64",
             "output.reproducible=true", "geometry.r_outer=2"});
    std::ostringstream a, b;
    emit_csv(run(cfg), a);
    emit_csv(run(cfg), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("generated") == std::string::npos);
}

TEST_CASE("exit codes through the full entry point") {
    {
        const char* argv[] = {"shellconf", "solve", "--numerics.n_points=64",
                              "--geometry.r_outer=2", "--out=test_cli_out.csv"};
        CHECK(main_entry(5, argv) == 0);
        std::remove("test_cli_out.csv");
    }
    {
        const char* argv[] = {"shellconf", "solve", "--no.such.key=1"};
        CHECK(main_entry(3, argv) == 1);
    }
    {
        // p window far too small for a tight cavity: numerical failure
        const char* argv[] = {"shellconf", "entropy", "--geometry.r_outer=1",
                              "--numerics.p_max=4", "--numerics.n_points=64"};
        CHECK(main_entry(5, argv) == 2);
    }
}
