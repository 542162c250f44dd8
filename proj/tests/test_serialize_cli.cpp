#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvi/serialize.hpp"
#include "test_support.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace pvi;

#ifndef PVI_CLI_PATH
#define PVI_CLI_PATH "pvi"
#endif
#ifndef PVI_FIXTURES_DIR
#define PVI_FIXTURES_DIR "."
#endif

namespace {

std::string fixture(const std::string &name) {
    return std::string(PVI_FIXTURES_DIR) + "/" + name;
}

int run_cli(const std::string &args) {
    std::string cmd = std::string(PVI_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("serialization round trips") {
    std::mt19937 rng(103);
    SUBCASE("rational functions") {
        for (int i = 0; i < 10; ++i) {
            RationalFunctionQ f = pvi::testing::random_rational_function(rng);
            CHECK(rational_function_from_json(to_json(f)) == f);
        }
    }
    SUBCASE("curves") {
        SolutionCurve kc = klein_curve();
        SolutionCurve back = curve_from_json(to_json(kc));
        CHECK(back.y == kc.y);
        CHECK(back.t == kc.t);
        CHECK(back.theta == kc.theta);
    }
    SUBCASE("words") {
        using G = SymmetryGenerator;
        WeylWord w{G::R1, G::R5, G::X2};
        CHECK(word_from_json(to_json(w)) == w);
        CHECK(to_json(w).dump() == "[\"R1\",\"R5\",\"X2\"]");
    }
    SUBCASE("exact systems") {
        Fuchsian3Q sys = klein_family(Rational(2));
        Fuchsian3Q back = fuchsian3q_from_json(to_json(sys));
        CHECK(back.B1 == sys.B1);
        CHECK(back.B2 == sys.B2);
        CHECK(back.B3 == sys.B3);
        CHECK(back.t == sys.t);
    }
    SUBCASE("rank-2 systems") {
        ThetaVector th{make_rational(7, 4), make_rational(7, 4), make_rational(-3, 4),
                       make_rational(-3, 2)};
        Rational delta = th.delta();
        SpectralData3 sp({th[0], th[1], th[2]}, {Rational(0), delta - th[3], delta});
        Fuchsian2Q sys = restrict_to_2x2(build_full<Rational>(
            Rational(-1), make_rational(1, 2), make_rational(3, 8), sp));
        Json j = to_json(sys);
        CHECK(j.at("rank") == 2);
        Fuchsian2Q back = fuchsian2q_from_json(j);
        CHECK(back.A1 == sys.A1);
        CHECK(back.A2 == sys.A2);
        CHECK(back.A3 == sys.A3);
        CHECK(back.theta == sys.theta);
        save_json(j, "/tmp/pvi_test_sys2.json");
    }
    SUBCASE("groups") {
        FiniteGroup g = build_binary_polyhedral(PolyhedralKind::tetrahedral);
        FiniteGroup back = group_from_json(to_json(g));
        CHECK(back.order == g.order);
        CHECK(back.table == g.table);
        CHECK(back.labels == g.labels);
    }
    SUBCASE("malformed input is rejected") {
        CHECK_THROWS_AS(theta_from_json(Json::array({"1", "2"})), math_error);
        CHECK_THROWS_AS(rational_from_json(Json("7/0")), division_by_zero);
    }
}

TEST_CASE("cli verify") {
    CHECK(run_cli("verify --input " + fixture("klein_curve.json")) == 0);

    // corrupt theta4 to 5/7: residual no longer vanishes
    Json j = load_json(fixture("klein_curve.json"));
    j["theta"][3] = "5/7";
    save_json(j, "/tmp/pvi_test_corrupt.json");
    CHECK(run_cli("verify --input /tmp/pvi_test_corrupt.json") == 1);

    // garbage input is a usage error
    std::ofstream("/tmp/pvi_test_garbage.json") << "{ not json";
    CHECK(run_cli("verify --input /tmp/pvi_test_garbage.json") == 2);
    CHECK(run_cli("verify --input /tmp/pvi_no_such_file.json") == 2);
}

TEST_CASE("cli okamoto and reduce-theta") {
    CHECK(run_cli("okamoto --input " + fixture("klein_curve.json") +
                  " --generator-word R5 --output /tmp/pvi_test_r5.json") == 0);
    Json r5 = load_json("/tmp/pvi_test_r5.json");
    CHECK(r5.at("residual") == "zero");
    CHECK(r5.at("curve").at("theta")[0] == "-3/7");

    std::ofstream("/tmp/pvi_test_theta.json")
        << R"({"theta":["2/7","2/7","2/7","4/7"]})";
    CHECK(run_cli("reduce-theta --input /tmp/pvi_test_theta.json "
                  "--output /tmp/pvi_test_alcove.json") == 0);
    Json alcove = load_json("/tmp/pvi_test_alcove.json");
    CHECK(alcove.at("representative") == Json::array({"-1/7", "-1/7", "-1/7", "5/7"}));
    CHECK(alcove.at("word") == Json::array({"R1", "R2", "R3", "R5"}));
}

TEST_CASE("cli hall") {
    CHECK(run_cli("hall --group tetrahedral --cross-check "
                  "--output /tmp/pvi_test_hall.json") == 0);
    Json hall = load_json("/tmp/pvi_test_hall.json");
    CHECK(hall.at("generating_triple_classes") == 1040);
    CHECK(hall.at("cross_check") == true);
    CHECK(run_cli("hall --group nosuchgroup") == 2);
}

TEST_CASE("cli build") {
    std::ofstream("/tmp/pvi_test_build.json") << R"({
        "x": "-1", "y": "1/2", "t": "3/8",
        "lambda": ["7/4", "7/4", "-3/4"],
        "mu": ["0", "17/8", "5/8"]
    })";
    CHECK(run_cli("build --input /tmp/pvi_test_build.json --indices 2,3 "
                  "--output /tmp/pvi_test_sys.json") == 0);
    Json built = load_json("/tmp/pvi_test_sys.json");
    CHECK(built.at("builders_agree") == true);
    CHECK(built.at("y_extracted") == "1/2");
}

TEST_CASE("cli orbit and monodromy") {
    CHECK(run_cli("orbit --group tetrahedral --output /tmp/pvi_test_orbits.json") == 0);
    Json orbits = load_json("/tmp/pvi_test_orbits.json");
    CHECK(orbits.at("classes_covered") == 1040);
    // orbit of a seed triple from a bundled group file
    CHECK(run_cli("orbit --input " + fixture("group_tetrahedral.json") +
                  " --triple 1,2,3 --output /tmp/pvi_test_orbit1.json") == 0);
    Json one = load_json("/tmp/pvi_test_orbit1.json");
    CHECK(one.at("orbit").at("branches").get<int>() >= 1);

    CHECK(run_cli("monodromy --input " + fixture("klein_system_s2.json") +
                  " --tol 1e-8 --max-order 400 "
                  "--output /tmp/pvi_test_mono.json") == 0);
    Json mono = load_json("/tmp/pvi_test_mono.json");
    CHECK(mono.at("group_order") == 336);
    CHECK(mono.at("pseudo_reflections") == Json::array({true, true, true}));
    CHECK(mono.at("defect").get<double>() < 1e-8);
}

TEST_CASE("cli flow handles both ranks") {
    CHECK(run_cli("flow --input " + fixture("klein_system_s2.json") +
                  " --t-target [0.45,0.0] --samples 4 "
                  "--output /tmp/pvi_test_flow3.json") == 0);
    Json f3 = load_json("/tmp/pvi_test_flow3.json");
    CHECK(f3.at("isomonodromy_deviation").get<double>() < 1e-6);
    CHECK(f3.at("samples").size() == 4);

    // rank-2 file written by the serialization test
    if (std::ifstream("/tmp/pvi_test_sys2.json").good()) {
        CHECK(run_cli("flow --input /tmp/pvi_test_sys2.json "
                      "--t-target [0.45,0.0] --samples 4 "
                      "--output /tmp/pvi_test_flow2.json") == 0);
        Json f2 = load_json("/tmp/pvi_test_flow2.json");
        CHECK(f2.at("isomonodromy_deviation").get<double>() < 1e-6);
    }
}

TEST_CASE("cli reports are deterministic") {
    CHECK(run_cli("reduce-theta --input /tmp/pvi_test_theta.json "
                  "--output /tmp/pvi_test_det1.json") == 0);
    CHECK(run_cli("reduce-theta --input /tmp/pvi_test_theta.json "
                  "--output /tmp/pvi_test_det2.json") == 0);
    CHECK(slurp("/tmp/pvi_test_det1.json") == slurp("/tmp/pvi_test_det2.json"));
    CHECK(!slurp("/tmp/pvi_test_det1.json").empty());
}
