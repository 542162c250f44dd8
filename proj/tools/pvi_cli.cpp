#include "pvi/schlesinger.hpp"
#include "pvi/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace pvi;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_bad_input = 2;

void write_report(const Json &report, const std::string &path) {
    if (!path.empty()) save_json(report, path);
}

Json invariants_json(const std::vector<Complex> &inv) {
    Json arr = Json::array();
    for (const auto &v : inv) arr.push_back(to_json(v));
    return arr;
}

Json matc_json(const MatC &m) {
    Json arr = Json::array();
    for (int i = 0; i < m.size(); ++i)
        for (int k = 0; k < m.size(); ++k) arr.push_back(to_json(m(i, k)));
    return arr;
}

Fuchsian3C system3_from_file(const Json &j) {
    return j.value("exact", false) ? to_complex(fuchsian3q_from_json(j))
                                   : fuchsian3c_from_json(j);
}

Fuchsian2C system2_from_file(const Json &j) {
    return j.value("exact", false) ? to_complex(fuchsian2q_from_json(j))
                                   : fuchsian2c_from_json(j);
}

int system_rank(const Json &j) {
    int rank = j.value("rank", 3);
    if (rank != 2 && rank != 3) throw math_error("unsupported rank in system file");
    return rank;
}

int run_verify(const std::string &input, const std::string &output) {
    SolutionCurve curve = curve_from_json(load_json(input));
    RationalFunctionQ res = residual_exact(curve);
    bool ok = res.is_zero();
    Json report{{"command", "verify"},
                {"theta", to_json(curve.theta)},
                {"residual", ok ? "zero" : "nonzero"},
                {"verified", ok}};
    if (!ok) report["residual_function"] = to_json(res);
    write_report(report, output);
    std::cout << "residual: " << (ok ? "zero" : "nonzero") << "\n";
    return ok ? exit_ok : exit_failed;
}

int run_okamoto(const std::string &input, const std::string &word_csv,
                const std::string &output) {
    SolutionCurve curve = curve_from_json(load_json(input));
    WeylWord w;
    std::string tok;
    for (char c : word_csv + ",") {
        if (c == ',') {
            if (!tok.empty()) w.push_back(generator_from_name(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    SolutionCurve image = apply_word(w, curve);
    bool ok = residual_exact(image).is_zero();
    Json report{{"command", "okamoto"},
                {"word", to_json(w)},
                {"curve", to_json(image)},
                {"residual", ok ? "zero" : "nonzero"}};
    write_report(report, output);
    std::cout << "theta -> [";
    for (int i = 0; i < 4; ++i)
        std::cout << rational_to_string(image.theta[i]) << (i < 3 ? ", " : "]\n");
    std::cout << "residual: " << (ok ? "zero" : "nonzero") << "\n";
    return ok ? exit_ok : exit_failed;
}

int run_reduce_theta(const std::string &input, const std::string &output) {
    Json j = load_json(input);
    ThetaVector theta = theta_from_json(j.contains("theta") ? j.at("theta") : j);
    AlcoveRepresentative rep = reduce_to_alcove(theta);
    AlcoveRepresentative canon = f4_canonical_form(theta);
    Json report{{"command", "reduce-theta"},
                {"input", to_json(theta)},
                {"representative", to_json(rep.theta)},
                {"word", to_json(rep.word)},
                {"f4_canonical", to_json(canon.theta)}};
    write_report(report, output);
    std::cout << "alcove representative: [";
    for (int i = 0; i < 4; ++i)
        std::cout << rational_to_string(rep.theta[i]) << (i < 3 ? ", " : "]\n");
    return exit_ok;
}

int run_build(const std::string &input, int j_idx, int k_idx, const std::string &output) {
    Json j = load_json(input);
    Rational x = rational_from_json(j.at("x"));
    Rational y = rational_from_json(j.at("y"));
    Rational t = rational_from_json(j.at("t"));
    auto three = [&](const char *key) {
        return std::array<Rational, 3>{rational_from_json(j.at(key).at(0)),
                                       rational_from_json(j.at(key).at(1)),
                                       rational_from_json(j.at(key).at(2))};
    };
    SpectralData3 sp(three("lambda"), three("mu"));
    Fuchsian3Q simple = build_simple<Rational>(x, y, t, sp);
    Fuchsian3Q full = build_full<Rational>(x, y, t, sp);
    bool match = trace_invariants(simple) == trace_invariants(full);
    Rational yjk = extract_y<Rational>(full, j_idx, k_idx);
    Json report{{"command", "build"},
                {"system_simple", to_json(simple)},
                {"system_full", to_json(full)},
                {"builders_agree", match},
                {"theta", to_json(theta_from_spectral(sp, 1, 2, 3))},
                {"y_indices", Json::array({j_idx, k_idx})},
                {"y_extracted", to_json(yjk)}};
    write_report(report, output);
    std::cout << "y_" << j_idx << k_idx << " = " << rational_to_string(yjk)
              << (match ? "" : "  (builder invariants disagree!)") << "\n";
    return match ? exit_ok : exit_failed;
}

int run_monodromy(const std::string &input, double tol, int max_order,
                  const std::string &output) {
    Json j = load_json(input);
    TransportSettings st;
    st.tol = std::min(1e-10, tol * 1e-3);
    MonodromyRep rep = system_rank(j) == 3 ? monodromy_rep(system3_from_file(j), st)
                                           : monodromy_rep(system2_from_file(j), st);
    Json report{{"command", "monodromy"}, {"defect", rep.defect}};
    Json mats = Json::array();
    for (const auto &m : rep.m) mats.push_back(matc_json(m));
    report["matrices"] = std::move(mats);
    report["invariants"] = invariants_json(monodromy_invariants(rep));
    Json refl = Json::array();
    for (int i = 0; i < 3; ++i) refl.push_back(is_pseudo_reflection(rep.m[i], tol));
    report["pseudo_reflections"] = std::move(refl);
    auto closure = group_closure({rep.m[0], rep.m[1], rep.m[2]}, tol, max_order);
    if (closure)
        report["group_order"] = closure->order;
    else
        report["group_order"] = "exceeds bound";
    write_report(report, output);
    std::cout << "defect: " << rep.defect << ", group order: "
              << (closure ? std::to_string(closure->order) : std::string("exceeds bound"))
              << "\n";
    return exit_ok;
}

template <class Sys>
int run_flow_typed(Sys sys, const Complex &t_target, int samples, double tol,
                   double threshold, const std::string &output) {
    FlowSettings fs;
    fs.tol = tol;
    std::vector<Sys> states{sys};
    Json path = Json::array();
    for (int i = 1; i <= samples; ++i) {
        Complex ti = sys.t + (t_target - sys.t) * (double(i) / samples);
        states.push_back(flow(states.back(), ti, fs));
        Json sample{{"t", to_json(ti)}, {"system", to_json(states.back())}};
        try {
            if constexpr (std::is_same_v<Sys, Fuchsian3C>)
                sample["y"] = to_json(extract_y<Complex>(states.back(), 2, 3, 1e-6));
            else
                sample["y"] = to_json(extract_y_2x2<Complex>(states.back(), 1e-6));
        } catch (const math_error &) {
            sample["y"] = nullptr;
        }
        path.push_back(std::move(sample));
    }
    TransportSettings ts;
    ts.tol = std::min(1e-11, tol);
    IsomonodromyReport iso =
        verify_isomonodromy(std::vector<Sys>{states.front(), states.back()}, ts);
    Json report{{"command", "flow"},
                {"samples", std::move(path)},
                {"isomonodromy_deviation", iso.max_deviation},
                {"defects", iso.defects},
                {"invariants_start", invariants_json(iso.invariants.front())},
                {"invariants_end", invariants_json(iso.invariants.back())}};
    write_report(report, output);
    std::cout << "flowed to " << t_target << ", isomonodromy deviation "
              << iso.max_deviation << "\n";
    return iso.max_deviation <= threshold ? exit_ok : exit_failed;
}

int run_flow(const std::string &input, const std::string &target, int samples, double tol,
             double threshold, const std::string &output) {
    Json j = load_json(input);
    Complex t_target = complex_from_json(Json::parse(target));
    if (system_rank(j) == 3)
        return run_flow_typed(system3_from_file(j), t_target, samples, tol, threshold,
                              output);
    return run_flow_typed(system2_from_file(j), t_target, samples, tol, threshold,
                          output);
}

int run_orbit(const std::string &group_name, const std::string &input,
              const std::string &triple_csv, const std::string &output) {
    FiniteGroup g = group_name.empty()
                        ? group_from_json(load_json(input))
                        : build_binary_polyhedral(polyhedral_kind_from_name(group_name));
    Json report{{"command", "orbit"}};
    if (!triple_csv.empty()) {
        Triple t{};
        if (std::sscanf(triple_csv.c_str(), "%d,%d,%d", &t[0], &t[1], &t[2]) != 3)
            throw math_error("--triple expects i,j,k");
        BraidOrbit orbit = orbit_of(g, t);
        report["orbit"] = to_json(orbit);
        std::cout << "orbit: " << orbit.branches << " branches, genus " << orbit.genus
                  << "\n";
    } else {
        auto orbits = enumerate_orbits(g);
        Json arr = Json::array();
        long total = 0;
        int max_branches = 0;
        for (const auto &o : orbits) {
            arr.push_back(to_json(o));
            total += o.branches;
            max_branches = std::max(max_branches, o.branches);
        }
        report["orbits"] = std::move(arr);
        report["orbit_count"] = orbits.size();
        report["classes_covered"] = total;
        report["max_branches"] = max_branches;
        std::cout << orbits.size() << " orbits over " << total
                  << " triple classes, largest " << max_branches << " branches\n";
    }
    write_report(report, output);
    return exit_ok;
}

int run_hall(const std::string &group_name, const std::string &input, bool cross_check,
             const std::string &output) {
    FiniteGroup g = group_name.empty()
                        ? group_from_json(load_json(input))
                        : build_binary_polyhedral(polyhedral_kind_from_name(group_name));
    long count = count_generating_triples(g);
    Json report{{"command", "hall"}, {"generating_triple_classes", count}};
    if (cross_check) {
        long mob = count_generating_triples_mobius(g);
        report["mobius_count"] = mob;
        report["cross_check"] = (mob == count);
        if (mob != count) {
            write_report(report, output);
            std::cout << "count " << count << " disagrees with Moebius " << mob << "\n";
            return exit_failed;
        }
    }
    write_report(report, output);
    std::cout << count << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Painleve VI toolkit: exact solution verification, Okamoto symmetries, "
                 "Fuchsian systems, monodromy, Schlesinger flows, braid orbits"};
    app.require_subcommand(1);

    std::string input, output, word, group, triple, target, indices = "2,3";
    double tol = 1e-8, threshold = 1e-6;
    int max_order = 10000, samples = 8;
    bool cross_check = false;

    auto *verify = app.add_subcommand("verify", "check a solution curve exactly");
    verify->add_option("--input", input)->required();
    verify->add_option("--output", output);

    auto *okamoto = app.add_subcommand("okamoto", "apply a symmetry word to a curve");
    okamoto->add_option("--input", input)->required();
    okamoto->add_option("--generator-word", word)->required();
    okamoto->add_option("--output", output);

    auto *reduce = app.add_subcommand("reduce-theta", "alcove representative of theta");
    reduce->add_option("--input", input)->required();
    reduce->add_option("--output", output);

    auto *build = app.add_subcommand("build", "Fuchsian systems from (x,y,t,spectral)");
    build->add_option("--input", input)->required();
    build->add_option("--output", output);
    build->add_option("--indices", indices, "j,k entry for y extraction");

    auto *mono = app.add_subcommand("monodromy", "numerical monodromy of a system file");
    mono->add_option("--input", input)->required();
    mono->add_option("--output", output);
    mono->add_option("--tol", tol);
    mono->add_option("--max-order", max_order);

    auto *flow_cmd = app.add_subcommand("flow", "Schlesinger flow to a target t");
    flow_cmd->add_option("--input", input)->required();
    flow_cmd->add_option("--t-target", target, "target t as JSON, e.g. [0.6,0.0]")
        ->required();
    flow_cmd->add_option("--samples", samples);
    flow_cmd->add_option("--tol", tol);
    flow_cmd->add_option("--threshold", threshold, "isomonodromy deviation for exit 0");
    flow_cmd->add_option("--output", output);

    auto *orbit = app.add_subcommand("orbit", "braid orbits of monodromy triples");
    orbit->add_option("--group", group, "tetrahedral|octahedral|icosahedral");
    orbit->add_option("--input", input, "group file (alternative to --group)");
    orbit->add_option("--triple", triple, "seed triple i,j,k for a single orbit");
    orbit->add_option("--output", output);

    auto *hall = app.add_subcommand("hall", "count generating-triple classes");
    hall->add_option("--group", group, "tetrahedral|octahedral|icosahedral");
    hall->add_option("--input", input, "group file (alternative to --group)");
    hall->add_flag("--cross-check", cross_check, "verify against the Moebius count");
    hall->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(input, output);
        if (okamoto->parsed()) return run_okamoto(input, word, output);
        if (reduce->parsed()) return run_reduce_theta(input, output);
        if (build->parsed()) {
            int j_idx = 2, k_idx = 3;
            if (std::sscanf(indices.c_str(), "%d,%d", &j_idx, &k_idx) != 2)
                throw math_error("--indices expects j,k");
            return run_build(input, j_idx, k_idx, output);
        }
        if (mono->parsed()) return run_monodromy(input, tol, max_order, output);
        if (flow_cmd->parsed())
            return run_flow(input, target, samples, std::min(tol, 1e-10), threshold,
                            output);
        if (orbit->parsed()) {
            if (group.empty() && input.empty())
                throw math_error("orbit needs --group or --input");
            return run_orbit(group, input, triple, output);
        }
        if (hall->parsed()) {
            if (group.empty() && input.empty())
                throw math_error("hall needs --group or --input");
            return run_hall(group, input, cross_check, output);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
