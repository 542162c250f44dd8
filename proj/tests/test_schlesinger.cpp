#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvi/schlesinger.hpp"
#include "pvi/weyl.hpp"
#include "test_support.hpp"

using namespace pvi;

namespace {

// tame 2x2 flow data with mu1 = 0, found by rejection sampling
struct TwoByTwoSample {
    Fuchsian2Q system;
    ThetaVector theta;
};

TwoByTwoSample tame_2x2_sample() {
    ThetaVector th{make_rational(7, 4), make_rational(7, 4), make_rational(-3, 4),
                   make_rational(-3, 2)};
    Rational delta = th.delta();
    SpectralData3 sp({th[0], th[1], th[2]}, {Rational(0), delta - th[3], delta});
    Fuchsian3Q full = build_full<Rational>(Rational(-1), make_rational(1, 2),
                                           make_rational(3, 8), sp);
    return {restrict_to_2x2(full), th};
}

Fuchsian3C commuting_system() {
    SpectralData3 sp({make_rational(1, 3), make_rational(1, 5), make_rational(1, 7)},
                     {make_rational(1, 3), make_rational(1, 5), make_rational(1, 7)});
    Fuchsian3C sys{MatC(3), MatC(3), MatC(3), Complex(0.4, 0.0), sp};
    sys.B1(0, 0) = Complex(1.0 / 3, 0.0);
    sys.B2(1, 1) = Complex(0.2, 0.0);
    sys.B3(2, 2) = Complex(1.0 / 7, 0.0);
    return sys;
}

} // namespace

TEST_CASE("schlesinger right-hand side structure") {
    Fuchsian3C c = commuting_system();
    auto rhs = schlesinger_rhs(c.B1, c.B2, c.B3, c.t);
    for (const auto &m : rhs) CHECK(max_abs(m) == 0.0);

    // derivatives are traceless and sum to zero for any residues
    Fuchsian3C k = to_complex(klein_family(Rational(2)));
    auto rk = schlesinger_rhs(k.B1, k.B2, k.B3, k.t);
    CHECK(std::abs(rk[0].trace()) < 1e-15);
    CHECK(std::abs(rk[1].trace()) < 1e-15);
    CHECK(std::abs(rk[2].trace()) < 1e-15);
    CHECK(max_abs(rk[0] + rk[1] + rk[2]) < 1e-15);
    CHECK_THROWS_AS(schlesinger_rhs(k.B1, k.B2, k.B3, Complex(0.0, 0.0)),
                    degenerate_parameterization);
}

TEST_CASE("t paths avoid the fixed singularities") {
    auto pieces = plan_t_path(Complex(-0.5, 0.0), Complex(0.5, 0.0), 0.1);
    REQUIRE(pieces.size() == 3); // line, detour arc around 0, line
    double closest = 1.0;
    for (const auto &p : pieces)
        for (int i = 0; i <= 50; ++i)
            closest = std::min(closest, std::abs(p.at(i / 50.0)));
    CHECK(closest >= 0.1 - 1e-12);
    CHECK(std::abs(pieces.back().at(1.0) - Complex(0.5, 0.0)) < 1e-15);
    CHECK_THROWS_AS(plan_t_path(Complex(0.05, 0.0), Complex(0.5, 0.0), 0.1),
                    degenerate_parameterization);
}

TEST_CASE("commuting initial data stays constant") {
    Fuchsian3C sys = commuting_system();
    Fuchsian3C moved = flow(sys, Complex(0.7, 0.0));
    CHECK(distance(moved.B1, sys.B1) < 1e-12);
    CHECK(distance(moved.B2, sys.B2) < 1e-12);
    CHECK(distance(moved.B3, sys.B3) < 1e-12);
}

TEST_CASE("flows reverse and conserve the spectral data") {
    Fuchsian3C sys = to_complex(normalize_residue_sum(klein_family(make_rational(3, 2))));
    FlowSettings fs;
    fs.tol = 1e-12;
    Fuchsian3C there = flow(sys, Complex(0.7, 0.0), fs);
    Fuchsian3C back = flow(there, sys.t, fs);
    CHECK(distance(back.B1, sys.B1) < 1e-8);
    CHECK(distance(back.B2, sys.B2) < 1e-8);
    CHECK(distance(back.B3, sys.B3) < 1e-8);

    // eigenvalue data of each residue and of the sum is conserved
    CHECK(std::abs(there.B1.trace() - Complex(0.5, 0.0)) < 1e-10);
    auto cp0 = char_poly_3(sys.residue_sum());
    auto cp1 = char_poly_3(there.residue_sum());
    for (int i = 0; i < 3; ++i) CHECK(std::abs(cp0[static_cast<size_t>(i)] -
                                               cp1[static_cast<size_t>(i)]) < 1e-10);
    // rank-one character persists: second exterior invariants stay zero
    auto second_invariant = [](const MatC &m) {
        Complex tr = m.trace();
        return (tr * tr - (m * m).trace()) / 2.0;
    };
    CHECK(std::abs(second_invariant(there.B1)) < 1e-10);
    CHECK(std::abs(determinant(there.B1)) < 1e-10);
}

TEST_CASE("klein flow tracks the exact solution branch") {
    SolutionCurve kc = klein_curve();
    Rational s0(3, 2), s1(9, 5);
    Fuchsian3C state = to_complex(normalize_residue_sum(klein_family(s0)));
    FlowSettings fs;
    fs.tol = 1e-12;
    for (int k = 1; k <= 6; ++k) {
        Rational sk = s0 + (s1 - s0) * make_rational(k, 6);
        state = flow(state, to_complex(kc.t.evaluate(sk)), fs);
        Complex y_flow = extract_y<Complex>(state, 2, 3, 1e-6);
        Complex y_exact = to_complex(kc.y.evaluate(sk));
        CHECK(std::abs(y_flow - y_exact) < 1e-6);
    }
}

TEST_CASE("2x2 flow recovers the initial y and closes the PVI equation") {
    auto sample = tame_2x2_sample();
    Rational y0 = extract_y_2x2<Rational>(sample.system);
    CHECK(y0 == make_rational(1, 2));
    Fuchsian2C state = to_complex(sample.system);
    FlowSettings fs;
    fs.tol = 1e-12;

    // flowing away and back recovers the start
    Fuchsian2C round = flow(flow(state, Complex(0.5, 0.0), fs), state.t, fs);
    CHECK(std::abs(extract_y_2x2<Complex>(round, 1e-6) - Complex(0.5, 0.0)) < 1e-8);

    const ThetaVector &th = sample.theta;
    double h = 0.004, worst_p = 0.0, worst_cross = 0.0;
    Fuchsian2C cur = state;
    for (int j = 0; j < 10; ++j) {
        Complex tc(0.375 + 0.012 * (j + 1), 0.0);
        cur = flow(cur, tc, fs);
        std::array<Complex, 5> ys, yps;
        for (int m = -2; m <= 2; ++m) {
            Fuchsian2C stencil = flow(cur, tc + Complex(m * h, 0.0), fs);
            Complex ym = extract_y_2x2<Complex>(stencil, 1e-6);
            Complex xm = recover_x<Complex>(embed_2x2(stencil), ym, 1e-6);
            ys[static_cast<size_t>(m + 2)] = ym;
            yps[static_cast<size_t>(m + 2)] =
                yprime_from_x<Complex>(xm, ym, tc + Complex(m * h, 0.0),
                                       to_complex(th[0]), to_complex(th[1]),
                                       to_complex(th[2]));
        }
        // cross-check the two derivative routes
        Complex yp_fd = (ys[0] - 8.0 * ys[1] + 8.0 * ys[3] - ys[4]) / (12.0 * h);
        worst_cross = std::max(worst_cross, std::abs(yp_fd - yps[2]));
        Complex ypp = (yps[0] - 8.0 * yps[1] + 8.0 * yps[3] - yps[4]) / (12.0 * h);
        NumericJet jet{tc, ys[2], yps[2], ypp};
        worst_p = std::max(worst_p, std::abs(pvi_polynomial(jet, th)));
    }
    CHECK(worst_p < 1e-6);
    CHECK(worst_cross < 1e-4);
}

TEST_CASE("quadratures") {
    SUBCASE("constant cases") {
        std::vector<Complex> t{Complex(0.3, 0.0), Complex(0.4, 0.0), Complex(0.5, 0.0)};
        std::vector<Complex> y{Complex(2.0), Complex(2.1), Complex(2.2)};
        std::vector<Complex> x{Complex(1.0), Complex(1.0), Complex(1.0)};
        // theta4 = 1 freezes log k
        ThetaVector th_k{make_rational(1, 3), make_rational(1, 5), make_rational(1, 2),
                         Rational(1)};
        auto qk = quadratures(y, x, th_k, t);
        CHECK(std::abs(qk.back().log_k) < 1e-15);
        // delta = 1 freezes log l
        ThetaVector th_l{make_rational(1, 2), make_rational(1, 2), make_rational(1, 2),
                         make_rational(1, 2)};
        CHECK(th_l.delta() == 1);
        auto ql = quadratures(y, x, th_l, t);
        CHECK(std::abs(ql.back().log_l) < 1e-15);
    }
    SUBCASE("the conjugated full family is horizontal") {
        SolutionCurve kc = klein_curve();
        RationalFunctionQ kx = x_from_solution(kc);
        Rational sc(3, 2), ds = make_rational(1, 25600);
        const int n = 513, stride = 128;
        std::vector<Complex> ypath, xpath, tpath;
        std::vector<Rational> sgrid;
        for (int i = 0; i < n; ++i) {
            Rational si = sc + ds * Rational(i - (n - 1) / 2);
            sgrid.push_back(si);
            ypath.push_back(to_complex(kc.y.evaluate(si)));
            xpath.push_back(to_complex(kx.evaluate(si)));
            tpath.push_back(to_complex(kc.t.evaluate(si)));
        }
        auto qs = quadratures(ypath, xpath, kc.theta, tpath);
        auto family_at = [&](int i) {
            Fuchsian3Q bq = build_full<Rational>(kx.evaluate(sgrid[static_cast<size_t>(i)]),
                                                 kc.y.evaluate(sgrid[static_cast<size_t>(i)]),
                                                 kc.t.evaluate(sgrid[static_cast<size_t>(i)]),
                                                 klein_spectral());
            Fuchsian3C bc = to_complex(bq);
            Complex l = std::exp(qs[static_cast<size_t>(i)].log_l);
            Complex k = std::exp(qs[static_cast<size_t>(i)].log_k);
            MatC h(3), hi(3);
            h(0, 0) = l;
            h(1, 1) = k;
            h(2, 2) = Complex(1.0);
            hi(0, 0) = Complex(1.0) / l;
            hi(1, 1) = Complex(1.0) / k;
            hi(2, 2) = Complex(1.0);
            return Fuchsian3C{h * bc.B1 * hi, h * bc.B2 * hi, h * bc.B3 * hi, bc.t,
                              bq.spectral};
        };
        std::array<Fuchsian3C, 5> f = {family_at(0), family_at(stride), family_at(2 * stride),
                                       family_at(3 * stride), family_at(4 * stride)};
        Complex dtds = to_complex(kc.t.derivative().evaluate(sc));
        double dstep = to_double(ds) * stride;
        auto rhs = schlesinger_rhs(f[2].B1, f[2].B2, f[2].B3, f[2].t);
        auto d_dt = [&](auto get) {
            MatC num = get(f[0]) * Complex(1.0) - get(f[1]) * Complex(8.0) +
                       get(f[3]) * Complex(8.0) - get(f[4]) * Complex(1.0);
            return num * (Complex(1.0 / (12.0 * dstep)) / dtds);
        };
        double residual = 0.0;
        residual = std::max(residual,
                            distance(d_dt([](const Fuchsian3C &s) { return s.B1; }), rhs[0]));
        residual = std::max(residual,
                            distance(d_dt([](const Fuchsian3C &s) { return s.B2; }), rhs[1]));
        residual = std::max(residual,
                            distance(d_dt([](const Fuchsian3C &s) { return s.B3; }), rhs[2]));
        CHECK(residual < 1e-6);
    }
    SUBCASE("the two quadrature equations exchange under the mu1-mu2 swap") {
        // the Okamoto word (R1 R2 R3) R5 (R1 R2 R3) sends theta4 to delta ...
        using G = SymmetryGenerator;
        WeylWord word{G::R1, G::R2, G::R3, G::R5, G::R1, G::R2, G::R3};
        std::mt19937 rng(101);
        for (int i = 0; i < 20; ++i) {
            ThetaVector th = pvi::testing::random_theta(rng);
            CHECK(apply_word(word, th)[3] == th.delta());
        }
        // ... and substituting (y, theta4) -> (y - (delta-theta4)/p, delta)
        // into the log-k equation reproduces the log-l right-hand side
        ThetaVector th{make_rational(2, 7), make_rational(2, 7), make_rational(2, 7),
                       make_rational(4, 7)};
        Complex delta = to_complex(th.delta());
        Complex th4 = to_complex(th[3]);
        std::uniform_real_distribution<double> u(0.2, 0.8);
        for (int i = 0; i < 10; ++i) {
            Complex t(u(rng), 0.0), y(2.0 + u(rng), 0.0), p(0.5 + u(rng), 0.0);
            Complex lhs = (delta - 1.0) / (t * (t - 1.0)) * (y - t - (delta - th4) / p);
            Complex y_shift = y - (delta - th4) / p;
            Complex rhs = (delta - 1.0) * (y_shift - t) / (t * (t - 1.0));
            CHECK(std::abs(lhs - rhs) < 1e-14);
        }
    }
    SUBCASE("p vanishing is reported") {
        std::vector<Complex> t{Complex(0.3, 0.0), Complex(0.4, 0.0)};
        std::vector<Complex> y{Complex(2.0), Complex(2.0)};
        // choose x so that p = x + sum th_i/(y - a_i) = 0 at the first node
        ThetaVector th{Rational(1), Rational(0), Rational(0), Rational(0)};
        std::vector<Complex> x{Complex(-0.5, 0.0), Complex(1.0, 0.0)};
        CHECK_THROWS_AS(quadratures(y, x, th, t), degenerate_parameterization);
    }
}

TEST_CASE("isomonodromy verification") {
    TransportSettings st;
    SUBCASE("a constant commuting family has zero deviation") {
        Fuchsian3C a = commuting_system();
        Fuchsian3C b = a;
        b.t = Complex(0.6, 0.0);
        IsomonodromyReport rep = verify_isomonodromy(std::vector<Fuchsian3C>{a, b}, st);
        CHECK(rep.max_deviation < 1e-9);
    }
    SUBCASE("the klein family is isomonodromic, a perturbation is not") {
        Fuchsian3C a = to_complex(klein_family(Rational(2)));
        Fuchsian3C b = to_complex(klein_family(make_rational(5, 4)));
        IsomonodromyReport rep = verify_isomonodromy(std::vector<Fuchsian3C>{a, b}, st);
        CHECK(rep.max_deviation < 1e-6);

        Fuchsian3C bad = b;
        bad.B2 = bad.B2 * Complex(1.01, 0.0);
        IsomonodromyReport repb = verify_isomonodromy(std::vector<Fuchsian3C>{a, bad}, st);
        CHECK(repb.max_deviation > 1e-3);
    }
    SUBCASE("deviation shrinks with the integration tolerance") {
        Fuchsian3C a = to_complex(klein_family(Rational(2)));
        Fuchsian3C b = to_complex(klein_family(make_rational(5, 4)));
        TransportSettings loose;
        loose.tol = 1e-6;
        TransportSettings tight;
        tight.tol = 1e-12;
        double dev_loose =
            verify_isomonodromy(std::vector<Fuchsian3C>{a, b}, loose).max_deviation;
        double dev_tight =
            verify_isomonodromy(std::vector<Fuchsian3C>{a, b}, tight).max_deviation;
        CHECK(dev_tight < dev_loose);
        CHECK(dev_tight < 1e-9);
    }
}
