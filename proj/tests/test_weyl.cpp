#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvi/fuchsian.hpp"
#include "pvi/weyl.hpp"
#include "test_support.hpp"

using namespace pvi;
using G = SymmetryGenerator;
using pvi::testing::random_theta;

namespace {

ThetaVector klein_theta() {
    return {make_rational(2, 7), make_rational(2, 7), make_rational(2, 7),
            make_rational(4, 7)};
}

} // namespace

TEST_CASE("generator actions on theta") {
    ThetaVector k = klein_theta();
    CHECK(apply_to_theta(G::R5, k) == ThetaVector{make_rational(-3, 7), make_rational(-3, 7),
                                                  make_rational(-3, 7), make_rational(-1, 7)});
    CHECK(apply_to_theta(G::R5, apply_to_theta(G::R5, k)) == k);
    CHECK(apply_to_theta(G::X2, k) == ThetaVector{make_rational(-3, 7), make_rational(2, 7),
                                                  make_rational(2, 7), make_rational(9, 7)});
    CHECK(apply_to_theta(G::R4, k)[3] == Rational(2) - k[3]);
}

TEST_CASE("generators are involutions on theta") {
    std::mt19937 rng(41);
    for (int i = 0; i < 30; ++i) {
        ThetaVector th = random_theta(rng);
        for (G g : {G::R1, G::R2, G::R3, G::R4, G::R5, G::X1, G::X2, G::X3})
            CHECK(apply_to_theta(g, apply_to_theta(g, th)) == th);
    }
}

TEST_CASE("footnote word negates exactly theta4") {
    WeylWord word{G::R5, G::R1, G::R2, G::R3, G::R5, G::R1, G::R2, G::R3, G::R5};
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        ThetaVector th = random_theta(rng);
        ThetaVector image = apply_word(word, th);
        CHECK(image == ThetaVector{th[0], th[1], th[2], -th[3]});
    }
}

TEST_CASE("alcove reduction") {
    AlcoveRepresentative rep = reduce_to_alcove(klein_theta());
    CHECK(rep.theta == ThetaVector{make_rational(-1, 7), make_rational(-1, 7),
                                   make_rational(-1, 7), make_rational(5, 7)});
    CHECK(rep.word == WeylWord{G::R1, G::R2, G::R3, G::R5});

    // boundary point stays put with an empty word
    AlcoveRepresentative origin = reduce_to_alcove(ThetaVector{});
    CHECK(origin.theta == ThetaVector{});
    CHECK(origin.word.empty());

    // idempotence on representatives
    AlcoveRepresentative again = reduce_to_alcove(rep.theta);
    CHECK(again.theta == rep.theta);
    CHECK(again.word.empty());
}

TEST_CASE("alcove reduction is constant on orbits") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> pick(0, 4);
    const G gens[5] = {G::R1, G::R2, G::R3, G::R4, G::R5};
    for (int i = 0; i < 100; ++i) {
        ThetaVector th = random_theta(rng);
        ThetaVector rep = reduce_to_alcove(th).theta;
        CHECK(in_closed_alcove(rep));
        ThetaVector moved = th;
        for (int k = 0; k < 6; ++k) moved = apply_to_theta(gens[pick(rng)], moved);
        CHECK(reduce_to_alcove(moved).theta == rep);
        // the witness word really maps the input to the representative
        CHECK(apply_word(reduce_to_alcove(th).word, th) == rep);
    }
}

TEST_CASE("f4 equivalence") {
    ThetaVector k = klein_theta();
    SUBCASE("R5 image is equivalent with a valid witness") {
        ThetaVector image = apply_to_theta(G::R5, k);
        auto witness = f4_equivalent(k, image);
        REQUIRE(witness.has_value());
        CHECK(apply_word(*witness, k) == image);
    }
    SUBCASE("lattice translation is in the group") {
        ThetaVector shifted{k[0] + 1, k[1], k[2], k[3] - 1};
        auto witness = f4_equivalent(k, shifted);
        REQUIRE(witness.has_value());
        CHECK(apply_word(*witness, k) == shifted);
    }
    SUBCASE("incommensurate parameters are inequivalent") {
        CHECK(!f4_equivalent(ThetaVector{}, ThetaVector{make_rational(1, 3), Rational(0),
                                                        Rational(0), Rational(0)}));
    }
    SUBCASE("equivalence relation laws") {
        std::mt19937 rng(53);
        for (int i = 0; i < 10; ++i) {
            ThetaVector a = random_theta(rng);
            CHECK(f4_equivalent(a, a));
            ThetaVector b = apply_to_theta(G::X2, apply_to_theta(G::R5, a));
            auto ab = f4_equivalent(a, b);
            auto ba = f4_equivalent(b, a);
            REQUIRE(ab);
            REQUIRE(ba);
            CHECK(apply_word(*ba, b) == a);
            ThetaVector c = apply_to_theta(G::X1, b);
            auto ac = f4_equivalent(a, c);
            REQUIRE(ac);
            CHECK(apply_word(*ac, a) == c);
        }
    }
}

TEST_CASE("solution-level actions preserve zero residual") {
    SolutionCurve kc = klein_curve();
    SUBCASE("R1 keeps the curve and flips theta1") {
        SolutionCurve image = apply_to_solution(G::R1, kc);
        CHECK(image.y == kc.y);
        CHECK(image.t == kc.t);
        CHECK(image.theta[0] == -kc.theta[0]);
        CHECK(residual_exact(image).is_zero());
    }
    SUBCASE("R5 shifts by delta over x") {
        SolutionCurve image = apply_to_solution(G::R5, kc);
        CHECK(image.theta == ThetaVector{make_rational(-3, 7), make_rational(-3, 7),
                                         make_rational(-3, 7), make_rational(-1, 7)});
        CHECK(residual_exact(image).is_zero());
    }
    SUBCASE("X1 is an involution on curves") {
        SolutionCurve image = apply_to_solution(G::X1, kc);
        CHECK(residual_exact(image).is_zero());
        SolutionCurve back = apply_to_solution(G::X1, image);
        CHECK(back.y == kc.y);
        CHECK(back.t == kc.t);
        CHECK(back.theta == kc.theta);
    }
    SUBCASE("X2 and X3 produce solutions") {
        CHECK(residual_exact(apply_to_solution(G::X2, kc)).is_zero());
        CHECK(residual_exact(apply_to_solution(G::X3, kc)).is_zero());
    }
    SUBCASE("R5 on a Riccati curve reports the condition") {
        // theta4 = 3/2 keeps delta nonzero, so R5 genuinely needs x
        RationalFunctionQ s = RationalFunctionQ::variable();
        ThetaVector th{make_rational(-1, 2), Rational(0), Rational(0),
                       make_rational(3, 2)};
        SolutionCurve riccati(s, s * s, th);
        REQUIRE(residual_exact(riccati).is_zero());
        CHECK_THROWS_AS(apply_to_solution(G::R5, riccati), riccati_condition);
    }
    SUBCASE("R5 fixes curves on the delta = 0 wall") {
        RationalFunctionQ s = RationalFunctionQ::variable();
        ThetaVector th{make_rational(-1, 2), Rational(0), Rational(0),
                       make_rational(1, 2)};
        SolutionCurve wall(s, s * s, th);
        CHECK(th.delta() == 0);
        SolutionCurve image = apply_to_solution(G::R5, wall);
        CHECK(image.y == wall.y);
        CHECK(image.theta == th);
    }
}
