#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvi/fuchsian.hpp"
#include "pvi/golden.hpp"
#include "test_support.hpp"

using namespace pvi;
using pvi::testing::random_polynomial;
using pvi::testing::random_rational;
using pvi::testing::random_rational_function;

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(make_rational(3, 6)) == "1/2");
    CHECK(rational_to_string(make_rational(-4, 2)) == "-2");
    CHECK(rational_from_string("22/7") == make_rational(22, 7));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(rational_from_string("x"), math_error);
    CHECK_THROWS_AS(make_rational(1, 0), division_by_zero);
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        PolynomialQ a = random_polynomial(rng), b = random_polynomial(rng),
                    c = random_polynomial(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == PolynomialQ{});
    }
}

TEST_CASE("polynomial division and gcd") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        PolynomialQ a = random_polynomial(rng, 5);
        PolynomialQ b = pvi::testing::random_nonzero_polynomial(rng, 3);
        auto [q, r] = PolynomialQ::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());

        PolynomialQ g = pvi::testing::random_nonzero_polynomial(rng, 2);
        PolynomialQ gcd = poly_gcd(a * g, b * g);
        // gcd must contain g
        auto [q2, r2] = PolynomialQ::divmod(gcd, g);
        CHECK(r2.is_zero());
        // and divide both products
        CHECK(PolynomialQ::divmod(a * g, gcd).second.is_zero());
        CHECK(PolynomialQ::divmod(b * g, gcd).second.is_zero());
    }
    CHECK(poly_gcd(PolynomialQ{}, PolynomialQ{}).is_zero());
}

TEST_CASE("rational function normalization") {
    // (s^2-1)/(s-1) reduces to s+1, so evaluation at 1 is fine
    RationalFunctionQ f(PolynomialQ{Rational(-1), Rational(0), Rational(1)},
                        PolynomialQ{Rational(-1), Rational(1)});
    CHECK(f.num() == PolynomialQ{Rational(1), Rational(1)});
    CHECK(f.den() == PolynomialQ{Rational(1)});
    CHECK(f.evaluate(Rational(1)) == 2);

    // normalization is idempotent: rebuilding from num/den changes nothing
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        RationalFunctionQ g = random_rational_function(rng);
        CHECK(RationalFunctionQ(g.num(), g.den()) == g);
        CHECK(g.den().leading_coefficient() == 1);
        if (!g.is_zero()) CHECK(poly_gcd(g.num(), g.den()).degree() == 0);
    }
}

TEST_CASE("rational function field laws") {
    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        RationalFunctionQ a = random_rational_function(rng);
        RationalFunctionQ b = random_rational_function(rng);
        RationalFunctionQ c = random_rational_function(rng);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFunctionQ{});
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    RationalFunctionQ s = RationalFunctionQ::variable();
    const RationalFunctionQ one{Rational(1)};
    CHECK_THROWS_AS(one / RationalFunctionQ{}, division_by_zero);

    // telescoping sum: s/(s-1) + (-1)/(s-1) = 1
    RationalFunctionQ den = s - one;
    CHECK(s / den + (-one) / den == one);

    // f * (1/f) = 1 for f = (7s^2-7s+4)/s^3
    RationalFunctionQ f(PolynomialQ{Rational(4), Rational(-7), Rational(7)},
                        PolynomialQ::monomial(3, Rational(1)));
    CHECK(f * (one / f) == one);
}

TEST_CASE("derivatives commute with arithmetic") {
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        RationalFunctionQ a = random_rational_function(rng);
        RationalFunctionQ b = random_rational_function(rng);
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("derivative in t") {
    RationalFunctionQ s = RationalFunctionQ::variable();
    const RationalFunctionQ one{Rational(1)};
    RationalFunctionQ t = (s * s + one) / s;
    CHECK(derivative_in(t, t) == one);
    CHECK(derivative_in(t * t, t) == Rational(2) * t);
    CHECK_THROWS_AS(derivative_in(s, RationalFunctionQ(Rational(5))),
                    degenerate_parameterization);

    // Leibniz in the t-derivative as well
    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        RationalFunctionQ a = random_rational_function(rng, 2);
        RationalFunctionQ b = random_rational_function(rng, 2);
        CHECK(derivative_in(a * b, t) ==
              derivative_in(a, t) * b + a * derivative_in(b, t));
    }
}

TEST_CASE("evaluation and poles") {
    SolutionCurve kc = klein_curve();
    CHECK(kc.t.evaluate(Rational(2)) == make_rational(1, 2));
    CHECK(kc.t.evaluate(make_rational(5, 4)) == make_rational(121, 125));
    CHECK(kc.y.evaluate(Rational(3)) == make_rational(-299, 330));
    // the displayed curve has a pole at s = 2
    CHECK_THROWS_AS(kc.y.evaluate(Rational(2)), pole_error);

    // complex evaluation
    Complex z = kc.t.evaluate(Complex(2.0, 0.0));
    CHECK(std::abs(z - Complex(0.5, 0.0)) < 1e-14);

    // the two displayed forms of t(s) agree identically
    PolynomialQ q1{Rational(7), Rational(-7), Rational(4)};  // 4s^2-7s+7
    PolynomialQ q3{Rational(4), Rational(-1), Rational(4)};  // 4s^2-s+4
    PolynomialQ sm1{Rational(-1), Rational(1)};
    PolynomialQ s3 = PolynomialQ::monomial(3, Rational(1));
    RationalFunctionQ other =
        RationalFunctionQ(Rational(1)) -
        RationalFunctionQ(q3 * q3 * sm1 * sm1 * sm1, s3 * q1 * q1);
    CHECK(kc.t == other);
}

TEST_CASE("golden field arithmetic") {
    GoldenRational phi = GoldenRational::phi();
    CHECK(phi * phi == phi + GoldenRational(Rational(1)));
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i) {
        GoldenRational a(random_rational(rng), random_rational(rng));
        GoldenRational b(random_rational(rng), random_rational(rng));
        CHECK((a * b).norm() == a.norm() * b.norm());
        if (a.norm() != 0) {
            CHECK(a * a.inverse() == GoldenRational(Rational(1)));
        }
    }
    CHECK_THROWS_AS(GoldenRational(Rational(0)).inverse(), division_by_zero);
}
