#pragma once

#include "pvi/rational.hpp"

#include <cmath>

namespace pvi {

// Element a + b*phi of Q(phi), phi^2 = phi + 1. Exact coordinate field for
// the binary icosahedral quaternions.
struct GoldenRational {
    Rational a{0};
    Rational b{0};

    GoldenRational() = default;
    GoldenRational(Rational a_, Rational b_ = Rational(0))
        : a(std::move(a_)), b(std::move(b_)) {}

    static GoldenRational phi() { return {Rational(0), Rational(1)}; }

    bool operator==(const GoldenRational &o) const { return a == o.a && b == o.b; }
    bool operator!=(const GoldenRational &o) const { return !(*this == o); }
    bool operator<(const GoldenRational &o) const {
        return a != o.a ? a < o.a : b < o.b;
    }

    GoldenRational operator-() const { return {-a, -b}; }
    GoldenRational operator+(const GoldenRational &o) const { return {a + o.a, b + o.b}; }
    GoldenRational operator-(const GoldenRational &o) const { return {a - o.a, b - o.b}; }
    GoldenRational operator*(const GoldenRational &o) const {
        // (a+b phi)(c+d phi) = ac + bd + (ad + bc + bd) phi
        return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b};
    }

    // field norm to Q
    Rational norm() const { return a * a + a * b - b * b; }

    GoldenRational inverse() const {
        Rational n = norm();
        if (n == 0) throw division_by_zero("GoldenRational inverse of zero");
        // conjugate (a + b) - b phi over the norm
        return {(a + b) / n, -b / n};
    }
    GoldenRational operator/(const GoldenRational &o) const { return *this * o.inverse(); }

    double to_double() const {
        static const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        return a.get_d() + b.get_d() * golden;
    }
};

} // namespace pvi
