#pragma once

#include "pvi/polynomial.hpp"

namespace pvi {

// Rational function of one variable s over Q, kept normalized:
// gcd(num, den) = 1 and den monic.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_{Rational(1)} {}
    RationalFunctionQ(PolynomialQ num, PolynomialQ den);
    RationalFunctionQ(const Rational &c) : num_(c), den_{Rational(1)} {}
    explicit RationalFunctionQ(const PolynomialQ &p) : num_(p), den_{Rational(1)} {}

    static RationalFunctionQ variable() { return RationalFunctionQ(PolynomialQ::variable()); }

    const PolynomialQ &num() const { return num_; }
    const PolynomialQ &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RationalFunctionQ operator-() const;
    RationalFunctionQ operator+(const RationalFunctionQ &o) const;
    RationalFunctionQ operator-(const RationalFunctionQ &o) const;
    RationalFunctionQ operator*(const RationalFunctionQ &o) const;
    RationalFunctionQ operator/(const RationalFunctionQ &o) const;
    RationalFunctionQ &operator+=(const RationalFunctionQ &o) { return *this = *this + o; }
    RationalFunctionQ &operator-=(const RationalFunctionQ &o) { return *this = *this - o; }
    RationalFunctionQ &operator*=(const RationalFunctionQ &o) { return *this = *this * o; }
    RationalFunctionQ &operator/=(const RationalFunctionQ &o) { return *this = *this / o; }
    bool operator==(const RationalFunctionQ &o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunctionQ &o) const { return !(*this == o); }

    // d/ds
    RationalFunctionQ derivative() const;

    Rational evaluate(const Rational &s0) const; // throws pole_error at poles
    Complex evaluate(const Complex &s0) const;

private:
    PolynomialQ num_, den_;
};

inline RationalFunctionQ operator*(const Rational &c, const RationalFunctionQ &f) {
    return RationalFunctionQ(c) * f;
}

// df/dt where both f and t are functions of the curve parameter s:
// (df/ds) / (dt/ds). Requires dt/ds not identically zero.
RationalFunctionQ derivative_in(const RationalFunctionQ &f, const RationalFunctionQ &t);

} // namespace pvi
