#include "pvi/rational_function.hpp"

namespace pvi {

RationalFunctionQ::RationalFunctionQ(PolynomialQ num, PolynomialQ den) {
    if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = PolynomialQ{};
        den_ = PolynomialQ(Rational(1));
        return;
    }
    PolynomialQ g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = PolynomialQ::divmod(num, g).first;
        den = PolynomialQ::divmod(den, g).first;
    }
    Rational lc = den.leading_coefficient();
    num_ = num * (Rational(1) / lc);
    den_ = den * (Rational(1) / lc);
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunctionQ RationalFunctionQ::operator+(const RationalFunctionQ &o) const {
    return RationalFunctionQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator-(const RationalFunctionQ &o) const {
    return RationalFunctionQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator*(const RationalFunctionQ &o) const {
    return RationalFunctionQ(num_ * o.num_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator/(const RationalFunctionQ &o) const {
    if (o.is_zero()) throw division_by_zero("division by the zero function");
    return RationalFunctionQ(num_ * o.den_, den_ * o.num_);
}

RationalFunctionQ RationalFunctionQ::derivative() const {
    // (n'd - nd')/d^2; common factor d cancels when d' shares it
    return RationalFunctionQ(num_.derivative() * den_ - num_ * den_.derivative(),
                             den_ * den_);
}

Rational RationalFunctionQ::evaluate(const Rational &s0) const {
    Rational d = den_.evaluate(s0);
    if (d == 0) throw pole_error("evaluation at a pole, s0 = " + rational_to_string(s0));
    return num_.evaluate(s0) / d;
}

Complex RationalFunctionQ::evaluate(const Complex &s0) const {
    Complex d = den_.evaluate(s0);
    if (d == Complex(0.0, 0.0)) throw pole_error("evaluation at a pole");
    return num_.evaluate(s0) / d;
}

RationalFunctionQ derivative_in(const RationalFunctionQ &f, const RationalFunctionQ &t) {
    RationalFunctionQ dt = t.derivative();
    if (dt.is_zero())
        throw degenerate_parameterization("dt/ds vanishes identically");
    return f.derivative() / dt;
}

} // namespace pvi
