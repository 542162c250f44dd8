#pragma once

#include "pvi/rational_function.hpp"

#include <array>

namespace pvi {

// The four PVI parameters. delta = (th1+th2+th3+th4)/2 drives the
// nontrivial Okamoto transformation.
struct ThetaVector {
    std::array<Rational, 4> th{Rational(0), Rational(0), Rational(0), Rational(0)};

    ThetaVector() = default;
    ThetaVector(Rational t1, Rational t2, Rational t3, Rational t4)
        : th{std::move(t1), std::move(t2), std::move(t3), std::move(t4)} {}

    const Rational &operator[](int i) const { return th[static_cast<size_t>(i)]; }
    Rational &operator[](int i) { return th[static_cast<size_t>(i)]; }
    bool operator==(const ThetaVector &o) const { return th == o.th; }
    bool operator!=(const ThetaVector &o) const { return !(*this == o); }
    bool operator<(const ThetaVector &o) const { return th < o.th; }

    Rational delta() const { return (th[0] + th[1] + th[2] + th[3]) / 2; }
};

// (t, y, y', y'') at a point; the polynomial P needs no further guards,
// x does (y must avoid 0, 1, t).
struct NumericJet {
    Complex t, y, yp, ypp;
};

// Algebraic solution candidate: y and t as exact rational functions of a
// curve parameter s.
struct SolutionCurve {
    RationalFunctionQ y;
    RationalFunctionQ t;
    ThetaVector theta;

    SolutionCurve(RationalFunctionQ y_, RationalFunctionQ t_, ThetaVector theta_)
        : y(std::move(y_)), t(std::move(t_)), theta(std::move(theta_)) {
        if (t.is_constant())
            throw degenerate_parameterization("solution curve needs nonconstant t");
    }
};

// P(t, y, y', y'', theta): the PVI equation cleared of denominators, i.e.
// (rhs - y'') * t^2 (t-1)^2 y (y-1) (y-t). Zero exactly on solutions.
// Only th1^2, th2^2, th3^2 and (th4-1)^2 enter.
template <class F>
F pvi_polynomial_value(const F &t, const F &y, const F &yp, const F &ypp,
                       const F &th1, const F &th2, const F &th3, const F &th4) {
    const F one(1), half = F(1) / F(2);
    F ym1 = y - one, ymt = y - t, tm1 = t - one;
    F A = y * ym1 * ymt;
    F t2tm12 = t * t * tm1 * tm1;

    F term_ypp = -(t2tm12 * A * ypp);
    F term_yp2 = half * t2tm12 * (ym1 * ymt + y * ymt + y * ym1) * yp * yp;
    F term_yp = -(t * tm1 * (tm1 * A + t * A + t * tm1 * y * ym1) * yp);
    F th4m1 = th4 - one;
    F term_0 = half * (th4m1 * th4m1 * A * A
                       - th1 * th1 * t * ym1 * ym1 * ymt * ymt
                       + th3 * th3 * tm1 * y * y * ymt * ymt
                       + (one - th2 * th2) * t * tm1 * y * y * ym1 * ym1);
    return term_ypp + term_yp2 + term_yp + term_0;
}

Complex pvi_polynomial(const NumericJet &jet, const ThetaVector &theta);
Rational pvi_polynomial_exact(const Rational &t, const Rational &y, const Rational &yp,
                              const Rational &ypp, const ThetaVector &theta);

// P with y', y'' taken as derivatives in t along the curve; the zero
// function exactly when the curve solves PVI.
RationalFunctionQ residual_exact(const SolutionCurve &curve);

// 2x = ((t-1)y' - th1)/y + (y' - 1 - th2)/(y-t) - (t y' + th3)/(y-1)
template <class F>
F x_value(const F &t, const F &y, const F &yp, const F &th1, const F &th2, const F &th3) {
    const F one(1);
    F num = (t - one) * yp - th1;
    F x2 = num / y + (yp - one - th2) / (y - t) - (t * yp + th3) / (y - one);
    return x2 / F(2);
}

// x as an exact rational function along a curve; throws riccati_condition
// when x vanishes identically.
RationalFunctionQ x_from_solution(const SolutionCurve &curve);
Complex x_from_jet(const NumericJet &jet, const ThetaVector &theta);

// p = x + th1/y + th2/(y-t) + th3/(y-1), poles (a1,a2,a3) = (0,t,1)
template <class F>
F p_value(const F &x, const F &y, const F &t, const F &th1, const F &th2, const F &th3) {
    return x + th1 / y + th2 / (y - t) + th3 / (y - F(1));
}

Complex p_from_x(const Complex &x, const Complex &y, const Complex &t,
                 const ThetaVector &theta);

// the defining relation of x solved for y': the inverse of x_value in yp
template <class F>
F yprime_from_x(const F &x, const F &y, const F &t, const F &th1, const F &th2,
                const F &th3) {
    const F one(1);
    F coeff = (t - one) / y + one / (y - t) - t / (y - one);
    F rhs = F(2) * x + th1 / y + (one + th2) / (y - t) + th3 / (y - one);
    return rhs / coeff;
}

} // namespace pvi
