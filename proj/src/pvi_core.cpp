#include "pvi/pvi_core.hpp"

namespace pvi {

Complex pvi_polynomial(const NumericJet &jet, const ThetaVector &theta) {
    return pvi_polynomial_value<Complex>(jet.t, jet.y, jet.yp, jet.ypp,
                                         to_complex(theta[0]), to_complex(theta[1]),
                                         to_complex(theta[2]), to_complex(theta[3]));
}

Rational pvi_polynomial_exact(const Rational &t, const Rational &y, const Rational &yp,
                              const Rational &ypp, const ThetaVector &theta) {
    return pvi_polynomial_value<Rational>(t, y, yp, ypp, theta[0], theta[1], theta[2],
                                          theta[3]);
}

RationalFunctionQ residual_exact(const SolutionCurve &curve) {
    using RF = RationalFunctionQ;
    RF yp = derivative_in(curve.y, curve.t);
    RF ypp = derivative_in(yp, curve.t);
    return pvi_polynomial_value<RF>(curve.t, curve.y, yp, ypp, RF(curve.theta[0]),
                                    RF(curve.theta[1]), RF(curve.theta[2]),
                                    RF(curve.theta[3]));
}

RationalFunctionQ x_from_solution(const SolutionCurve &curve) {
    using RF = RationalFunctionQ;
    const RF &y = curve.y, &t = curve.t;
    if (y.is_zero() || (y - RF(Rational(1))).is_zero() || (y - t).is_zero())
        throw degenerate_parameterization("y coincides with 0, 1 or t identically");
    RF yp = derivative_in(y, t);
    RF x = x_value<RF>(t, y, yp, RF(curve.theta[0]), RF(curve.theta[1]), RF(curve.theta[2]));
    if (x.is_zero())
        throw riccati_condition("x vanishes identically: Riccati solution");
    return x;
}

Complex x_from_jet(const NumericJet &jet, const ThetaVector &theta) {
    return x_value<Complex>(jet.t, jet.y, jet.yp, to_complex(theta[0]),
                            to_complex(theta[1]), to_complex(theta[2]));
}

Complex p_from_x(const Complex &x, const Complex &y, const Complex &t,
                 const ThetaVector &theta) {
    return p_value<Complex>(x, y, t, to_complex(theta[0]), to_complex(theta[1]),
                            to_complex(theta[2]));
}

} // namespace pvi
