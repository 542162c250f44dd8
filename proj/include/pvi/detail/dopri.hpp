#pragma once

#include "pvi/rational.hpp"

#include <algorithm>
#include <cmath>

namespace pvi::detail {

// Dormand-Prince 5(4) adaptive step over any state with
// state + state, state * Complex and a max-abs norm.
template <class State, class Rhs, class Norm>
State dopri_integrate(const Rhs &rhs, State y, double tau0, double tau1, double tol,
                      long &steps, long max_steps, const Norm &norm) {
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

    double tau = tau0, h = 0.05 * (tau1 - tau0);
    while (tau < tau1) {
        if (++steps > max_steps)
            throw math_error("adaptive integration exceeded the step budget");
        h = std::min(h, tau1 - tau);
        State k1 = rhs(tau, y);
        State k2 = rhs(tau + c2 * h, y + k1 * Complex(a21 * h));
        State k3 = rhs(tau + c3 * h, y + k1 * Complex(a31 * h) + k2 * Complex(a32 * h));
        State k4 = rhs(tau + c4 * h, y + k1 * Complex(a41 * h) + k2 * Complex(a42 * h) +
                                         k3 * Complex(a43 * h));
        State k5 = rhs(tau + c5 * h, y + k1 * Complex(a51 * h) + k2 * Complex(a52 * h) +
                                         k3 * Complex(a53 * h) + k4 * Complex(a54 * h));
        State k6 = rhs(tau + h, y + k1 * Complex(a61 * h) + k2 * Complex(a62 * h) +
                                    k3 * Complex(a63 * h) + k4 * Complex(a64 * h) +
                                    k5 * Complex(a65 * h));
        State ynew = y + k1 * Complex(b1 * h) + k3 * Complex(b3 * h) +
                     k4 * Complex(b4 * h) + k5 * Complex(b5 * h) + k6 * Complex(b6 * h);
        State k7 = rhs(tau + h, ynew);
        State errs = k1 * Complex(e1 * h) + k3 * Complex(e3 * h) + k4 * Complex(e4 * h) +
                     k5 * Complex(e5 * h) + k6 * Complex(e6 * h) + k7 * Complex(e7 * h);
        double err = norm(errs);
        double tolerance = tol * std::max(1.0, norm(y));
        if (err <= tolerance) {
            tau += h;
            y = std::move(ynew);
        }
        double factor = err > 0 ? 0.9 * std::pow(tolerance / err, 0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (std::abs(h) < 1e-14 * std::abs(tau1 - tau0))
            throw math_error("adaptive integration step underflow");
    }
    return y;
}

} // namespace pvi::detail
