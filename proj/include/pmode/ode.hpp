// ode.hpp — adaptive Dormand–Prince RK45 for dense matrix states

#pragma once

#include <algorithm>
#include <cmath>

#include "pmode/types.hpp"

namespace pmode {

// Integrates dY/dt = f(Y) from t0 to t1. State must support Eigen-style
// arithmetic and .norm(). Used as an oracle path, so it shares nothing with
// the matrix-exponential route.
template <class State, class F>
State rk45_integrate(State y, Real t0, Real t1, F&& f, Real rtol = 1e-10,
                     Real atol = 1e-12, int max_steps = 200000) {
    static constexpr Real c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
    static constexpr Real a21 = 1.0 / 5;
    static constexpr Real a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr Real a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr Real a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr Real a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
    static constexpr Real b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr Real e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    Real t = t0;
    const Real dir = (t1 >= t0) ? 1.0 : -1.0;
    Real h = dir * std::max(1e-6, std::abs(t1 - t0) / 100.0);
    int steps = 0;
    while (dir * (t1 - t) > 0) {
        if (++steps > max_steps)
            throw numerical_error("rk45: step budget exhausted");
        if (dir * (t + h - t1) > 0) h = t1 - t;
        State k1 = f(y);
        State k2 = f(State(y + h * a21 * k1));
        State k3 = f(State(y + h * (a31 * k1 + a32 * k2)));
        State k4 = f(State(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
        State k5 = f(State(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
        State k6 = f(State(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 +
                                    a65 * k5)));
        State ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        State k7 = f(ynew);
        State errv = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 +
                          e7 * k7);
        const Real sc = atol + rtol * std::max(y.norm(), ynew.norm());
        const Real err = errv.norm() / sc;
        if (err <= 1.0) {
            t += h;
            y = ynew;
        }
        const Real fac =
            std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
        h *= fac;
        if (std::abs(h) < 1e-14 * std::max(Real(1), std::abs(t1 - t0)))
            throw numerical_error("rk45: step size underflow");
    }
    return y;
}

} // namespace pmode
