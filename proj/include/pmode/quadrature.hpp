// quadrature.hpp — adaptive Gauss–Kronrod 15(7) on a segmented interval

#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "pmode/types.hpp"

namespace pmode {

namespace detail {

// QUADPACK dqk15 nodes and weights on [-1, 1].
inline constexpr Real kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr Real kGk15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr Real kGk15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline Real mag(Real x) { return std::abs(x); }
inline Real mag(const Complex& x) { return std::abs(x); }

template <class F, class T>
void gk15(F&& f, Real a, Real b, T& kronrod, Real& err) {
    const Real c = 0.5 * (a + b);
    const Real h = 0.5 * (b - a);
    T resk = kGk15WeightsK[7] * f(c);
    T resg = kGk15WeightsG[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        const T fsum = f(c - h * kGk15Nodes[j]) + f(c + h * kGk15Nodes[j]);
        resk += kGk15WeightsK[j] * fsum;
        if (j % 2 == 1) resg += kGk15WeightsG[j / 2] * fsum;
    }
    kronrod = resk * h;
    err = mag(resk - resg) * std::abs(h);
}

} // namespace detail

template <class T>
struct QuadResult {
    T value{};
    Real error = 0;      // estimated absolute error
    int intervals = 0;
    bool converged = false;
};

// Integrate f over the union of [pts[0], pts[1]], ..., splitting the worst
// segment until the summed error estimate drops below abs_tol.
template <class F, class T = std::invoke_result_t<F, Real>>
QuadResult<T> adaptive_gk(F&& f, std::vector<Real> pts, Real abs_tol,
                          int max_intervals = 5000) {
    struct Seg {
        Real a, b, err;
        T val;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    std::priority_queue<Seg> q;
    std::sort(pts.begin(), pts.end());
    T total{};
    Real total_err = 0;
    int count = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i + 1] > pts[i])) continue;
        T v;
        Real e;
        detail::gk15(f, pts[i], pts[i + 1], v, e);
        total += v;
        total_err += e;
        q.push({pts[i], pts[i + 1], e, v});
        ++count;
    }
    while (total_err > abs_tol && count < max_intervals && !q.empty()) {
        Seg s = q.top();
        q.pop();
        const Real m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) continue;  // interval at machine resolution
        T v1, v2;
        Real e1, e2;
        detail::gk15(f, s.a, m, v1, e1);
        detail::gk15(f, m, s.b, v2, e2);
        total += v1 + v2 - s.val;
        total_err += e1 + e2 - s.err;
        q.push({s.a, m, e1, v1});
        q.push({m, s.b, e2, v2});
        ++count;
    }
    QuadResult<T> r;
    r.value = total;
    r.error = total_err;
    r.intervals = count;
    r.converged = total_err <= abs_tol;
    return r;
}

template <class F, class T = std::invoke_result_t<F, Real>>
QuadResult<T> adaptive_gk(F&& f, Real a, Real b, Real abs_tol,
                          int max_intervals = 5000) {
    return adaptive_gk(std::forward<F>(f), std::vector<Real>{a, b}, abs_tol,
                       max_intervals);
}

} // namespace pmode
