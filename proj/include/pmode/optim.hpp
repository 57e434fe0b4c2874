// optim.hpp — derivative-free Nelder–Mead with optional box bounds

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "pmode/types.hpp"

namespace pmode {

struct NelderMeadOptions {
    int max_iter = 4000;
    Real xtol = 1e-10;
    Real ftol = 1e-12;
    Real init_step = 0.25;
    RVector lower;  // empty = unbounded
    RVector upper;
};

struct NelderMeadResult {
    RVector x;
    Real fval = 0;
    int iterations = 0;
    bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead(F&& f, RVector x0, const NelderMeadOptions& opt = {}) {
    const int n = static_cast<int>(x0.size());
    auto clampx = [&](RVector x) {
        if (opt.lower.size() == n)
            for (int i = 0; i < n; ++i) x[i] = std::max(x[i], opt.lower[i]);
        if (opt.upper.size() == n)
            for (int i = 0; i < n; ++i) x[i] = std::min(x[i], opt.upper[i]);
        return x;
    };
    std::vector<RVector> pts(n + 1);
    std::vector<Real> fv(n + 1);
    pts[0] = clampx(std::move(x0));
    fv[0] = f(pts[0]);
    for (int i = 0; i < n; ++i) {
        RVector p = pts[0];
        const Real step = (p[i] != 0.0) ? opt.init_step * std::abs(p[i]) : opt.init_step;
        p[i] += step;
        pts[i + 1] = clampx(std::move(p));
        fv[i + 1] = f(pts[i + 1]);
    }
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    int it = 0;
    NelderMeadResult res;
    for (; it < opt.max_iter; ++it) {
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return fv[a] < fv[b]; });
        const int best = order[0], worst = order[n], second = order[n - 1];
        Real size = 0;
        for (int i = 1; i <= n; ++i)
            size = std::max(size, (pts[order[i]] - pts[best]).norm());
        if (size < opt.xtol && std::abs(fv[worst] - fv[best]) < opt.ftol) {
            res.converged = true;
            break;
        }
        RVector centroid = RVector::Zero(n);
        for (int i = 0; i < n; ++i) centroid += pts[order[i]];
        centroid /= n;
        auto eval = [&](Real coef) {
            RVector x = clampx(centroid + coef * (centroid - pts[worst]));
            return std::make_pair(f(x), x);
        };
        auto [fr, xr] = eval(1.0);  // reflect
        if (fr < fv[best]) {
            auto [fe, xe] = eval(2.0);  // expand
            if (fe < fr) { pts[worst] = xe; fv[worst] = fe; }
            else { pts[worst] = xr; fv[worst] = fr; }
        } else if (fr < fv[second]) {
            pts[worst] = xr;
            fv[worst] = fr;
        } else {
            auto [fc, xc] = (fr < fv[worst]) ? eval(0.5) : eval(-0.5);
            if (fc < std::min(fr, fv[worst])) { pts[worst] = xc; fv[worst] = fc; }
            else {  // shrink toward best
                for (int i = 1; i <= n; ++i) {
                    const int j = order[i];
                    pts[j] = clampx(pts[best] + 0.5 * (pts[j] - pts[best]));
                    fv[j] = f(pts[j]);
                }
            }
        }
    }
    const int best = *std::min_element(order.begin(), order.end(),
                                       [&](int a, int b) { return fv[a] < fv[b]; });
    res.x = pts[best];
    res.fval = fv[best];
    res.iterations = it;
    return res;
}

} // namespace pmode
