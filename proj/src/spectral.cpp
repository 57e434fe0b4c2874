#include "pmode/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pmode {

namespace {

void check_profile(const RMatrix& p) {
    if (p.rows() != p.cols() || p.rows() < 1)
        throw std::invalid_argument("spectral profile must be square");
    if ((p - p.transpose()).norm() > 1e-12 * std::max(p.norm(), 1.0))
        throw std::invalid_argument("spectral profile must be symmetric");
}

} // namespace

SpectralModel SpectralModel::semi_elliptical(Real halfwidth) {
    return semi_elliptical(halfwidth, RMatrix::Ones(1, 1));
}

SpectralModel SpectralModel::semi_elliptical(Real halfwidth, RMatrix profile) {
    if (!(halfwidth > 0))
        throw std::invalid_argument("semi_elliptical: halfwidth must be > 0");
    check_profile(profile);
    SpectralModel m;
    m.kind_ = Kind::SemiElliptical;
    m.halfwidth_ = halfwidth;
    m.dim_ = static_cast<int>(profile.rows());
    m.profile_ = std::move(profile);
    return m;
}

SpectralModel SpectralModel::flat_window(Real height, Real omega_min, Real omega_max) {
    return flat_window(height, omega_min, omega_max, RMatrix::Ones(1, 1));
}

SpectralModel SpectralModel::flat_window(Real height, Real omega_min, Real omega_max,
                                         RMatrix profile) {
    if (!(omega_max > omega_min))
        throw std::invalid_argument("flat_window: omega_max must exceed omega_min");
    check_profile(profile);
    SpectralModel m;
    m.kind_ = Kind::FlatWindow;
    m.height_ = height;
    m.omega_min_ = omega_min;
    m.omega_max_ = omega_max;
    m.dim_ = static_cast<int>(profile.rows());
    m.profile_ = std::move(profile);
    return m;
}

SpectralModel SpectralModel::lorentzian_sum(std::vector<LorentzTerm> terms) {
    if (terms.empty())
        throw std::invalid_argument("lorentzian_sum: needs at least one term");
    const int d = static_cast<int>(terms.front().amplitude.rows());
    for (const auto& t : terms) {
        check_profile(t.amplitude);
        if (t.amplitude.rows() != d)
            throw std::invalid_argument("lorentzian_sum: inconsistent amplitude dims");
        if (!(t.width > 0))
            throw std::invalid_argument("lorentzian_sum: width must be > 0");
    }
    SpectralModel m;
    m.kind_ = Kind::LorentzianSum;
    m.dim_ = d;
    m.terms_ = std::move(terms);
    return m;
}

SpectralModel SpectralModel::tabulated(RVector omega, std::vector<RMatrix> values) {
    const auto n = omega.size();
    if (n < 2 || static_cast<Eigen::Index>(values.size()) != n)
        throw std::invalid_argument("tabulated: need >= 2 grid points with matching values");
    for (Eigen::Index i = 1; i < n; ++i)
        if (!(omega[i] > omega[i - 1]))
            throw std::invalid_argument("tabulated: grid must be strictly increasing");
    const int d = static_cast<int>(values.front().rows());
    for (const auto& v : values) {
        check_profile(v);
        if (v.rows() != d)
            throw std::invalid_argument("tabulated: inconsistent value dims");
    }
    SpectralModel m;
    m.kind_ = Kind::Tabulated;
    m.dim_ = d;
    m.grid_ = std::move(omega);
    m.grid_values_ = std::move(values);

    // natural cubic spline second derivatives, one tridiagonal solve shared
    // by all matrix elements
    const auto& x = m.grid_;
    const auto& y = m.grid_values_;
    m.spline_m_.assign(n, RMatrix::Zero(d, d));
    if (n > 2) {
        const Eigen::Index k = n - 2;
        RVector diag(k), sub(k), sup(k);
        std::vector<RMatrix> rhs(k, RMatrix::Zero(d, d));
        for (Eigen::Index i = 0; i < k; ++i) {
            const Real h0 = x[i + 1] - x[i];
            const Real h1 = x[i + 2] - x[i + 1];
            diag[i] = 2.0 * (h0 + h1);
            sub[i] = h0;
            sup[i] = h1;
            rhs[i] = 6.0 * ((y[i + 2] - y[i + 1]) / h1 - (y[i + 1] - y[i]) / h0);
        }
        // Thomas algorithm
        for (Eigen::Index i = 1; i < k; ++i) {
            const Real w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        m.spline_m_[k] = rhs[k - 1] / diag[k - 1];
        for (Eigen::Index i = k - 1; i >= 1; --i)
            m.spline_m_[i] = (rhs[i - 1] - sup[i - 1] * m.spline_m_[i + 1]) / diag[i - 1];
    }
    return m;
}

RMatrix SpectralModel::evaluate(Real w) const {
    switch (kind_) {
        case Kind::SemiElliptical: {
            const Real u = w / halfwidth_;
            const Real j = (std::abs(u) <= 1.0) ? std::sqrt(1.0 - u * u) : 0.0;
            return j * profile_;
        }
        case Kind::FlatWindow: {
            const Real j = (w >= omega_min_ && w <= omega_max_) ? height_ : 0.0;
            return j * profile_;
        }
        case Kind::LorentzianSum: {
            RMatrix out = RMatrix::Zero(dim_, dim_);
            for (const auto& t : terms_) {
                const Real d = w - t.center;
                out += t.amplitude * (t.width / (d * d + 0.25 * t.width * t.width));
            }
            return out;
        }
        case Kind::Tabulated: {
            const auto& x = grid_;
            if (w < x[0] || w > x[x.size() - 1]) return RMatrix::Zero(dim_, dim_);
            auto it = std::upper_bound(x.data(), x.data() + x.size(), w);
            Eigen::Index i = std::max<Eigen::Index>(1, it - x.data()) - 1;
            i = std::min(i, x.size() - 2);
            const Real h = x[i + 1] - x[i];
            const Real a = (x[i + 1] - w) / h;
            const Real b = (w - x[i]) / h;
            return a * grid_values_[i] + b * grid_values_[i + 1] +
                   ((a * a * a - a) * spline_m_[i] + (b * b * b - b) * spline_m_[i + 1]) *
                       (h * h / 6.0);
        }
    }
    return RMatrix::Zero(dim_, dim_);
}

Real SpectralModel::evaluate_scalar(Real w) const {
    if (dim_ != 1)
        throw std::invalid_argument("evaluate_scalar: model is matrix-valued");
    return evaluate(w)(0, 0);
}

std::pair<Real, Real> SpectralModel::support() const {
    switch (kind_) {
        case Kind::SemiElliptical:
            return {-halfwidth_, halfwidth_};
        case Kind::FlatWindow:
            return {omega_min_, omega_max_};
        case Kind::Tabulated:
            return {grid_[0], grid_[grid_.size() - 1]};
        case Kind::LorentzianSum: {
            Real lo = std::numeric_limits<Real>::infinity(), hi = -lo;
            for (const auto& t : terms_) {
                lo = std::min(lo, t.center - 10.0 * t.width);
                hi = std::max(hi, t.center + 10.0 * t.width);
            }
            return {lo, hi};
        }
    }
    return {-1, 1};
}

Real SpectralModel::frequency_scale() const {
    switch (kind_) {
        case Kind::SemiElliptical:
            return halfwidth_;
        case Kind::FlatWindow:
            return 0.5 * (omega_max_ - omega_min_);
        case Kind::Tabulated:
            return 0.5 * (grid_[grid_.size() - 1] - grid_[0]);
        case Kind::LorentzianSum: {
            Real s = 0;
            for (const auto& t : terms_) s = std::max(s, std::abs(t.center) + t.width);
            return s;
        }
    }
    return 1;
}

Real FermiSpec::occupation(Real w) const {
    if (beta < 0) throw std::invalid_argument("FermiSpec: beta must be >= 0");
    if (std::isinf(beta)) {
        if (w < mu) return 1.0;
        if (w > mu) return 0.0;
        return 0.5;
    }
    const Real x = beta * (w - mu);
    if (x >= 0) {
        const Real e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

} // namespace pmode
