// spectral.hpp — bath spectral density families and Fermi functions

#pragma once

#include <utility>
#include <vector>

#include "pmode/types.hpp"

namespace pmode {

// One Lorentzian peak: amplitude * width / ((w - center)^2 + (width/2)^2).
// The amplitude is a real symmetric nS x nS matrix (a 1x1 for scalar baths).
struct LorentzTerm {
    RMatrix amplitude;
    Real center = 0;
    Real width = 1;
};

// Matrix-valued spectral density J(w): real symmetric, J_ii >= 0 for the
// physical families. Scalar families carry an optional PSD profile matrix so
// a bath can couple to several system sites.
class SpectralModel {
public:
    enum class Kind { SemiElliptical, LorentzianSum, FlatWindow, Tabulated };

    static SpectralModel semi_elliptical(Real halfwidth);
    static SpectralModel semi_elliptical(Real halfwidth, RMatrix profile);
    static SpectralModel flat_window(Real height, Real omega_min, Real omega_max);
    static SpectralModel flat_window(Real height, Real omega_min, Real omega_max,
                                     RMatrix profile);
    static SpectralModel lorentzian_sum(std::vector<LorentzTerm> terms);
    // Cubic-spline interpolation on a strictly increasing grid; zero outside.
    static SpectralModel tabulated(RVector omega, std::vector<RMatrix> values);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    RMatrix evaluate(Real omega) const;
    Real evaluate_scalar(Real omega) const;

    // Hull of the numerically relevant support. Compact families report the
    // exact support; Lorentzian sums report centers +- 10 widths.
    std::pair<Real, Real> support() const;
    bool compact_support() const { return kind_ != Kind::LorentzianSum; }
    // Characteristic frequency width, used for sampling-window schedules.
    Real frequency_scale() const;

    Real halfwidth() const { return halfwidth_; }
    Real height() const { return height_; }
    Real window_min() const { return omega_min_; }
    Real window_max() const { return omega_max_; }
    const RMatrix& profile() const { return profile_; }
    const std::vector<LorentzTerm>& lorentz_terms() const { return terms_; }
    const RVector& grid() const { return grid_; }
    const std::vector<RMatrix>& grid_values() const { return grid_values_; }

private:
    SpectralModel() = default;

    Kind kind_ = Kind::SemiElliptical;
    int dim_ = 1;
    Real halfwidth_ = 1;
    Real height_ = 1;
    Real omega_min_ = -1;
    Real omega_max_ = 1;
    RMatrix profile_;
    std::vector<LorentzTerm> terms_;
    RVector grid_;
    std::vector<RMatrix> grid_values_;
    std::vector<RMatrix> spline_m_;  // second derivatives at the knots
};

// Fermi occupation; beta may be +infinity (sharp step at mu).
struct FermiSpec {
    Real beta = 1;
    Real mu = 0;

    Real occupation(Real omega) const;
};

} // namespace pmode
