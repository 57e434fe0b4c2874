// kernels.hpp — memory kernels and bath correlation functions

#pragma once

#include <utility>

#include "pmode/bath.hpp"
#include "pmode/spectral.hpp"
#include "pmode/types.hpp"

namespace pmode {

// chi(t) = int dw/2pi J(w) e^{-iwt}. Closed forms for FlatWindow and
// LorentzianSum; adaptive quadrature otherwise. Throws numerical_error when
// the estimated error exceeds tol.quadrature relative to |chi(0)|.
CMatrix memory_kernel(const SpectralModel& model, Real t,
                      const Tolerances& tol = default_tol());

// (C+, C-) with C+(t) = int dw/2pi e^{iwt} J f and C- the (1 - f) partner.
// C+(t) + C-(t) = chi(-t).
std::pair<CMatrix, CMatrix> correlation_pair(const SpectralModel& model,
                                             const FermiSpec& fermi, Real t,
                                             const Tolerances& tol = default_tol());

// chi_ij(-t) = chi_ij(t)^* elementwise (no transpose).
inline CMatrix kernel_symmetry_extend(const CMatrix& chi_pos) {
    return chi_pos.conjugate();
}

// |chi(0)| Frobenius scale used to normalise quadrature tolerances.
Real kernel_scale(const SpectralModel& model);

// Uniform sampling chi(j dt), j = 0..2N.
KernelSample sample_kernel(const SpectralModel& model, Real dt, int half_count,
                           const Tolerances& tol = default_tol());

} // namespace pmode
