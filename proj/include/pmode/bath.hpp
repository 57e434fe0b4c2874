// bath.hpp — pseudomode parameter sets and exponential kernel fits

#pragma once

#include <string>
#include <vector>

#include "pmode/types.hpp"

namespace pmode {

// One bath's pseudomode parameters. Lambda is the Hermitian mode-coupling
// Hamiltonian, gamma the residual damping rates (diagonal by construction),
// zeta the n x nS system couplings (column i couples system site i).
// W = -i Lambda - Gamma/2 satisfies W + W^dag = -Gamma.
struct PseudomodeBath {
    CMatrix lambda;
    RVector gamma;
    CMatrix zeta;
    bool physical = true;  // all damping rates >= 0

    static PseudomodeBath create(CMatrix lambda, RVector gamma, CMatrix zeta,
                                 const Tolerances& tol = default_tol());
    // Recover (Lambda, Gamma) from a generator W = -i Lambda - Gamma/2 whose
    // anti-Hermitian part must leave Gamma diagonal.
    static PseudomodeBath from_w(const CMatrix& w, CMatrix zeta,
                                 const Tolerances& tol = default_tol());

    int n_modes() const { return static_cast<int>(lambda.rows()); }
    int n_sites() const { return static_cast<int>(zeta.cols()); }
    CMatrix w_matrix() const {
        return -kI * lambda - 0.5 * gamma.cast<Complex>().asDiagonal().toDenseMatrix();
    }
};

// One damped-exponential term kappa * t^power * exp(-i eps t - gamma t / 2)
// of a memory kernel (t >= 0 branch); kappa is the nS x nS amplitude matrix.
struct ExpTerm {
    CMatrix kappa;
    Real eps = 0;
    Real gamma = 0;
    int power = 0;
};

// Sum-of-damped-exponentials kernel representation. Also the closed-form
// term decomposition produced by the forward computation.
struct ExpFit {
    std::vector<ExpTerm> terms;
    Real residual = 0;                  // sampling residual when produced by a fit
    std::vector<std::string> warnings;  // e.g. borderline diagonalizability

    int dim() const { return terms.empty() ? 0 : static_cast<int>(terms.front().kappa.rows()); }
    // Kernel value; the t < 0 branch is the elementwise conjugate of t > 0.
    CMatrix kernel(Real t) const;
    // Sum over element (i, j) of the amplitudes; real and positive on the
    // diagonal for invertible fits.
    Complex kappa_sum(int i, int j) const;

    static ExpFit scalar(std::vector<Complex> kappa, std::vector<Real> eps,
                         std::vector<Real> gamma);
};

using KernelTermDecomposition = ExpFit;

// Uniformly sampled kernel chi(j dt), j = 0..2N (odd count, as required by
// the Hankel construction).
struct KernelSample {
    Real dt = 0;
    std::vector<CMatrix> values;

    int half_count() const { return (static_cast<int>(values.size()) - 1) / 2; }
    void validate() const;
};

} // namespace pmode
