// types.hpp — scalar aliases, tolerance knobs, error types

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pmode {

using Real = double;
using Complex = std::complex<double>;

using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr Real kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Central tolerance record; one knob set shared by the property tests.
struct Tolerances {
    Real hermiticity = 1e-12;     // relative Frobenius
    Real quadrature = 1e-8;       // relative to the kernel magnitude at t = 0
    Real diag_cond = 1e8;         // eigenvector condition number separating diagonalizable from defective
    Real jordan_svd_cut = 1e-10;  // relative singular-value cutoff for rank decisions
};

inline const Tolerances& default_tol() {
    static const Tolerances t{};
    return t;
}

// Quadrature / eigensolver / resolvent failures carrying a diagnostic.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion problems with no solution under the given constraints.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_hermitian(const CMatrix& a, Real rel_tol) {
    const Real scale = a.norm();
    return (a - a.adjoint()).norm() <= rel_tol * std::max(scale, Real(1e-300));
}

} // namespace pmode
