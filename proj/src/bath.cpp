#include "pmode/bath.hpp"

#include <cmath>
#include <stdexcept>

namespace pmode {

PseudomodeBath PseudomodeBath::create(CMatrix lambda, RVector gamma, CMatrix zeta,
                                      const Tolerances& tol) {
    const auto n = lambda.rows();
    if (n < 1 || lambda.cols() != n)
        throw std::invalid_argument("PseudomodeBath: Lambda must be square");
    if (gamma.size() != n)
        throw std::invalid_argument("PseudomodeBath: Gamma size mismatch");
    if (zeta.rows() != n || zeta.cols() < 1)
        throw std::invalid_argument("PseudomodeBath: zeta must be n x nS");
    if (!is_hermitian(lambda, tol.hermiticity))
        throw std::invalid_argument("PseudomodeBath: Lambda is not Hermitian");
    PseudomodeBath b;
    b.lambda = std::move(lambda);
    b.gamma = std::move(gamma);
    b.zeta = std::move(zeta);
    b.physical = (b.gamma.minCoeff() >= 0);
    return b;
}

PseudomodeBath PseudomodeBath::from_w(const CMatrix& w, CMatrix zeta,
                                      const Tolerances& tol) {
    const CMatrix lambda = (w.adjoint() - w) / Complex(0, 2);
    const CMatrix minus_gamma = w + w.adjoint();
    const Real off = (minus_gamma - CMatrix(minus_gamma.diagonal().asDiagonal())).norm();
    if (off > 1e3 * tol.hermiticity * std::max(w.norm(), Real(1)))
        throw std::invalid_argument("PseudomodeBath::from_w: W + W^dag is not diagonal");
    return create(lambda, (-minus_gamma.diagonal().real()).eval(), std::move(zeta), tol);
}

CMatrix ExpFit::kernel(Real t) const {
    const int d = dim();
    CMatrix out = CMatrix::Zero(d, d);
    const Real ta = std::abs(t);
    for (const auto& term : terms) {
        Complex w = std::exp(Complex(-0.5 * term.gamma * ta, -term.eps * ta));
        for (int p = 0; p < term.power; ++p) w *= ta;
        out += term.kappa * w;
    }
    if (t < 0) out = out.conjugate();
    return out;
}

Complex ExpFit::kappa_sum(int i, int j) const {
    Complex s = 0;
    for (const auto& term : terms)
        if (term.power == 0) s += term.kappa(i, j);
    return s;
}

ExpFit ExpFit::scalar(std::vector<Complex> kappa, std::vector<Real> eps,
                      std::vector<Real> gamma) {
    if (kappa.size() != eps.size() || kappa.size() != gamma.size())
        throw std::invalid_argument("ExpFit::scalar: length mismatch");
    ExpFit f;
    for (size_t k = 0; k < kappa.size(); ++k) {
        ExpTerm t;
        t.kappa = CMatrix::Constant(1, 1, kappa[k]);
        t.eps = eps[k];
        t.gamma = gamma[k];
        f.terms.push_back(std::move(t));
    }
    return f;
}

void KernelSample::validate() const {
    if (!(dt > 0)) throw std::invalid_argument("KernelSample: dt must be > 0");
    if (values.size() < 3 || values.size() % 2 == 0)
        throw std::invalid_argument("KernelSample: need an odd count 2N+1 >= 3 of samples");
}

} // namespace pmode
