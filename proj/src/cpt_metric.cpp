#include "ptqm/cpt_metric.hpp"

#include "ptqm/errors.hpp"
#include "ptqm/pt_structure.hpp"

#include <cmath>
#include <string>

namespace ptqm {

Metric::Metric(ComplexMatrix eta, double tol) : eta_(std::move(eta)) {
  validate_metric(eta_, tol);
}

Eigen::VectorXd Metric::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (eta_ + eta_.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

PtNormalized pt_normalize(const EigenSystem& es, const ComplexMatrix& parity) {
  require_square_finite(parity, "pt_normalize");
  if (parity.rows() != es.right_vectors.rows()) {
    throw DimensionMismatch("pt_normalize: parity and eigenvectors differ in size");
  }
  PtNormalized out;
  out.eigenvalues = es.eigenvalues;
  out.vectors.resize(es.right_vectors.rows(), es.size());
  out.signs.reserve(static_cast<std::size_t>(es.size()));
  for (Eigen::Index n = 0; n < es.size(); ++n) {
    const ComplexVector phi = es.right_vectors.col(n).normalized();
    const Complex self = pt_inner_product(parity, phi, phi);
    if (!(std::abs(self) >= kSelfOrthogonalThreshold)) {
      throw SelfOrthogonalEigenvector("pt_normalize: eigenvector " + std::to_string(n) +
                                      " has PT norm " + std::to_string(std::abs(self)) +
                                      " (exceptional point or broken PT phase)");
    }
    // The PT self-product is invariant under phase changes; the phase is
    // fixed so that PT phi = phi, which phi phi^T in build_C depends on.
    out.vectors.col(n) = align_pt_phase(parity, phi) / std::sqrt(std::abs(self));
    out.signs.push_back(self.real() >= 0.0 ? 1 : -1);
  }
  return out;
}

ComplexMatrix build_C(const ComplexMatrix& normalized_vectors) {
  return normalized_vectors * normalized_vectors.transpose();
}

ComplexMatrix build_C(const PtNormalized& normalized) {
  return build_C(normalized.vectors);
}

Metric metric_from_CPT(const ComplexMatrix& c, const ComplexMatrix& parity, double tol) {
  require_square_finite(c, "metric_from_CPT");
  require_square_finite(parity, "metric_from_CPT");
  if (c.rows() != parity.rows()) throw DimensionMismatch("metric_from_CPT: C and P sizes differ");
  const ComplexMatrix eta = parity.transpose() * c.transpose();
  if (!is_hermitian(eta, tol)) {
    throw MetricNotPositive("metric_from_CPT: P^T C^T is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (eta + eta.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& w = solver.eigenvalues();
  if (!(w.minCoeff() > tol * w.cwiseAbs().maxCoeff())) {
    throw MetricNotPositive("metric_from_CPT: smallest eigenvalue " + std::to_string(w.minCoeff()) +
                            " is not positive");
  }
  return Metric(eta, tol);
}

Complex cpt_inner_product(const Metric& eta, const ComplexVector& psi, const ComplexVector& phi) {
  require_same_dim(eta.matrix(), psi, "cpt_inner_product");
  require_same_dim(eta.matrix(), phi, "cpt_inner_product");
  return psi.dot(eta.matrix() * phi);
}

Metric metric_from_biorthonormal(const EigenSystem& es, double tol) {
  const double scale = std::max(es.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index n = 0; n < es.size(); ++n) {
    if (std::abs(es.eigenvalues[n].imag()) > tol * scale) {
      throw ComplexSpectrum("metric_from_biorthonormal: eigenvalue " + std::to_string(n) +
                            " has imaginary part " + std::to_string(es.eigenvalues[n].imag()));
    }
  }
  const ComplexMatrix eta = es.left_vectors * es.left_vectors.adjoint();
  return Metric(0.5 * (eta + eta.adjoint()), tol);
}

bool is_pseudo_hermitian(const ComplexMatrix& h, const Metric& eta, double tol) {
  return is_self_adjoint_wrt(h, eta.matrix(), tol);
}

}  // namespace ptqm
