#pragma once

// Charge-conjugation operator and positive-definite metrics.
//
// For PT-normalized eigenvectors (PT phi_n = phi_n, (phi_n, phi_n)_PT = s_n
// with s_n = +-1) the charge-conjugation matrix is the transpose-free outer
// product sum
//
//   C = sum_n phi_n phi_n^T,
//
// so C phi_m = s_m phi_m. The CPT product (CPT psi) . phi = (C P psi^*)^T phi
// expands to psi^dagger P^T C^T phi, i.e. its metric is eta = P^T C^T.

#include "ptqm/linalg.hpp"

#include <vector>

namespace ptqm {

/// Hermitian positive-definite matrix defining <psi, phi>_eta = psi^dagger eta phi.
class Metric {
 public:
  /// Throws InvalidMetric.
  explicit Metric(ComplexMatrix eta, double tol = kDefaultTolerance);

  const ComplexMatrix& matrix() const { return eta_; }
  Eigen::Index dim() const { return eta_.rows(); }
  /// Ascending.
  Eigen::VectorXd eigenvalues() const;

 private:
  ComplexMatrix eta_;
};

/// |(phi, phi)_PT| below this marks an exceptional point.
inline constexpr double kSelfOrthogonalThreshold = 1e-8;

struct PtNormalized {
  ComplexMatrix vectors;   // columns, same order as the source EigenSystem
  std::vector<int> signs;  // (phi_n, phi_n)_PT
  ComplexVector eigenvalues;
};

/// Throws SelfOrthogonalEigenvector when an eigenvector has vanishing PT norm.
PtNormalized pt_normalize(const EigenSystem& es, const ComplexMatrix& parity);

ComplexMatrix build_C(const PtNormalized& normalized);
ComplexMatrix build_C(const ComplexMatrix& normalized_vectors);

/// eta = P^T C^T. Throws MetricNotPositive when eta is not Hermitian
/// positive-definite (broken phase or a sign-convention error upstream).
Metric metric_from_CPT(const ComplexMatrix& c, const ComplexMatrix& parity,
                       double tol = kDefaultTolerance);

Complex cpt_inner_product(const Metric& eta, const ComplexVector& psi, const ComplexVector& phi);

/// eta_b = sum_n chi_n chi_n^dagger from the left eigenvectors.
/// Throws ComplexSpectrum when some |Im lambda_n| > tol.
Metric metric_from_biorthonormal(const EigenSystem& es, double tol = kDefaultTolerance);

/// ||eta H - H^dagger eta|| <= tol ||eta H||
bool is_pseudo_hermitian(const ComplexMatrix& h, const Metric& eta,
                         double tol = kDefaultTolerance);

}  // namespace ptqm
