#include "ptqm/pt_structure.hpp"

#include "ptqm/errors.hpp"

#include <cmath>

namespace ptqm {

namespace {

void require_same_dim(const AntilinearOp& a, const ComplexVector& v, const char* what) {
  ptqm::require_same_dim(a.matrix_part, v, what);
}

}  // namespace

AntilinearOp time_reversal(Eigen::Index n) {
  return {ComplexMatrix::Identity(n, n)};
}

AntilinearOp pt_operator(const ComplexMatrix& parity) {
  require_square_finite(parity, "pt_operator");
  return {parity};
}

AntilinearOp cpt_operator(const ComplexMatrix& c, const ComplexMatrix& parity) {
  require_square_finite(c, "cpt_operator");
  require_square_finite(parity, "cpt_operator");
  if (c.rows() != parity.rows()) throw DimensionMismatch("cpt_operator: C and P sizes differ");
  return {c * parity};
}

ComplexVector apply_antilinear(const AntilinearOp& a, const ComplexVector& psi) {
  require_same_dim(a, psi, "apply_antilinear");
  return a.matrix_part * psi.conjugate();
}

ComplexMatrix compose(const AntilinearOp& a, const AntilinearOp& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose: operator sizes differ");
  return a.matrix_part * b.matrix_part.conjugate();
}

AntilinearOp operator*(const ComplexMatrix& linear, const AntilinearOp& a) {
  if (linear.cols() != a.dim()) throw DimensionMismatch("operator*: sizes differ");
  return {linear * a.matrix_part};
}

bool commutes_with_antilinear(const ComplexMatrix& h, const AntilinearOp& a, double tol) {
  require_square_finite(h, "commutes_with_antilinear");
  if (h.rows() != a.dim()) throw DimensionMismatch("commutes_with_antilinear: sizes differ");
  const ComplexMatrix hm = h * a.matrix_part;
  return (hm - a.matrix_part * h.conjugate()).norm() <= tol * hm.norm();
}

Complex pt_inner_product(const ComplexMatrix& parity, const ComplexVector& psi,
                         const ComplexVector& phi) {
  require_same_dim(parity, psi, "pt_inner_product");
  require_same_dim(parity, phi, "pt_inner_product");
  return (parity * psi.conjugate()).transpose() * phi;
}

ComplexVector align_pt_phase(const ComplexMatrix& parity, const ComplexVector& phi) {
  require_same_dim(parity, phi, "align_pt_phase");
  const ComplexVector image = parity * phi.conjugate();
  Eigen::Index k = 0;
  phi.cwiseAbs().maxCoeff(&k);
  const Complex ratio = image[k] / phi[k];
  if (std::abs(ratio) == 0.0 || !std::isfinite(std::abs(ratio))) return phi;
  const double beta = std::arg(ratio);
  return std::polar(1.0, 0.5 * beta) * phi;
}

const char* to_string(PtPhase phase) {
  return phase == PtPhase::Unbroken ? "unbroken" : "broken";
}

PtPhase classify_pt_phase(const ComplexMatrix& h, const ComplexMatrix& parity, double tol) {
  if (!commutes_with_antilinear(h, pt_operator(parity), tol)) {
    throw NotPTSymmetric("classify_pt_phase: H does not commute with PT");
  }
  const EigenSystem es = eig(h, tol);
  const double scale = std::max(es.eigenvalues.cwiseAbs().maxCoeff(), 1.0);
  for (Eigen::Index n = 0; n < es.size(); ++n) {
    if (std::abs(es.eigenvalues[n].imag()) > tol * scale) return PtPhase::Broken;
    const ComplexVector phi = align_pt_phase(parity, es.right_vectors.col(n));
    if ((parity * phi.conjugate() - phi).norm() > tol * phi.norm()) return PtPhase::Broken;
  }
  return PtPhase::Unbroken;
}

}  // namespace ptqm
