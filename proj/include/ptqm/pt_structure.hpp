#pragma once

// Antilinear operators of the form psi -> M psi^*.
//
// Only the matrix part M is stored. The algebra used throughout:
//   (A_M o A_N) psi = M (N psi^*)^* = M N^* psi      (a linear map)
//   L o A_M         = A_{L M}                        (still antilinear)
//   H commutes with A_M  <=>  H M = M H^*
// With P linear and T complex conjugation, PT is A_P and CPT is A_{C P}.

#include "ptqm/linalg.hpp"

namespace ptqm {

struct AntilinearOp {
  ComplexMatrix matrix_part;

  Eigen::Index dim() const { return matrix_part.rows(); }
};

AntilinearOp time_reversal(Eigen::Index n);
AntilinearOp pt_operator(const ComplexMatrix& parity);
AntilinearOp cpt_operator(const ComplexMatrix& c, const ComplexMatrix& parity);

ComplexVector apply_antilinear(const AntilinearOp& a, const ComplexVector& psi);

/// Composition of two antilinear maps is linear: returns M N^*.
ComplexMatrix compose(const AntilinearOp& a, const AntilinearOp& b);
AntilinearOp operator*(const ComplexMatrix& linear, const AntilinearOp& a);

/// ||H M - M H^*|| <= tol ||H M||
bool commutes_with_antilinear(const ComplexMatrix& h, const AntilinearOp& a,
                              double tol = kDefaultTolerance);

/// Indefinite PT product (P psi^*)^T phi; antilinear in psi, linear in phi.
Complex pt_inner_product(const ComplexMatrix& parity, const ComplexVector& psi,
                         const ComplexVector& phi);

/// Rescales phi by e^{i beta/2}, where e^{i beta} is the phase of
/// (PT phi)_k / phi_k at the largest-magnitude component k. If phi is an
/// eigenvector in the unbroken phase the result satisfies PT phi = phi.
ComplexVector align_pt_phase(const ComplexMatrix& parity, const ComplexVector& phi);

enum class PtPhase { Unbroken, Broken };

const char* to_string(PtPhase phase);

/// Throws NotPTSymmetric unless H commutes with PT. Non-diagonalizable
/// inputs (exceptional points) propagate NonDiagonalizable from eig.
PtPhase classify_pt_phase(const ComplexMatrix& h, const ComplexMatrix& parity,
                          double tol = kDefaultTolerance);

}  // namespace ptqm
