#pragma once

// Dense complex linear algebra shared by every other module.
//
// All routines are pure functions of their arguments. Tolerances are
// relative and measured in the Frobenius norm unless stated otherwise.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ptqm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultTolerance = 1e-10;

/// Eigenvalues with biorthonormal right (phi_n) and left (chi_n) vectors,
/// stored as matrix columns: chi_m^dagger phi_n = delta_mn.
struct EigenSystem {
  ComplexVector eigenvalues;
  ComplexMatrix right_vectors;
  ComplexMatrix left_vectors;

  Eigen::Index size() const { return eigenvalues.size(); }
  /// sum_n lambda_n phi_n chi_n^dagger
  ComplexMatrix reconstruct() const;
};

// Pauli matrices, sigma(0) is the identity.
ComplexMatrix sigma(int mu);

/// ||a - b||_F / max(||b||_F, tiny); absolute when b == 0.
double relative_error(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultTolerance);

bool is_finite(const ComplexMatrix& m);
/// Throws NonFiniteInput / DimensionMismatch.
void require_square_finite(const ComplexMatrix& m, const char* what);
void require_same_dim(const ComplexMatrix& m, const ComplexVector& v, const char* what);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTolerance);
bool is_symmetric(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// Sorts by descending real part; eigenvalues whose real parts agree within
/// tol (relative to the spectral radius) are ordered by descending imaginary
/// part. Returns the permutation.
std::vector<Eigen::Index> spectral_order(const ComplexVector& values,
                                         double tol = kDefaultTolerance);

/// Multiplies v by a phase so that its first component with modulus above
/// 1e-12 * max|v_i| is real and positive.
void fix_phase(Eigen::Ref<ComplexVector> v);

/// Right eigenvectors are unit-norm with the phase of fix_phase; left
/// vectors are the columns of (V^{-1})^dagger. Throws NonDiagonalizable when
/// ||V Lambda V^{-1} - M|| > tol ||M||.
EigenSystem eig(const ComplexMatrix& m, double tol = kDefaultTolerance);

ComplexMatrix matrix_exponential(const ComplexMatrix& m);

/// Principal square root of a Hermitian positive-definite matrix.
/// Throws NotPositiveDefinite if an eigenvalue is <= tol * ||p||_2.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& p, double tol = kDefaultTolerance);

/// Throws InvalidMetric unless eta is Hermitian and positive-definite.
void validate_metric(const ComplexMatrix& eta, double tol = kDefaultTolerance);

/// <psi, A phi>_eta == <A psi, phi>_eta for all psi, phi, i.e.
/// ||eta A - A^dagger eta|| <= tol ||eta A||.
bool is_self_adjoint_wrt(const ComplexMatrix& a, const ComplexMatrix& eta,
                         double tol = kDefaultTolerance);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ptqm
