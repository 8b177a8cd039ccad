#include "ptqm/linalg.hpp"

#include "ptqm/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ptqm {

using namespace std::complex_literals;

ComplexMatrix EigenSystem::reconstruct() const {
  return right_vectors * eigenvalues.asDiagonal() * left_vectors.adjoint();
}

ComplexMatrix sigma(int mu) {
  ComplexMatrix s(2, 2);
  switch (mu) {
    case 0: s << 1.0, 0.0, 0.0, 1.0; break;
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -1.0i, 1.0i, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw IndexOutOfRange("Pauli index must be in 0..3, got " + std::to_string(mu));
  }
  return s;
}

double relative_error(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double diff = (a - b).norm();
  const double scale = b.norm();
  return scale > 0.0 ? diff / scale : diff;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && relative_error(a, b) <= tol;
}

bool is_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": expected a non-empty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw NonFiniteInput(std::string(what) + ": non-finite entry");
}

void require_same_dim(const ComplexMatrix& m, const ComplexVector& v, const char* what) {
  if (m.cols() != v.size()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " but vector has " +
                            std::to_string(v.size()) + " entries");
  }
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol * m.norm();
}

bool is_symmetric(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).norm() <= tol * m.norm();
}

std::vector<Eigen::Index> spectral_order(const ComplexVector& values, double tol) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const double scale = std::max(values.size() ? values.cwiseAbs().maxCoeff() : 0.0, 1e-300);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return values[a].real() > values[b].real();
  });
  // Runs of numerically equal real parts are ordered by imaginary part.
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    while (end < order.size() &&
           std::abs(values[order[end - 1]].real() - values[order[end]].real()) <= tol * scale) {
      ++end;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](Eigen::Index a, Eigen::Index b) {
                       return values[a].imag() > values[b].imag();
                     });
    begin = end;
  }
  return order;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
  const double vmax = v.cwiseAbs().maxCoeff();
  if (vmax == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-12 * vmax) {
      v *= std::conj(v[i]) / mag;
      v[i] = mag;
      return;
    }
  }
}

EigenSystem eig(const ComplexMatrix& m, double tol) {
  require_square_finite(m, "eig");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) throw NonDiagonalizable("eig: Schur iteration failed");

  const auto order = spectral_order(solver.eigenvalues(), tol);
  const Eigen::Index n = m.rows();
  EigenSystem es;
  es.eigenvalues.resize(n);
  es.right_vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    es.eigenvalues[k] = solver.eigenvalues()[order[static_cast<std::size_t>(k)]];
    ComplexVector v = solver.eigenvectors().col(order[static_cast<std::size_t>(k)]);
    v.normalize();
    fix_phase(v);
    es.right_vectors.col(k) = v;
  }

  const ComplexMatrix inverse = es.right_vectors.partialPivLu().inverse();
  es.left_vectors = inverse.adjoint();
  if (!inverse.allFinite()) {
    throw NonDiagonalizable("eig: eigenvector matrix is singular (exceptional point?)");
  }
  const double residual = relative_error(es.reconstruct(), m);
  if (!(residual <= tol)) {
    throw NonDiagonalizable("eig: reconstruction residual " + std::to_string(residual) +
                            " exceeds tolerance (exceptional point?)");
  }
  return es;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
  require_square_finite(m, "matrix_exponential");
  return m.exp();
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& p, double tol) {
  require_square_finite(p, "hermitian_sqrt");
  if (!is_hermitian(p, tol)) throw NotHermitianInput("hermitian_sqrt: input is not Hermitian");
  const ComplexMatrix sym = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const Eigen::VectorXd& w = solver.eigenvalues();
  const double scale = w.cwiseAbs().maxCoeff();
  if (!(w.minCoeff() > tol * scale)) {
    throw NotPositiveDefinite("hermitian_sqrt: smallest eigenvalue " + std::to_string(w.minCoeff()) +
                              " is not positive");
  }
  const ComplexMatrix& q = solver.eigenvectors();
  const ComplexMatrix root = q * w.cwiseSqrt().cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (root + root.adjoint());
}

void validate_metric(const ComplexMatrix& eta, double tol) {
  if (eta.rows() == 0 || eta.rows() != eta.cols() || !eta.allFinite()) {
    throw InvalidMetric("metric must be a finite non-empty square matrix");
  }
  if (!is_hermitian(eta, tol)) throw InvalidMetric("metric is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (eta + eta.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& w = solver.eigenvalues();
  if (!(w.minCoeff() > tol * w.cwiseAbs().maxCoeff())) {
    throw InvalidMetric("metric is not positive-definite (min eigenvalue " +
                        std::to_string(w.minCoeff()) + ")");
  }
}

bool is_self_adjoint_wrt(const ComplexMatrix& a, const ComplexMatrix& eta, double tol) {
  validate_metric(eta, tol);
  require_square_finite(a, "is_self_adjoint_wrt");
  if (a.rows() != eta.rows()) throw DimensionMismatch("is_self_adjoint_wrt: operator/metric size");
  const ComplexMatrix eta_a = eta * a;
  return (eta_a - a.adjoint() * eta).norm() <= tol * eta_a.norm();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace ptqm
