#pragma once

// Spectrum of H = p^2 + x^2 (ix)^nu on the real line, 0 <= nu < 2.
//
// For real x the principal branch gives (ix)^nu = |x|^nu exp(i pi nu sign(x) / 2),
// so V(-x) = conj(V(x)) and V is continuous on each half-line. -d^2/dx^2 is
// discretized with second-order central differences on N points spanning
// [-L, L] with Dirichlet ends, which yields a complex symmetric tridiagonal
// matrix on the N - 2 interior points.

#include "ptqm/linalg.hpp"

#include <vector>

namespace ptqm::spectral {

class Problem {
 public:
  /// Throws OutOfRegime unless 0 <= nu < 2; InputError for L <= 0 or N < 3.
  static Problem make(double nu, double half_width = 12.0, int grid_points = 4000);

  double nu() const { return nu_; }
  double half_width() const { return half_width_; }
  int grid_points() const { return grid_points_; }
  double spacing() const { return 2.0 * half_width_ / (grid_points_ - 1); }
  int interior_points() const { return grid_points_ - 2; }

  Problem with_grid_points(int grid_points) const;

 private:
  Problem(double nu, double half_width, int grid_points)
      : nu_(nu), half_width_(half_width), grid_points_(grid_points) {}

  double nu_;
  double half_width_;
  int grid_points_;
};

/// x^2 |x|^nu exp(i pi nu sign(x) / 2). Throws OutOfRegime outside [0, 2).
Complex potential(double x, double nu);

/// Interior grid coordinates, exactly antisymmetric about x = 0.
std::vector<double> grid(const Problem& p);

/// Complex diagonal plus constant real off-diagonal.
struct TridiagonalOperator {
  ComplexVector diagonal;
  double off_diagonal = 0.0;

  Eigen::Index size() const { return diagonal.size(); }
  ComplexMatrix to_dense() const;
  ComplexVector apply(const ComplexVector& v) const;
};

TridiagonalOperator discretize(const Problem& p);

/// LU factorization of T - shift with partial pivoting (LAPACK gttrf layout).
class TridiagonalLU {
 public:
  TridiagonalLU(const TridiagonalOperator& op, Complex shift);
  ComplexVector solve(ComplexVector b) const;

 private:
  ComplexVector lower_;
  ComplexVector diag_;
  ComplexVector upper_;
  ComplexVector upper2_;
  std::vector<bool> swapped_;
};

struct Level {
  Complex value;
  ComplexVector vector;  // unit Euclidean norm
};

/// Fraction of |psi|^2 carried by points with |x| > 0.9 L.
double outer_weight(const Problem& p, const ComplexVector& psi);

/// Levels of the finite-difference matrix itself (no extrapolation), lowest
/// first by real part, with box artifacts removed. Throws ConvergenceFailure
/// if fewer than k physical levels are found.
std::vector<Level> discrete_levels(const Problem& p, int k);

/// Refines an eigenpair guess of the discretization of p by shift-invert
/// iteration. Throws ConvergenceFailure.
Level refine_level(const TridiagonalOperator& op, Complex shift);

struct SpectrumResult {
  std::vector<Complex> eigenvalues;  // ascending real part
  double max_imag = 0.0;
  bool converged = false;
  /// Largest |Re| change of the reported levels under N -> 2N.
  double refinement_change = 0.0;
};

inline constexpr double kConvergenceThreshold = 1e-6;

/// Lowest k levels, Richardson-extrapolated from grids N and 2N, which
/// cancels the O(dx^2) discretization error. converged is set when the same
/// extrapolation from 2N and 4N moves every real part by less than 1e-6.
SpectrumResult spectrum(const Problem& p, int k);

/// Real (max |Im| < tol), positive, and non-degenerate (spacing > tol).
bool verify_reality(const Problem& p, int k, double tol);
bool verify_reality(const SpectrumResult& result, double tol);

}  // namespace ptqm::spectral
