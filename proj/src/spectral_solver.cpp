#include "ptqm/spectral_solver.hpp"

#include "ptqm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace ptqm::spectral {

namespace {

void require_regime(double nu) {
  if (!(nu >= 0.0 && nu < 2.0)) {
    std::ostringstream msg;
    msg << "nu = " << nu
        << " is outside [0, 2); for nu >= 2 the eigenproblem needs vanishing boundary conditions "
           "on a complex contour, which is not supported";
    throw OutOfRegime(msg.str());
  }
}

// Coarse grid used only to seed the shift-invert refinement.
int coarse_points(int grid_points, int k) {
  return std::min(grid_points, std::min(600, 200 + 40 * k));
}

bool sorted_by_real(const Complex& a, const Complex& b) {
  return a.real() < b.real();
}

Complex bilinear(const ComplexVector& a, const ComplexVector& b) {
  return (a.transpose() * b).value();
}

Complex richardson(Complex coarse, double dx_coarse, Complex fine, double dx_fine) {
  const double hc = dx_coarse * dx_coarse;
  const double hf = dx_fine * dx_fine;
  return (fine * hc - coarse * hf) / (hc - hf);
}

}  // namespace

Problem Problem::make(double nu, double half_width, int grid_points) {
  require_regime(nu);
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InputError("box half-width L must be positive and finite");
  }
  if (grid_points < 3) throw InputError("need at least 3 grid points");
  return Problem(nu, half_width, grid_points);
}

Problem Problem::with_grid_points(int grid_points) const {
  return make(nu_, half_width_, grid_points);
}

Complex potential(double x, double nu) {
  require_regime(nu);
  const double ax = std::abs(x);
  const Complex right = std::polar(ax * ax * std::pow(ax, nu), 0.5 * std::numbers::pi * nu);
  return x < 0.0 ? std::conj(right) : right;
}

std::vector<double> grid(const Problem& p) {
  const int last = p.grid_points() - 1;
  std::vector<double> x(static_cast<std::size_t>(p.interior_points()));
  for (int j = 1; j < last; ++j) {
    x[static_cast<std::size_t>(j - 1)] = static_cast<double>(2 * j - last) * p.half_width() / last;
  }
  return x;
}

ComplexMatrix TridiagonalOperator::to_dense() const {
  const Eigen::Index n = size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m.diagonal() = diagonal;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    m(i, i + 1) = off_diagonal;
    m(i + 1, i) = off_diagonal;
  }
  return m;
}

ComplexVector TridiagonalOperator::apply(const ComplexVector& v) const {
  const Eigen::Index n = size();
  ComplexVector out = diagonal.cwiseProduct(v);
  if (n > 1) {
    out.head(n - 1) += off_diagonal * v.tail(n - 1);
    out.tail(n - 1) += off_diagonal * v.head(n - 1);
  }
  return out;
}

TridiagonalOperator discretize(const Problem& p) {
  const double dx = p.spacing();
  const double kinetic = 1.0 / (dx * dx);
  const std::vector<double> x = grid(p);
  TridiagonalOperator op;
  op.diagonal.resize(static_cast<Eigen::Index>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    op.diagonal[static_cast<Eigen::Index>(j)] = 2.0 * kinetic + potential(x[j], p.nu());
  }
  op.off_diagonal = -kinetic;
  return op;
}

TridiagonalLU::TridiagonalLU(const TridiagonalOperator& op, Complex shift) {
  const Eigen::Index n = op.size();
  diag_ = op.diagonal.array() - shift;
  lower_ = ComplexVector::Constant(std::max<Eigen::Index>(n - 1, 0), op.off_diagonal);
  upper_ = lower_;
  upper2_ = ComplexVector::Zero(std::max<Eigen::Index>(n - 2, 0));
  swapped_.assign(static_cast<std::size_t>(std::max<Eigen::Index>(n - 1, 0)), false);

  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (std::abs(diag_[i]) >= std::abs(lower_[i])) {
      if (diag_[i] != 0.0) {
        const Complex factor = lower_[i] / diag_[i];
        lower_[i] = factor;
        diag_[i + 1] -= factor * upper_[i];
      }
    } else {
      const Complex factor = diag_[i] / lower_[i];
      diag_[i] = lower_[i];
      lower_[i] = factor;
      const Complex temp = upper_[i];
      upper_[i] = diag_[i + 1];
      diag_[i + 1] = temp - factor * diag_[i + 1];
      if (i + 2 < n) {
        upper2_[i] = upper_[i + 1];
        upper_[i + 1] = -factor * upper_[i + 1];
      }
      swapped_[static_cast<std::size_t>(i)] = true;
    }
  }
  // An exact zero pivot means the shift is an eigenvalue to machine
  // precision; nudging it keeps inverse iteration well defined.
  const double tiny = 1e-300 + 1e-16 * op.diagonal.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (diag_[i] == 0.0) diag_[i] = tiny;
  }
}

ComplexVector TridiagonalLU::solve(ComplexVector b) const {
  const Eigen::Index n = diag_.size();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (!swapped_[static_cast<std::size_t>(i)]) {
      b[i + 1] -= lower_[i] * b[i];
    } else {
      const Complex temp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = temp - lower_[i] * b[i];
    }
  }
  b[n - 1] /= diag_[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - upper_[n - 2] * b[n - 1]) / diag_[n - 2];
  for (Eigen::Index i = n - 3; i >= 0; --i) {
    b[i] = (b[i] - upper_[i] * b[i + 1] - upper2_[i] * b[i + 2]) / diag_[i];
  }
  return b;
}

Level refine_level(const TridiagonalOperator& op, Complex shift) {
  const Eigen::Index n = op.size();
  // Deterministic start vector with no special symmetry.
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = Complex(1.0 + 0.37 * std::sin(1.3 * static_cast<double>(i)),
                   0.21 * std::cos(0.7 * static_cast<double>(i)));
  }
  v.normalize();

  const auto rayleigh = [&](const ComplexVector& w) {
    return bilinear(w, op.apply(w)) / bilinear(w, w);
  };

  // Fixed-shift inverse iteration locks onto the level nearest the guess,
  // then a few Rayleigh-quotient steps polish it.
  TridiagonalLU lu(op, shift);
  Complex estimate = shift;
  bool settled = false;
  for (int it = 0; it < 200 && !settled; ++it) {
    v = lu.solve(v);
    v.normalize();
    const Complex next = rayleigh(v);
    settled = it > 0 && std::abs(next - estimate) <= 1e-13 * std::max(1.0, std::abs(next));
    estimate = next;
  }
  for (int it = 0; it < 3; ++it) {
    TridiagonalLU polish(op, estimate);
    v = polish.solve(v);
    v.normalize();
    const Complex next = rayleigh(v);
    const bool done = std::abs(next - estimate) <= 1e-14 * std::max(1.0, std::abs(next));
    estimate = next;
    if (done) break;
  }

  const double scale = std::abs(op.off_diagonal) * 4.0 + op.diagonal.cwiseAbs().maxCoeff();
  const double residual = (op.apply(v) - estimate * v).norm();
  if (!std::isfinite(residual) || residual > 1e-8 * scale) {
    throw ConvergenceFailure("shift-invert iteration did not converge near " +
                             std::to_string(shift.real()) + " (residual " +
                             std::to_string(residual) + ")");
  }
  return Level{estimate, v};
}

double outer_weight(const Problem& p, const ComplexVector& psi) {
  const std::vector<double> x = grid(p);
  const double edge = 0.9 * p.half_width();
  double outer = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(x[j]) > edge) outer += std::norm(psi[static_cast<Eigen::Index>(j)]);
  }
  return outer / psi.squaredNorm();
}

std::vector<Level> discrete_levels(const Problem& p, int k) {
  if (k < 1 || k > p.interior_points()) {
    throw InputError("number of levels must be in 1..N-2, got " + std::to_string(k));
  }
  const Problem coarse = p.with_grid_points(coarse_points(p.grid_points(), k));
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(discretize(coarse).to_dense(),
                                                  /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("coarse eigensolve failed");
  std::vector<Complex> guesses(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(guesses.begin(), guesses.end(), sorted_by_real);

  const TridiagonalOperator op = discretize(p);
  std::vector<Level> levels;
  for (const Complex& guess : guesses) {
    if (static_cast<int>(levels.size()) == k) break;
    Level level;
    try {
      level = refine_level(op, guess);
    } catch (const ConvergenceFailure&) {
      continue;  // wall-bound seeds from deep inside the box do not refine
    }
    // Box artifact: weight piled up against the Dirichlet walls.
    if (outer_weight(p, level.vector) > 0.01) continue;
    const bool duplicate = std::any_of(levels.begin(), levels.end(), [&](const Level& l) {
      return std::abs(l.value - level.value) <= 1e-8 * std::max(1.0, std::abs(level.value));
    });
    if (duplicate) continue;
    levels.push_back(std::move(level));
  }
  if (static_cast<int>(levels.size()) < k) {
    throw ConvergenceFailure("found only " + std::to_string(levels.size()) + " of " +
                             std::to_string(k) + " physical levels");
  }
  std::sort(levels.begin(), levels.end(),
            [](const Level& a, const Level& b) { return sorted_by_real(a.value, b.value); });
  return levels;
}

SpectrumResult spectrum(const Problem& p, int k) {
  const std::vector<Level> base = discrete_levels(p, k);
  const Problem fine = p.with_grid_points(2 * p.grid_points());
  const Problem finest = p.with_grid_points(4 * p.grid_points());
  const TridiagonalOperator fine_op = discretize(fine);
  const TridiagonalOperator finest_op = discretize(finest);

  SpectrumResult result;
  result.converged = true;
  for (const Level& level : base) {
    const Complex e_fine = refine_level(fine_op, level.value).value;
    const Complex e_finest = refine_level(finest_op, e_fine).value;
    const Complex reported = richardson(level.value, p.spacing(), e_fine, fine.spacing());
    const Complex refined = richardson(e_fine, fine.spacing(), e_finest, finest.spacing());
    const double change = std::abs(refined.real() - reported.real());
    result.refinement_change = std::max(result.refinement_change, change);
    result.converged = result.converged && change < kConvergenceThreshold;
    result.eigenvalues.push_back(reported);
    result.max_imag = std::max(result.max_imag, std::abs(reported.imag()));
  }
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(), sorted_by_real);
  return result;
}

bool verify_reality(const SpectrumResult& result, double tol) {
  if (!(result.max_imag < tol)) return false;
  for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
    if (!(result.eigenvalues[i].real() > 0.0)) return false;
    if (i > 0 && !(result.eigenvalues[i].real() - result.eigenvalues[i - 1].real() > tol)) {
      return false;
    }
  }
  return true;
}

bool verify_reality(const Problem& p, int k, double tol) {
  return verify_reality(spectrum(p, k), tol);
}

}  // namespace ptqm::spectral
