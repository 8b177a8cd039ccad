#pragma once

// Closed forms for the 2x2 PT-symmetric model
//
//   H = [[r e^{i theta}, s], [s, r e^{-i theta}]],   sin(alpha) = r sin(theta) / s,
//
// with P = sigma_1 and T complex conjugation. These serve as the reference
// against which the generic constructions are checked.

#include "ptqm/linalg.hpp"

#include <utility>
#include <vector>

namespace ptqm::two_level {

/// Validated (r, s, theta). s is stored positive: a negative s is the same
/// model in the basis conjugated by sigma_3, and basis_flipped records it.
class Params {
 public:
  /// Throws InvalidParams for s == 0, non-finite input, or
  /// |r sin(theta) / s| >= 1 (broken phase and its exceptional boundary).
  static Params make(double r, double s, double theta);

  double r() const { return r_; }
  double s() const { return s_; }
  double theta() const { return theta_; }
  double alpha() const { return alpha_; }
  bool basis_flipped() const { return flipped_; }

 private:
  Params(double r, double s, double theta, double alpha, bool flipped)
      : r_(r), s_(s), theta_(theta), alpha_(alpha), flipped_(flipped) {}

  double r_;
  double s_;
  double theta_;
  double alpha_;
  bool flipped_;
};

/// Raw matrix for any (r, s, theta); no validation. Used to probe the
/// broken phase and the exceptional point.
ComplexMatrix hamiltonian(double r, double s, double theta);

ComplexMatrix parity();
ComplexMatrix build_H(const Params& p);

/// (eps_+, eps_-) = r cos(theta) +- s cos(alpha)
std::pair<double, double> eigenvalues_closed_form(const Params& p);

/// sec(alpha) sigma_1 + i tan(alpha) sigma_3
ComplexMatrix C_closed_form(const Params& p);

/// P^T C^T = sec(alpha) sigma_0 + tan(alpha) sigma_2, eigenvalues sec +- tan.
ComplexMatrix eta_closed_form(const Params& p);

/// The map U exactly as printed in the source derivation, bottom row
/// (-i e^{i alpha/2}, i e^{i alpha/2}). It is not assumed to satisfy
/// U^dagger U = eta; see U_printed_residual.
ComplexMatrix U_printed(const Params& p);
double U_printed_residual(const Params& p);

/// diag(eps_+, eps_-) = r cos(theta) sigma_0 + s cos(alpha) sigma_3
ComplexMatrix h_closed_form(const Params& p);

/// S_mu = U^{-1} (sigma_mu / 2) U in the frame where S_1 = -sigma_2 / 2:
///   S_0 = sigma_0 / 2,  S_1 = -sigma_2 / 2,
///   S_2 = (i tan(alpha) sigma_1 - sec(alpha) sigma_3) / 2,
///   S_3 = (sec(alpha) sigma_1 + i tan(alpha) sigma_3) / 2 = C / 2.
/// Throws IndexOutOfRange for mu outside 0..3.
ComplexMatrix S_mu(const Params& p, int mu);

/// Symmetric CPT-invariant matrices:
///   a sigma_0 + (b - i c sin(alpha)) sigma_1 + (c + i b sin(alpha)) sigma_3,
/// the real span of S_0, S_2, S_3.
ComplexMatrix bender_family(const Params& p, double a, double b, double c);

/// O_H(t) = sin(2 s cos(alpha) t) S_1 + cos(2 s cos(alpha) t) S_2
ComplexMatrix heisenberg_S2_closed_form(const Params& p, double t);

/// Diagonal phases taking the canonical equivalence map to the frame of S_mu.
ComplexVector spin_frame_gauge();

/// Period pi / (s cos(alpha)) of the Heisenberg-picture S_2.
double period(const Params& p);

/// t_k = k T / steps for k = 0..steps-1 (endpoint excluded).
std::vector<double> period_grid(const Params& p, int steps);

/// k pi / (2 s cos(alpha)) for k = 0..count-1; there O_H(t) = +-S_2.
std::vector<double> exception_times(const Params& p, int count);

}  // namespace ptqm::two_level
