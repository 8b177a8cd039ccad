#include "ptqm/equivalence_map.hpp"

#include "ptqm/errors.hpp"
#include "ptqm/pt_structure.hpp"

#include <cmath>

namespace ptqm {

using namespace std::complex_literals;

EquivalencePair build_equivalence(const ComplexMatrix& h, const Metric& eta, double tol) {
  require_square_finite(h, "build_equivalence");
  if (h.rows() != eta.dim()) throw DimensionMismatch("build_equivalence: H and eta sizes differ");
  if (!is_pseudo_hermitian(h, eta, tol)) {
    throw PseudoHermiticityViolated("build_equivalence: eta H != H^dagger eta");
  }
  const ComplexMatrix rho = hermitian_sqrt(eta.matrix(), tol);
  const ComplexMatrix rho_inv = rho.partialPivLu().inverse();
  const ComplexMatrix k = rho * h * rho_inv;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (k + k.adjoint()));
  const Eigen::Index n = h.rows();
  ComplexMatrix q(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    ComplexVector v = solver.eigenvectors().col(n - 1 - j);
    fix_phase(v);
    q.col(j) = v;
  }
  ComplexMatrix u = q.adjoint() * rho;
  ComplexMatrix u_inv = rho_inv * q;
  ComplexMatrix h_plain = u * h * u_inv;
  return EquivalencePair{std::move(u), std::move(u_inv), std::move(h_plain), eta};
}

EquivalencePair regauge(const EquivalencePair& pair, const ComplexVector& phases) {
  if (phases.size() != pair.U.rows()) throw DimensionMismatch("regauge: wrong number of phases");
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    if (std::abs(std::abs(phases[i]) - 1.0) > kDefaultTolerance) {
      throw InputError("regauge: phases must have unit modulus");
    }
  }
  const auto d = phases.asDiagonal();
  ComplexMatrix u = d * pair.U;
  ComplexMatrix u_inv = pair.U_inverse * phases.conjugate().asDiagonal();
  ComplexMatrix h = d * pair.h * phases.conjugate().asDiagonal();
  return EquivalencePair{std::move(u), std::move(u_inv), std::move(h), pair.eta};
}

ComplexMatrix pull_back_observable(const EquivalencePair& pair, const ComplexMatrix& o,
                                   double tol) {
  require_square_finite(o, "pull_back_observable");
  if (o.rows() != pair.U.rows()) throw DimensionMismatch("pull_back_observable: size");
  if (!is_hermitian(o, tol)) throw NotHermitianInput("pull_back_observable: o != o^dagger");
  return pair.U_inverse * o * pair.U;
}

ComplexMatrix heisenberg_evolve(const ComplexMatrix& h, const ComplexMatrix& o, double t) {
  require_square_finite(h, "heisenberg_evolve");
  require_square_finite(o, "heisenberg_evolve");
  if (h.rows() != o.rows()) throw DimensionMismatch("heisenberg_evolve: H and O sizes differ");
  const ComplexMatrix forward = matrix_exponential((1.0i * t) * h);
  const ComplexMatrix backward = matrix_exponential((-1.0i * t) * h);
  return forward * o * backward;
}

BenderCheck check_observable_bender(const ComplexMatrix& o, const ComplexMatrix& c,
                                    const ComplexMatrix& parity, double tol) {
  require_square_finite(o, "check_observable_bender");
  if (o.rows() != c.rows()) throw DimensionMismatch("check_observable_bender: O and C sizes");
  BenderCheck check;
  check.symmetric = is_symmetric(o, tol);
  check.cpt_invariant = commutes_with_antilinear(o, cpt_operator(c, parity), tol);
  return check;
}

bool check_observable_hermitian(const ComplexMatrix& o, const Metric& eta, double tol) {
  return is_self_adjoint_wrt(o, eta.matrix(), tol);
}

ConsistencyReport consistency_demo(const ComplexMatrix& h, const ComplexMatrix& c,
                                   const ComplexMatrix& parity, const Metric& eta,
                                   const ComplexMatrix& o, const std::vector<double>& times,
                                   double tol) {
  if (!check_observable_bender(o, c, parity, tol).passes()) {
    throw PreconditionViolated(
        "consistency_demo: O must be symmetric and CPT-invariant at t = 0");
  }
  ConsistencyReport report;
  report.rows.reserve(times.size());
  report.bender_stable = true;
  report.eta_stable = true;
  for (double t : times) {
    const ComplexMatrix evolved = heisenberg_evolve(h, o, t);
    const BenderCheck bender = check_observable_bender(evolved, c, parity, tol);
    ConsistencyRow row{t, bender.symmetric, bender.cpt_invariant,
                       check_observable_hermitian(evolved, eta, tol)};
    report.bender_stable = report.bender_stable && bender.passes();
    report.eta_stable = report.eta_stable && row.eta_hermitian;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace ptqm
