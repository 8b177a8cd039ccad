#include "ptqm/two_level.hpp"

#include "ptqm/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ptqm::two_level {

using namespace std::complex_literals;

Params Params::make(double r, double s, double theta) {
  if (!std::isfinite(r) || !std::isfinite(s) || !std::isfinite(theta)) {
    throw InvalidParams("two-level parameters must be finite");
  }
  if (s == 0.0) throw InvalidParams("two-level model requires s != 0");
  const bool flipped = s < 0.0;
  const double s_pos = std::abs(s);
  const double ratio = r * std::sin(theta) / s_pos;
  if (!(std::abs(ratio) < 1.0)) {
    std::ostringstream msg;
    msg << "two-level model requires |r sin(theta)/s| < 1, got " << std::abs(ratio)
        << " (broken PT phase or exceptional point)";
    throw InvalidParams(msg.str());
  }
  return Params(r, s_pos, theta, std::asin(ratio), flipped);
}

ComplexMatrix hamiltonian(double r, double s, double theta) {
  ComplexMatrix h(2, 2);
  h << r * std::exp(1.0i * theta), s, s, r * std::exp(-1.0i * theta);
  return h;
}

ComplexMatrix parity() {
  return sigma(1);
}

ComplexMatrix build_H(const Params& p) {
  return hamiltonian(p.r(), p.s(), p.theta());
}

std::pair<double, double> eigenvalues_closed_form(const Params& p) {
  const double centre = p.r() * std::cos(p.theta());
  const double half_gap = p.s() * std::cos(p.alpha());
  return {centre + half_gap, centre - half_gap};
}

ComplexMatrix C_closed_form(const Params& p) {
  const double sec = 1.0 / std::cos(p.alpha());
  return sec * sigma(1) + (1.0i * std::tan(p.alpha())) * sigma(3);
}

ComplexMatrix eta_closed_form(const Params& p) {
  return (1.0 / std::cos(p.alpha())) * sigma(0) + std::tan(p.alpha()) * sigma(2);
}

ComplexMatrix U_printed(const Params& p) {
  const Complex e = std::exp(0.5i * p.alpha());
  ComplexMatrix u(2, 2);
  u << e, std::conj(e), -1.0i * e, 1.0i * e;
  return u / std::sqrt(2.0 * std::cos(p.alpha()));
}

double U_printed_residual(const Params& p) {
  const ComplexMatrix u = U_printed(p);
  return (u.adjoint() * u - eta_closed_form(p)).norm();
}

ComplexMatrix h_closed_form(const Params& p) {
  return p.r() * std::cos(p.theta()) * sigma(0) + p.s() * std::cos(p.alpha()) * sigma(3);
}

ComplexMatrix S_mu(const Params& p, int mu) {
  const double sec = 1.0 / std::cos(p.alpha());
  const double tan = std::tan(p.alpha());
  switch (mu) {
    case 0: return 0.5 * sigma(0);
    case 1: return -0.5 * sigma(2);
    case 2: return 0.5 * ((1.0i * tan) * sigma(1) - sec * sigma(3));
    case 3: return 0.5 * (sec * sigma(1) + (1.0i * tan) * sigma(3));
    default: throw IndexOutOfRange("S_mu: index must be in 0..3, got " + std::to_string(mu));
  }
}

ComplexMatrix bender_family(const Params& p, double a, double b, double c) {
  const double sin = std::sin(p.alpha());
  return a * sigma(0) + Complex(b, -c * sin) * sigma(1) + Complex(c, b * sin) * sigma(3);
}

ComplexMatrix heisenberg_S2_closed_form(const Params& p, double t) {
  const double phase = 2.0 * p.s() * std::cos(p.alpha()) * t;
  return std::sin(phase) * S_mu(p, 1) + std::cos(phase) * S_mu(p, 2);
}

ComplexVector spin_frame_gauge() {
  ComplexVector d(2);
  d << 1.0, -1.0i;
  return d;
}

double period(const Params& p) {
  return std::numbers::pi / (p.s() * std::cos(p.alpha()));
}

std::vector<double> period_grid(const Params& p, int steps) {
  if (steps < 2) throw InputError("period_grid: need at least 2 steps");
  std::vector<double> times(static_cast<std::size_t>(steps));
  const double span = period(p);
  for (int k = 0; k < steps; ++k) times[static_cast<std::size_t>(k)] = span * k / steps;
  return times;
}

std::vector<double> exception_times(const Params& p, int count) {
  std::vector<double> times;
  const double step = 0.5 * period(p);
  for (int k = 0; k < count; ++k) times.push_back(step * k);
  return times;
}

}  // namespace ptqm::two_level
