#pragma once

#include "ptqm/linalg.hpp"
#include "ptqm/two_level.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace testing_support {

using ptqm::Complex;
using ptqm::ComplexMatrix;
using ptqm::ComplexVector;

inline constexpr double kPi = std::numbers::pi;

// Parameters strictly inside the unbroken region, |sin(alpha)| <= 0.95.
inline ptqm::two_level::Params random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> s_dist(0.2, 3.0);
  std::uniform_real_distribution<double> theta_dist(-kPi, kPi);
  for (;;) {
    const double r = r_dist(rng), s = s_dist(rng), theta = theta_dist(rng);
    if (std::abs(r * std::sin(theta) / s) <= 0.95) return ptqm::two_level::Params::make(r, s, theta);
  }
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline ComplexVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrix a = random_matrix(rng, n);
  return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix random_positive(std::mt19937_64& rng, Eigen::Index n) {
  const ComplexMatrix a = random_matrix(rng, n);
  return a * a.adjoint() + static_cast<double>(n) * ComplexMatrix::Identity(n, n);
}

inline ComplexMatrix cm(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()),
                  static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

inline ComplexVector cv(std::initializer_list<Complex> values) {
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const Complex& z : values) v[i++] = z;
  return v;
}

}  // namespace testing_support
