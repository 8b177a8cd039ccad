#include "ptqm/cpt_metric.hpp"
#include "ptqm/equivalence_map.hpp"
#include "ptqm/errors.hpp"
#include "ptqm/two_level.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ptqm;
using namespace testing_support;
using namespace std::complex_literals;
namespace tl = ptqm::two_level;

namespace {

struct Model {
  tl::Params p;
  ComplexMatrix h;
  ComplexMatrix c;
  Metric eta;
  EquivalencePair pair;
};

Model model(const tl::Params& p) {
  ComplexMatrix h = tl::build_H(p);
  ComplexMatrix c = build_C(pt_normalize(eig(h), tl::parity()));
  Metric eta = metric_from_CPT(c, tl::parity());
  EquivalencePair pair = build_equivalence(h, eta);
  return Model{p, h, c, eta, pair};
}

int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

}  // namespace

TEST_CASE("build_equivalence for a Hermitian H with flat metric") {
  const ComplexMatrix h = cm({{2.0, 1.0 - 1.0i}, {1.0 + 1.0i, -1.0}});
  const EquivalencePair pair = build_equivalence(h, Metric(ComplexMatrix::Identity(2, 2)));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  CHECK(std::abs(pair.h(0, 0) - solver.eigenvalues()[1]) < 1e-12);
  CHECK(std::abs(pair.h(1, 1) - solver.eigenvalues()[0]) < 1e-12);
  CHECK(std::abs(pair.h(0, 1)) < 1e-12);
  CHECK(relative_error(pair.U * pair.U.adjoint(), ComplexMatrix::Identity(2, 2)) < 1e-12);
  // Rows of U are the conjugated eigenvectors.
  CHECK(std::abs(std::abs((pair.U.row(0) * solver.eigenvectors().col(1)).value()) - 1.0) < 1e-12);
}

TEST_CASE("build_equivalence reproduces the diagonal Hermitian counterpart") {
  const Model m = model(tl::Params::make(1, 1, kPi / 6));
  CHECK(relative_error(m.pair.h, cm({{std::sqrt(3.0), 0.0}, {0.0, 0.0}})) < 1e-12);
  CHECK(relative_error(m.pair.h, tl::h_closed_form(m.p)) < 1e-12);
  CHECK(relative_error(m.pair.U.adjoint() * m.pair.U, m.eta.matrix()) < 1e-12);
}

TEST_CASE("build_equivalence rejects a metric that does not make H self-adjoint") {
  const ComplexMatrix h = tl::build_H(tl::Params::make(1, 1, kPi / 6));
  CHECK_THROWS_AS(build_equivalence(h, Metric(ComplexMatrix::Identity(2, 2))),
                  PseudoHermiticityViolated);
}

TEST_CASE("property: equivalence pair invariants over random parameters") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Model m = model(random_params(rng));
    const auto [ep, em] = tl::eigenvalues_closed_form(m.p);
    CHECK((m.pair.U.adjoint() * m.pair.U - m.eta.matrix()).norm() <= 1e-10 * m.eta.matrix().norm());
    CHECK((m.pair.h - m.pair.h.adjoint()).norm() <= 1e-10 * std::max(1.0, m.pair.h.norm()));
    CHECK(std::abs(m.pair.h(0, 0) - ep) <= 1e-10 * std::max(1.0, std::abs(ep)));
    CHECK(std::abs(m.pair.h(1, 1) - em) <= 1e-10 * std::max(1.0, std::abs(em)));
    CHECK(relative_error(m.pair.U * m.pair.U_inverse, ComplexMatrix::Identity(2, 2)) <= 1e-12);
  }
}

TEST_CASE("regauge keeps the defining property") {
  const Model m = model(tl::Params::make(0.7, 1.3, -0.4));
  const EquivalencePair g = regauge(m.pair, cv({std::polar(1.0, 0.3), std::polar(1.0, -1.2)}));
  CHECK(relative_error(g.U.adjoint() * g.U, m.eta.matrix()) < 1e-12);
  CHECK(relative_error(g.h, m.pair.h) < 1e-12);
  CHECK_THROWS_AS(regauge(m.pair, cv({1.0, 2.0})), InputError);
  CHECK_THROWS_AS(regauge(m.pair, cv({1.0})), DimensionMismatch);
}

TEST_CASE("pull_back_observable") {
  const Model m = model(tl::Params::make(1, 1, kPi / 6));
  CHECK(relative_error(pull_back_observable(m.pair, ComplexMatrix::Identity(2, 2)),
                       ComplexMatrix::Identity(2, 2)) < 1e-12);

  // S_3 = C / 2 in every gauge.
  const ComplexMatrix s3 = pull_back_observable(m.pair, 0.5 * sigma(3));
  const double a = 0.5 / std::sqrt(3.0), b = 1.0 / std::sqrt(3.0);
  CHECK(relative_error(s3, cm({{1.0i * a, b}, {b, -1.0i * a}})) < 1e-12);

  const EquivalencePair gauged = regauge(m.pair, tl::spin_frame_gauge());
  CHECK(relative_error(pull_back_observable(gauged, 0.5 * sigma(1)), -0.5 * sigma(2)) < 1e-12);
  CHECK(relative_error(pull_back_observable(gauged, 0.5 * sigma(2)), tl::S_mu(m.p, 2)) < 1e-12);

  CHECK_THROWS_AS(pull_back_observable(m.pair, 1.0i * sigma(3)), NotHermitianInput);
}

TEST_CASE("property: pulled-back observables are eta-Hermitian and keep the spin algebra") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Model m = model(random_params(rng));
    ComplexMatrix spins[4];
    for (int mu = 0; mu < 4; ++mu) {
      spins[mu] = pull_back_observable(m.pair, 0.5 * sigma(mu));
      CHECK(check_observable_hermitian(spins[mu], m.eta));
    }
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
        for (int k = 1; k <= 3; ++k) expected += (1.0i * double(levi_civita(i, j, k))) * spins[k];
        CHECK((commutator(spins[i], spins[j]) - expected).norm() <= 1e-10 * spins[i].norm() * spins[j].norm());
      }
    }
    const ComplexMatrix o = random_hermitian(rng, 2);
    CHECK(check_observable_hermitian(pull_back_observable(m.pair, o), m.eta));
  }
}

TEST_CASE("heisenberg_evolve") {
  std::mt19937_64 rng(43);
  const ComplexMatrix h = random_matrix(rng, 3);
  const ComplexMatrix o = random_matrix(rng, 3);
  CHECK(relative_error(heisenberg_evolve(h, o, 0.0), o) < 1e-15);
  const ComplexMatrix commuting = h * h - 2.0 * h;
  CHECK(relative_error(heisenberg_evolve(h, commuting, 1.7), commuting) < 1e-10);

  const tl::Params p = tl::Params::make(1, 1, kPi / 6);
  const ComplexMatrix evolved = heisenberg_evolve(tl::build_H(p), tl::S_mu(p, 2), kPi / (2 * std::sqrt(3.0)));
  CHECK(relative_error(evolved, tl::S_mu(p, 1)) < 1e-10);

  // Similarity transform keeps the spectrum.
  const ComplexMatrix some = heisenberg_evolve(h, o, 0.4);
  const EigenSystem before = eig(o), after = eig(some);
  CHECK((before.eigenvalues - after.eigenvalues).norm() < 1e-8 * before.eigenvalues.norm());
}

TEST_CASE("check_observable_bender") {
  const Model m = model(tl::Params::make(1, 1, kPi / 6));
  const BenderCheck s2 = check_observable_bender(tl::S_mu(m.p, 2), m.c, tl::parity());
  CHECK(s2.symmetric);
  CHECK(s2.cpt_invariant);
  const BenderCheck s1 = check_observable_bender(tl::S_mu(m.p, 1), m.c, tl::parity());
  CHECK_FALSE(s1.symmetric);
  CHECK_FALSE(s1.cpt_invariant);
  CHECK(check_observable_bender(ComplexMatrix::Identity(2, 2), m.c, tl::parity()).passes());
}

TEST_CASE("check_observable_hermitian") {
  const Model m = model(tl::Params::make(1, 1, kPi / 6));
  CHECK(check_observable_hermitian(tl::S_mu(m.p, 1), m.eta));
  CHECK_FALSE(check_observable_hermitian(1.0i * sigma(3), Metric(ComplexMatrix::Identity(2, 2))));
}

TEST_CASE("property: eta-Hermiticity survives Heisenberg evolution") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> t_dist(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Model m = model(random_params(rng));
    const ComplexMatrix o = pull_back_observable(m.pair, random_hermitian(rng, 2));
    CHECK(check_observable_hermitian(heisenberg_evolve(m.h, o, t_dist(rng)), m.eta));
  }
}

TEST_CASE("consistency_demo") {
  const Model m = model(tl::Params::make(1, 1, kPi / 6));
  const double quarter = kPi / (2 * std::sqrt(3.0));
  const double half = kPi / std::sqrt(3.0);
  const ConsistencyReport report =
      consistency_demo(m.h, m.c, tl::parity(), m.eta, tl::S_mu(m.p, 2), {0.0, quarter, half});
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].symmetric);
  CHECK(report.rows[0].cpt_invariant);
  CHECK(report.rows[0].eta_hermitian);
  CHECK_FALSE(report.rows[1].symmetric);
  CHECK_FALSE(report.rows[1].cpt_invariant);
  CHECK(report.rows[1].eta_hermitian);
  CHECK(report.rows[2].symmetric);
  CHECK(report.rows[2].cpt_invariant);
  CHECK(relative_error(heisenberg_evolve(m.h, tl::S_mu(m.p, 2), half), -tl::S_mu(m.p, 2)) < 1e-10);
  CHECK_FALSE(report.bender_stable);
  CHECK(report.eta_stable);

  CHECK_THROWS_AS(consistency_demo(m.h, m.c, tl::parity(), m.eta, tl::S_mu(m.p, 1), {0.0}),
                  PreconditionViolated);
}

TEST_CASE("property: CPT norm is conserved, the Dirac norm is not") {
  const Model m = model(tl::Params::make(1, 1, kPi / 6));
  const ComplexVector psi0 = cv({1.0, 0.0});
  const double cpt0 = cpt_inner_product(m.eta, psi0, psi0).real();
  double dirac_min = 1.0, dirac_max = 1.0;
  for (int k = 0; k <= 64; ++k) {
    const double t = 4 * kPi * k / 64;
    const ComplexVector psi = matrix_exponential((-1.0i * t) * m.h) * psi0;
    CHECK(std::abs(cpt_inner_product(m.eta, psi, psi).real() - cpt0) <= 1e-10 * cpt0);
    dirac_min = std::min(dirac_min, psi.squaredNorm());
    dirac_max = std::max(dirac_max, psi.squaredNorm());
  }
  CHECK((dirac_max - dirac_min) > 1e-3);
}
