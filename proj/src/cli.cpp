#include "ptqm/cli.hpp"

#include "ptqm/cpt_metric.hpp"
#include "ptqm/equivalence_map.hpp"
#include "ptqm/errors.hpp"
#include "ptqm/pt_structure.hpp"
#include "ptqm/spectral_solver.hpp"
#include "ptqm/two_level.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace ptqm::cli {

using namespace std::complex_literals;
namespace tl = two_level;

namespace {

struct Pipeline {
  tl::Params params;
  ComplexMatrix h;
  EigenSystem es;
  PtNormalized normalized;
  ComplexMatrix c;
  Metric eta;
  EquivalencePair pair;
};

Pipeline run_pipeline(double r, double s, double theta, double tol) {
  const tl::Params p = tl::Params::make(r, s, theta);
  ComplexMatrix h = tl::build_H(p);
  EigenSystem es = eig(h, tol);
  PtNormalized normalized = pt_normalize(es, tl::parity());
  ComplexMatrix c = build_C(normalized);
  Metric eta = metric_from_CPT(c, tl::parity(), tol);
  EquivalencePair pair = build_equivalence(h, eta, tol);
  return Pipeline{p, std::move(h), std::move(es), std::move(normalized),
                  std::move(c), eta, std::move(pair)};
}

Json params_json(const tl::Params& p) {
  return Json{{"r", p.r()}, {"s", p.s()}, {"theta", p.theta()},
              {"basis_flipped", p.basis_flipped()}};
}

void require_steps(int steps) {
  if (steps < 2) throw InputError("--steps must be at least 2, got " + std::to_string(steps));
}

void write_atomically(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    file << data;
    if (!file) throw std::runtime_error("failed writing " + temp.string());
  }
  fs::rename(temp, target);
}

}  // namespace

Json to_json(Complex z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", x);
  return buf;
}

Json two_level_document(double r, double s, double theta, double tol) {
  const Pipeline run = run_pipeline(r, s, theta, tol);
  const tl::Params& p = run.params;
  const auto [eps_plus, eps_minus] = tl::eigenvalues_closed_form(p);

  const Eigen::VectorXd eta_eigs = run.eta.eigenvalues();
  const EquivalencePair gauged = regauge(run.pair, tl::spin_frame_gauge());
  Json spins = Json::array();
  for (int mu = 0; mu < 4; ++mu) {
    spins.push_back(to_json(pull_back_observable(gauged, 0.5 * sigma(mu), tol)));
  }
  const ComplexMatrix& u = run.pair.U;

  return Json{
      {"command", "two-level"},
      {"params", params_json(p)},
      {"alpha", p.alpha()},
      {"eigenvalues", {eps_plus, eps_minus}},
      {"eigenvalues_numeric", {to_json(run.es.eigenvalues[0]), to_json(run.es.eigenvalues[1])}},
      {"pt_signs", run.normalized.signs},
      {"H", to_json(run.h)},
      {"C", to_json(run.c)},
      {"eta", {{"matrix", to_json(run.eta.matrix())}, {"eigenvalues", {eta_eigs[1], eta_eigs[0]}}}},
      {"U_canonical", to_json(u)},
      {"U_canonical_residual", (u.adjoint() * u - run.eta.matrix()).norm()},
      {"U_printed", to_json(tl::U_printed(p))},
      {"U_printed_residual", tl::U_printed_residual(p)},
      {"h", to_json(run.pair.h)},
      {"S_gauge", to_json(ComplexMatrix(tl::spin_frame_gauge().asDiagonal()))},
      {"S", std::move(spins)},
  };
}

namespace {

struct CheckRun {
  tl::Params params;
  ConsistencyReport report;
  ConsistencyReport exceptions;
};

CheckRun run_check(double r, double s, double theta, int steps, double tol) {
  require_steps(steps);
  const Pipeline run = run_pipeline(r, s, theta, tol);
  const ComplexMatrix s2 = tl::S_mu(run.params, 2);
  ConsistencyReport report = consistency_demo(run.h, run.c, tl::parity(), run.eta, s2,
                                              tl::period_grid(run.params, steps), tol);
  ConsistencyReport exceptions = consistency_demo(run.h, run.c, tl::parity(), run.eta, s2,
                                                  tl::exception_times(run.params, 3), tol);
  return CheckRun{run.params, std::move(report), std::move(exceptions)};
}

Json rows_json(const ConsistencyReport& report) {
  Json rows = Json::array();
  for (const ConsistencyRow& row : report.rows) {
    rows.push_back(Json{{"t", row.t},
                        {"symmetric", row.symmetric},
                        {"cpt_invariant", row.cpt_invariant},
                        {"eta_hermitian", row.eta_hermitian}});
  }
  return rows;
}

}  // namespace

Json check_document(double r, double s, double theta, int steps, double tol) {
  const CheckRun run = run_check(r, s, theta, steps, tol);
  return Json{
      {"command", "check"},
      {"params", params_json(run.params)},
      {"observable", "S_2"},
      {"period", tl::period(run.params)},
      {"steps", steps},
      {"rows", rows_json(run.report)},
      {"exception_rows", rows_json(run.exceptions)},
      {"summary",
       {{"bender_criterion_dynamically_stable", run.report.bender_stable},
        {"eta_criterion_dynamically_stable", run.report.eta_stable},
        {"exception_times_pass_bender", run.exceptions.bender_stable}}},
  };
}

std::string check_csv(double r, double s, double theta, int steps, double tol) {
  const CheckRun run = run_check(r, s, theta, steps, tol);
  std::string out = "t,symmetric,cpt_invariant,eta_hermitian\n";
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const ConsistencyRow& row : run.report.rows) {
    out += format_number(row.t) + "," + flag(row.symmetric) + "," + flag(row.cpt_invariant) +
           "," + flag(row.eta_hermitian) + "\n";
  }
  return out;
}

std::vector<NormRow> evolve_norms(double r, double s, double theta, double t_max, int steps,
                                  const std::optional<ComplexVector>& psi0, double tol) {
  require_steps(steps);
  if (!std::isfinite(t_max) || t_max < 0.0) throw InputError("--t-max must be finite and >= 0");
  ComplexVector state(2);
  state << 1.0, 0.0;
  if (psi0) {
    if (psi0->size() != 2) throw DimensionMismatch("--psi0 must have 2 complex components");
    if (psi0->norm() == 0.0) throw InputError("--psi0 must be nonzero");
    state = *psi0;
  }
  const Pipeline run = run_pipeline(r, s, theta, tol);
  std::vector<NormRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = t_max * k / (steps - 1);
    const ComplexVector psi = matrix_exponential((-1.0i * t) * run.h) * state;
    rows.push_back(NormRow{t, psi.squaredNorm(), cpt_inner_product(run.eta, psi, psi).real()});
  }
  return rows;
}

Json evolve_document(double r, double s, double theta, double t_max, int steps,
                     const std::optional<ComplexVector>& psi0, double tol) {
  const std::vector<NormRow> rows = evolve_norms(r, s, theta, t_max, steps, psi0, tol);
  const tl::Params p = tl::Params::make(r, s, theta);
  Json out_rows = Json::array();
  double dirac_min = rows.front().norm_dirac, dirac_max = dirac_min;
  double cpt_min = rows.front().norm_cpt, cpt_max = cpt_min;
  for (const NormRow& row : rows) {
    out_rows.push_back(Json{{"t", row.t}, {"norm_dirac", row.norm_dirac}, {"norm_cpt", row.norm_cpt}});
    dirac_min = std::min(dirac_min, row.norm_dirac);
    dirac_max = std::max(dirac_max, row.norm_dirac);
    cpt_min = std::min(cpt_min, row.norm_cpt);
    cpt_max = std::max(cpt_max, row.norm_cpt);
  }
  return Json{
      {"command", "evolve"},
      {"params", params_json(p)},
      {"t_max", t_max},
      {"steps", steps},
      {"rows", std::move(out_rows)},
      {"norm_dirac_relative_variation", (dirac_max - dirac_min) / rows.front().norm_dirac},
      {"norm_cpt_relative_variation", (cpt_max - cpt_min) / rows.front().norm_cpt},
  };
}

std::string evolve_csv(const std::vector<NormRow>& rows) {
  std::string out = "t,norm_dirac,norm_cpt\n";
  for (const NormRow& row : rows) {
    out += format_number(row.t) + "," + format_number(row.norm_dirac) + "," +
           format_number(row.norm_cpt) + "\n";
  }
  return out;
}

Json spectrum_document(double nu, int k, double half_width, int grid_points, double reality_tol) {
  const spectral::Problem problem = spectral::Problem::make(nu, half_width, grid_points);
  if (k < 1 || k > problem.interior_points()) {
    throw InputError("--k must be in 1..N-2, got " + std::to_string(k));
  }
  const spectral::SpectrumResult result = spectral::spectrum(problem, k);
  Json levels = Json::array();
  for (const Complex& e : result.eigenvalues) levels.push_back(to_json(e));
  return Json{
      {"command", "spectrum"},
      {"nu", nu},
      {"k", k},
      {"levels", std::move(levels)},
      {"max_imag", result.max_imag},
      {"converged", result.converged},
      {"refinement_change", result.refinement_change},
      {"real_positive_discrete", spectral::verify_reality(result, reality_tol)},
      {"grid", {{"L", half_width}, {"N", grid_points}}},
  };
}

std::string spectrum_csv(const Json& document) {
  std::string out = "n,re,im\n";
  int n = 0;
  for (const Json& level : document.at("levels")) {
    out += std::to_string(n++) + "," + format_number(level.at("re").get<double>()) + "," +
           format_number(level.at("im").get<double>()) + "\n";
  }
  return out;
}

ComplexVector parse_state(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("--psi0: cannot parse '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw InputError("--psi0: cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty() || values.size() % 2 != 0) {
    throw InputError("--psi0 expects re,im pairs (re0,im0,re1,im1)");
  }
  ComplexVector psi(static_cast<Eigen::Index>(values.size() / 2));
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    psi[i] = Complex(values[static_cast<std::size_t>(2 * i)],
                     values[static_cast<std::size_t>(2 * i + 1)]);
  }
  return psi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical toolkit for PT-symmetric and pseudo-Hermitian quantum mechanics", "ptqm"};
  app.require_subcommand(1);
  double tolerance = kDefaultTolerance;
  std::string output_path;
  std::string format;
  app.add_option("--tolerance", tolerance, "Relative tolerance for matrix identities")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", output_path, "Write the data to this file (atomic replace)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  double r = 1.0, s = 1.0, theta = 0.0;
  const auto add_model = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--r", r, "Diagonal modulus r")->required();
    sub->add_option("--s", s, "Off-diagonal coupling s (nonzero)")->required();
    sub->add_option("--theta", theta, "Phase theta in radians")->required();
  };

  CLI::App* two_level_cmd = app.add_subcommand("two-level", "Closed forms and generic pipeline");
  add_model(two_level_cmd);

  int steps = 32;
  CLI::App* check_cmd = app.add_subcommand("check", "Heisenberg-picture observable consistency");
  add_model(check_cmd);
  check_cmd->add_option("--steps", steps, "Samples over one period");

  double t_max = 4.0 * std::acos(-1.0);
  int evolve_steps = 65;
  std::string psi0_text;
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "Dirac and CPT norms under exp(-iHt)");
  add_model(evolve_cmd);
  evolve_cmd->add_option("--t-max", t_max, "Final time");
  evolve_cmd->add_option("--steps", evolve_steps, "Number of samples including both ends");
  evolve_cmd->add_option("--psi0", psi0_text, "Initial state as re0,im0,re1,im1 (default 1,0,0,0)");

  double nu = 0.0, half_width = 12.0, reality_tol = 1e-6;
  int k = 5, grid_points = 4000;
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum of p^2 + x^2 (ix)^nu");
  spectrum_cmd->fallthrough();
  spectrum_cmd->add_option("--nu", nu, "Exponent, 0 <= nu < 2")->required();
  spectrum_cmd->add_option("--k", k, "Number of levels");
  spectrum_cmd->add_option("--L", half_width, "Box half-width");
  spectrum_cmd->add_option("--N", grid_points, "Grid points including the walls");
  spectrum_cmd->add_option("--reality-tol", reality_tol, "Tolerance for the reality verdict");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    std::string data;
    const auto pick = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
    if (two_level_cmd->parsed()) {
      if (pick("json") != "json") throw InputError("two-level output is JSON only");
      data = two_level_document(r, s, theta, tolerance).dump(2) + "\n";
    } else if (check_cmd->parsed()) {
      data = pick("json") == "json" ? check_document(r, s, theta, steps, tolerance).dump(2) + "\n"
                                    : check_csv(r, s, theta, steps, tolerance);
    } else if (evolve_cmd->parsed()) {
      std::optional<ComplexVector> psi0;
      if (!psi0_text.empty()) psi0 = parse_state(psi0_text);
      data = pick("csv") == "json"
                 ? evolve_document(r, s, theta, t_max, evolve_steps, psi0, tolerance).dump(2) + "\n"
                 : evolve_csv(evolve_norms(r, s, theta, t_max, evolve_steps, psi0, tolerance));
    } else if (spectrum_cmd->parsed()) {
      const Json doc = spectrum_document(nu, k, half_width, grid_points, reality_tol);
      data = pick("json") == "json" ? doc.dump(2) + "\n" : spectrum_csv(doc);
    }
    if (output_path.empty()) {
      out << data;
    } else {
      write_atomically(output_path, data);
    }
    return kOk;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
}

}  // namespace ptqm::cli
