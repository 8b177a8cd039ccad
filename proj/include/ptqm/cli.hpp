#pragma once

// Command implementations behind the `ptqm` executable. Each builder
// validates its inputs before computing anything.

#include "ptqm/linalg.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptqm::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kNumericalFailure = 3 };

Json to_json(Complex z);
Json to_json(const ComplexMatrix& m);

Json two_level_document(double r, double s, double theta, double tol);
Json check_document(double r, double s, double theta, int steps, double tol);
std::string check_csv(double r, double s, double theta, int steps, double tol);

struct NormRow {
  double t;
  double norm_dirac;
  double norm_cpt;
};

/// psi(t) = exp(-iHt) psi0 on t_k = k t_max / (steps - 1).
std::vector<NormRow> evolve_norms(double r, double s, double theta, double t_max, int steps,
                                  const std::optional<ComplexVector>& psi0, double tol);
Json evolve_document(double r, double s, double theta, double t_max, int steps,
                     const std::optional<ComplexVector>& psi0, double tol);
std::string evolve_csv(const std::vector<NormRow>& rows);

Json spectrum_document(double nu, int k, double half_width, int grid_points, double reality_tol);
std::string spectrum_csv(const Json& document);

/// "re0,im0,re1,im1" -> vector. Throws InputError.
ComplexVector parse_state(const std::string& text);

/// Fixed 15-significant-digit scientific notation used for all CSV output.
std::string format_number(double x);

/// Full command line front end; returns the process exit code. Data goes to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptqm::cli
