#pragma once

// Batch driver behind the linf command line tool: JSON instance parsing and
// the verification jobs. Reports are JSON objects with sorted keys and no
// timing data, so equal configurations give equal bytes.

#include "linf/comoment.hpp"
#include "linf/multisymplectic.hpp"

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linf {

using Json = nlohmann::json;

// Malformed input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  int max_arity = -1;    // -1: the natural bound of the job
  int trunc = 10;        // tables
  int poly_degree = -1;  // -1: take D from the instance
  int samples = 50;
  long exhaustive_limit = 100000;  // arities with more candidate tuples are sampled
  std::uint64_t seed = 0;
  std::string out;
};

struct JobResult {
  int exit_code = 0;  // 0 pass, 1 failure with witness, 2 input error
  Json report;
};

// "x0*x1 - 1/2*x2^2"; variables x0..x7.
Poly parse_poly(const std::string& s, int N);
Q parse_rational(const Json& j);
// {"degree": p, "terms": [{"dx": [i..], "coeff": poly}]}, or "volume" / "symplectic".
PolyForm parse_form(const Json& j, int N);
// Array of N component polynomials.
PolyField parse_field(const Json& j, int N);
MssSpace parse_space(const Json& j, int poly_degree = -1);
// {"so": n}, or {"fields": {label: field}} with optional
// "algebra": {"labels": [..], "constants": [[i, j, k, c], ..]}.
ActionData parse_action(const Json& j, int N);
// {"potential": form} or {"values": {"0,1": form, ..}}; keys are indices or labels.
Comoment parse_comoment(const Json& j, const ActionData& A, const MssSpace& M);

Json form_json(const PolyForm& a);

JobResult run_check_linfty(const JobConfig& c);
JobResult run_check_morphism(const JobConfig& c);
JobResult run_comoment(const JobConfig& c);
JobResult run_pentagon(const JobConfig& c);
JobResult run_tables(const JobConfig& c);
// Dispatch on c.subcommand; input errors become exit code 2 with a diagnostic.
JobResult run_job(const JobConfig& c);

}  // namespace linf
