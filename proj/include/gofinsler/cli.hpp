#pragma once

#include "gofinsler/finsler_metric.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gofinsler::cli {

/// Process exit codes.
enum ExitCode : int
{
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kIoError = 3,
};

struct RunConfig
{
  std::string space = "s7";
  std::string l_spec;  // empty: sum_sq with unit weights
  std::string family;  // empty: the space file's family_a, else one row of ones
  std::string y;
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol = -1.0;   // negative: per-command default
  std::string out;
  std::string format;  // empty: per-command default
  double t_max = 6.283185307179586;
  int steps = 200;
};

/// "kind" or "kind:w1,w2,..." with kind in {sum_sq, sq_sum, sum}. Missing
/// weights default to ones of length `arity`.
LFunction parse_l_spec(const std::string& spec, int arity);

/// Rows separated by ';', entries by ','.
Eigen::MatrixXd parse_matrix(const std::string& text);

/// Comma- or whitespace-separated reals.
Eigen::VectorXd parse_coords(const std::string& text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gofinsler::cli
