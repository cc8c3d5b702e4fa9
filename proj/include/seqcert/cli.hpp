// Copyright 2026 The seqcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcert/report.hpp"

namespace seqcert::cli {

/// Invalid configuration; the process exits with code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitGateFailure = 3;

struct RunConfig {
  // certify inputs
  int n = 4;
  int sequence_length = 5;
  std::string state = "mixed";    // mixed | pure[:seed] | fullrank[:seed]
  std::string device = "ideal";   // ideal | noisy[:weight] | flipping
  double perturbation = 0.0;      // radians applied to the second observable
  std::uint64_t seed = 1;
  bool timing = false;            // adds wall_time_ms, breaking byte-stability

  // output
  std::string out;                // empty = stdout
  std::string format = "json";   // json | csv

  // bounds inputs
  int n_min = 3;
  int n_max = 12;

  // sweep grids; rows are emitted sorted by (n, N, perturbation) and
  // duplicate grid points yield identical duplicate rows
  std::vector<int> n_values{4};
  std::vector<int> sequence_length_values{5};
  std::vector<double> perturbation_values{0.0};

  // gate tolerances
  double tol_zeno = 1e-9;
  double tol_projective = 1e-9;
  double tol_sos_identity = 1e-10;
  double tol_sos_expectation = 1e-7;
  double tol_selftest = 1e-7;
  double tol_selftest_deviation = 1e-6;
};

/// "a", "a:b" (step 1) or "a:b:step".
std::vector<int> parse_int_range(const std::string& text);
std::vector<double> parse_real_range(const std::string& text);

/// Flat key=value file; '#' starts a comment. Keys outside the given
/// command's vocabulary are hard errors.
void apply_config_file(RunConfig& config, const std::string& path,
                       const std::string& command);
void apply_config_line(RunConfig& config, const std::string& key,
                       const std::string& value, const std::string& command);

/// The full certification pipeline for one grid point: device model,
/// Zeno gate, projectivity gate, functional value gate, NSIT diagnostic,
/// certificate residual gate, self-test gate, randomness quantification.
report::CertificationReport evaluate_certification(const RunConfig& config);

int run_certify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace seqcert::cli
