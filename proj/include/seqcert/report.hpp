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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace seqcert::report {

struct ZenoSection {
  double max_violation = 0.0;
  bool passes = false;
  bool state_full_rank = false;
};

struct LgSection {
  int n = 0;
  double value = 0.0;
  double classical_bound = 0.0;
  double quantum_bound = 0.0;
  bool passes = false;
};

struct SosSection {
  double identity_residual = 0.0;
  std::vector<double> expectation_residuals;
  double max_expectation_residual = 0.0;
  bool passes = false;
};

struct SelfTestSection {
  double max_deviation = 0.0;
  double traceless_check = 0.0;
  double anticommutator_check = 0.0;
  bool passes = false;
};

struct RandomnessSection {
  double p_guess = 1.0;
  double min_entropy_bits = 0.0;
  int sequence_length = 0;
  std::string method;
};

struct ConfigEcho {
  int n = 0;
  int sequence_length = 0;
  std::string state;
  std::string device;
  double perturbation = 0.0;
  std::uint64_t seed = 0;
};

/// Full machine-readable result of one certification run. Sections after
/// the first failing gate are absent. Wall time is kept out of the
/// canonical serialization so identical configs produce identical bytes;
/// it only appears when explicitly requested.
struct CertificationReport {
  int schema_version = 1;
  std::string toolkit_version;
  ConfigEcho config;
  std::vector<std::string> seed_trail;
  std::optional<ZenoSection> zeno;
  std::optional<bool> projectivity_pass;
  std::optional<LgSection> lg;
  std::optional<double> nsit_max_deviation;
  std::optional<SosSection> sos;
  std::optional<SelfTestSection> self_test;
  std::optional<RandomnessSection> randomness;
  bool pass = false;
  std::string failing_gate;
  std::optional<double> wall_time_ms;
};

nlohmann::json to_json(const CertificationReport& report);
CertificationReport report_from_json(const nlohmann::json& j);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string serialize(const CertificationReport& report);

struct BoundsRow {
  int n = 0;
  long enumerated = 0;
  double classical_bound = 0.0;
  double quantum_bound = 0.0;
  double gap = 0.0;
};

std::string bounds_csv(const std::vector<BoundsRow>& rows);
nlohmann::json bounds_json(const std::vector<BoundsRow>& rows);

/// One grid point of a sweep. Fields for gates the pipeline never reached
/// are absent: empty CSV cells, JSON null.
struct SweepRow {
  int n = 0;
  int sequence_length = 0;
  double perturbation = 0.0;
  std::optional<double> lg_value;
  std::optional<double> zeno_violation;
  std::optional<double> identity_residual;
  std::optional<double> max_expectation_residual;
  std::optional<double> self_test_deviation;
  std::optional<double> p_guess;
  std::optional<double> min_entropy_bits;
  bool pass = false;
  std::string failing_gate;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

/// 17-significant-digit decimal rendering used by all CSV output.
std::string format_real(double value);

}  // namespace seqcert::report
