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

#include "seqcert/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace seqcert::report {

namespace {

using nlohmann::json;

double checked(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw std::logic_error(std::string("report: non-finite value in field ") + field);
  }
  return value;
}

json zeno_to_json(const ZenoSection& s) {
  return json{{"max_violation", checked(s.max_violation, "zeno.max_violation")},
              {"passes", s.passes},
              {"state_full_rank", s.state_full_rank}};
}

json lg_to_json(const LgSection& s) {
  return json{{"n", s.n},
              {"value", checked(s.value, "lg.value")},
              {"classical_bound", checked(s.classical_bound, "lg.classical_bound")},
              {"quantum_bound", checked(s.quantum_bound, "lg.quantum_bound")},
              {"passes", s.passes}};
}

json sos_to_json(const SosSection& s) {
  json residuals = json::array();
  for (double r : s.expectation_residuals) {
    residuals.push_back(checked(r, "sos.expectation_residuals"));
  }
  return json{{"identity_residual", checked(s.identity_residual, "sos.identity_residual")},
              {"expectation_residuals", residuals},
              {"max_expectation_residual",
               checked(s.max_expectation_residual, "sos.max_expectation_residual")},
              {"passes", s.passes}};
}

json self_test_to_json(const SelfTestSection& s) {
  return json{{"max_deviation", checked(s.max_deviation, "self_test.max_deviation")},
              {"traceless_check", checked(s.traceless_check, "self_test.traceless_check")},
              {"anticommutator_check",
               checked(s.anticommutator_check, "self_test.anticommutator_check")},
              {"passes", s.passes}};
}

json randomness_to_json(const RandomnessSection& s) {
  return json{{"p_guess", checked(s.p_guess, "randomness.p_guess")},
              {"min_entropy_bits", checked(s.min_entropy_bits, "randomness.min_entropy_bits")},
              {"sequence_length", s.sequence_length},
              {"method", s.method}};
}

}  // namespace

json to_json(const CertificationReport& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["toolkit_version"] = report.toolkit_version;
  j["config"] = json{{"n", report.config.n},
                     {"sequence_length", report.config.sequence_length},
                     {"state", report.config.state},
                     {"device", report.config.device},
                     {"perturbation", checked(report.config.perturbation, "config.perturbation")},
                     {"seed", report.config.seed}};
  j["seed_trail"] = report.seed_trail;
  if (report.zeno) j["zeno"] = zeno_to_json(*report.zeno);
  if (report.projectivity_pass) j["projectivity_pass"] = *report.projectivity_pass;
  if (report.lg) j["lg"] = lg_to_json(*report.lg);
  if (report.nsit_max_deviation) {
    j["nsit_max_deviation"] = checked(*report.nsit_max_deviation, "nsit_max_deviation");
  }
  if (report.sos) j["sos"] = sos_to_json(*report.sos);
  if (report.self_test) j["self_test"] = self_test_to_json(*report.self_test);
  if (report.randomness) j["randomness"] = randomness_to_json(*report.randomness);
  j["pass"] = report.pass;
  j["failing_gate"] = report.failing_gate;
  if (report.wall_time_ms) {
    j["wall_time_ms"] = checked(*report.wall_time_ms, "wall_time_ms");
  }
  return j;
}

CertificationReport report_from_json(const json& j) {
  CertificationReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.toolkit_version = j.at("toolkit_version").get<std::string>();
  const auto& c = j.at("config");
  r.config.n = c.at("n").get<int>();
  r.config.sequence_length = c.at("sequence_length").get<int>();
  r.config.state = c.at("state").get<std::string>();
  r.config.device = c.at("device").get<std::string>();
  r.config.perturbation = c.at("perturbation").get<double>();
  r.config.seed = c.at("seed").get<std::uint64_t>();
  r.seed_trail = j.at("seed_trail").get<std::vector<std::string>>();
  if (j.contains("zeno")) {
    const auto& z = j.at("zeno");
    r.zeno = ZenoSection{z.at("max_violation").get<double>(), z.at("passes").get<bool>(),
                         z.at("state_full_rank").get<bool>()};
  }
  if (j.contains("projectivity_pass")) {
    r.projectivity_pass = j.at("projectivity_pass").get<bool>();
  }
  if (j.contains("lg")) {
    const auto& l = j.at("lg");
    r.lg = LgSection{l.at("n").get<int>(), l.at("value").get<double>(),
                     l.at("classical_bound").get<double>(),
                     l.at("quantum_bound").get<double>(), l.at("passes").get<bool>()};
  }
  if (j.contains("nsit_max_deviation")) {
    r.nsit_max_deviation = j.at("nsit_max_deviation").get<double>();
  }
  if (j.contains("sos")) {
    const auto& s = j.at("sos");
    r.sos = SosSection{s.at("identity_residual").get<double>(),
                       s.at("expectation_residuals").get<std::vector<double>>(),
                       s.at("max_expectation_residual").get<double>(),
                       s.at("passes").get<bool>()};
  }
  if (j.contains("self_test")) {
    const auto& s = j.at("self_test");
    r.self_test = SelfTestSection{s.at("max_deviation").get<double>(),
                                  s.at("traceless_check").get<double>(),
                                  s.at("anticommutator_check").get<double>(),
                                  s.at("passes").get<bool>()};
  }
  if (j.contains("randomness")) {
    const auto& s = j.at("randomness");
    r.randomness = RandomnessSection{s.at("p_guess").get<double>(),
                                     s.at("min_entropy_bits").get<double>(),
                                     s.at("sequence_length").get<int>(),
                                     s.at("method").get<std::string>()};
  }
  r.pass = j.at("pass").get<bool>();
  r.failing_gate = j.at("failing_gate").get<std::string>();
  if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

std::string serialize(const CertificationReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", checked(value, "csv"));
  return buf;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "n,classical_bound_enumerated,classical_bound,quantum_bound,gap\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.enumerated) + "," +
           format_real(r.classical_bound) + "," + format_real(r.quantum_bound) + "," +
           format_real(r.gap) + "\n";
  }
  return out;
}

nlohmann::json bounds_json(const std::vector<BoundsRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"n", r.n},
                       {"classical_bound_enumerated", r.enumerated},
                       {"classical_bound", checked(r.classical_bound, "bounds.classical")},
                       {"quantum_bound", checked(r.quantum_bound, "bounds.quantum")},
                       {"gap", checked(r.gap, "bounds.gap")}});
  }
  return json{{"schema_version", 1}, {"rows", arr}};
}

namespace {

std::string cell(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string();
}

json null_or(const std::optional<double>& value, const char* field) {
  return value ? json(checked(*value, field)) : json(nullptr);
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "n,sequence_length,perturbation,lg_value,zeno_violation,identity_residual,"
      "max_expectation_residual,self_test_deviation,p_guess,min_entropy_bits,pass,"
      "failing_gate\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.sequence_length) + "," +
           format_real(r.perturbation) + "," + cell(r.lg_value) + "," +
           cell(r.zeno_violation) + "," + cell(r.identity_residual) + "," +
           cell(r.max_expectation_residual) + "," + cell(r.self_test_deviation) + "," +
           cell(r.p_guess) + "," + cell(r.min_entropy_bits) + ",";
    out += r.pass ? "true" : "false";
    out += "," + r.failing_gate + "\n";
  }
  return out;
}

nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"n", r.n},
             {"sequence_length", r.sequence_length},
             {"perturbation", checked(r.perturbation, "sweep.perturbation")},
             {"pass", r.pass},
             {"failing_gate", r.failing_gate}};
    row["lg_value"] = null_or(r.lg_value, "sweep.lg_value");
    row["zeno_violation"] = null_or(r.zeno_violation, "sweep.zeno_violation");
    row["identity_residual"] = null_or(r.identity_residual, "sweep.identity_residual");
    row["max_expectation_residual"] =
        null_or(r.max_expectation_residual, "sweep.max_expectation_residual");
    row["self_test_deviation"] = null_or(r.self_test_deviation, "sweep.self_test_deviation");
    row["p_guess"] = null_or(r.p_guess, "sweep.p_guess");
    row["min_entropy_bits"] = null_or(r.min_entropy_bits, "sweep.min_entropy_bits");
    arr.push_back(row);
  }
  return json{{"schema_version", 1}, {"rows", arr}};
}

}  // namespace seqcert::report
