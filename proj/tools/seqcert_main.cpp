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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "seqcert/cli.hpp"
#include "seqcert/version.hpp"

namespace {

using seqcert::cli::RunConfig;

struct FlagValues {
  std::string config_path;
  std::string n_text;
  std::string sequence_text;
  std::string perturb_text;
  int n = 0;
  int sequence_length = 0;
  std::string state;
  std::string device;
  double perturbation = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  bool timing = false;
  int n_min = 0;
  int n_max = 0;
  double tol_zeno = 0.0;
  double tol_projective = 0.0;
  double tol_sos_identity = 0.0;
  double tol_sos_expectation = 0.0;
  double tol_selftest = 0.0;
  double tol_selftest_deviation = 0.0;
};

void add_common_output(CLI::App* sub, FlagValues& v) {
  sub->add_option("--config", v.config_path, "flat key=value configuration file");
  sub->add_option("--out", v.out, "output path (default stdout)");
  sub->add_option("--format", v.format, "output format: json or csv");
}

void add_tolerances(CLI::App* sub, FlagValues& v) {
  sub->add_option("--tol-zeno", v.tol_zeno, "repeatability gate tolerance");
  sub->add_option("--tol-projective", v.tol_projective, "projectivity gate tolerance");
  sub->add_option("--tol-sos-identity", v.tol_sos_identity, "certificate identity tolerance");
  sub->add_option("--tol-sos-expectation", v.tol_sos_expectation,
                  "certificate expectation tolerance");
  sub->add_option("--tol-selftest", v.tol_selftest, "maximizer acceptance tolerance");
  sub->add_option("--tol-selftest-deviation", v.tol_selftest_deviation,
                  "self-test deviation gate");
}

std::size_t count_of(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt == nullptr ? 0 : opt->count();
}

// Flags override config-file values; only flags the user actually passed
// are copied over the file-derived configuration.
void merge(const CLI::App* sub, const FlagValues& v, RunConfig& config,
           const std::string& command) {
  using seqcert::cli::apply_config_line;
  if (count_of(sub, "--n") > 0) apply_config_line(config, "n", v.n_text, command);
  if (count_of(sub, "--N") > 0) apply_config_line(config, "N", v.sequence_text, command);
  if (count_of(sub, "--perturb") > 0) {
    apply_config_line(config, "perturb", v.perturb_text, command);
  }
  if (count_of(sub, "--state") > 0) apply_config_line(config, "state", v.state, command);
  if (count_of(sub, "--device") > 0) apply_config_line(config, "device", v.device, command);
  if (count_of(sub, "--perturbation") > 0) config.perturbation = v.perturbation;
  if (count_of(sub, "--seed") > 0) config.seed = v.seed;
  if (count_of(sub, "--out") > 0) config.out = v.out;
  if (count_of(sub, "--format") > 0) apply_config_line(config, "format", v.format, command);
  if (count_of(sub, "--timing") > 0) config.timing = v.timing;
  if (count_of(sub, "--n-min") > 0) config.n_min = v.n_min;
  if (count_of(sub, "--n-max") > 0) config.n_max = v.n_max;
  if (count_of(sub, "--tol-zeno") > 0) config.tol_zeno = v.tol_zeno;
  if (count_of(sub, "--tol-projective") > 0) config.tol_projective = v.tol_projective;
  if (count_of(sub, "--tol-sos-identity") > 0) config.tol_sos_identity = v.tol_sos_identity;
  if (count_of(sub, "--tol-sos-expectation") > 0) {
    config.tol_sos_expectation = v.tol_sos_expectation;
  }
  if (count_of(sub, "--tol-selftest") > 0) config.tol_selftest = v.tol_selftest;
  if (count_of(sub, "--tol-selftest-deviation") > 0) {
    config.tol_selftest_deviation = v.tol_selftest_deviation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seqcert: sequential-measurement certification toolkit"};
  app.set_version_flag("--version", std::string(seqcert::kToolkitVersion));
  app.require_subcommand(1);

  FlagValues v;

  CLI::App* certify = app.add_subcommand(
      "certify", "run the full certification pipeline and emit a JSON report");
  certify->add_option("--n", v.n_text, "number of measurement settings");
  certify->add_option("--N", v.sequence_text, "sequence length for randomness");
  certify->add_option("--state", v.state, "mixed | pure[:seed] | fullrank[:seed]");
  certify->add_option("--device", v.device, "ideal | noisy[:weight] | flipping");
  certify->add_option("--perturbation", v.perturbation,
                      "rotation of the second observable, radians");
  certify->add_option("--seed", v.seed, "base seed for seeded states");
  certify->add_flag("--timing", v.timing, "include wall_time_ms (breaks byte-stability)");
  add_common_output(certify, v);
  add_tolerances(certify, v);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "tabulate classical and quantum bounds over a range of n");
  bounds->add_option("--n-min", v.n_min, "smallest n (>= 3)");
  bounds->add_option("--n-max", v.n_max, "largest n (<= 24)");
  add_common_output(bounds, v);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "evaluate the pipeline over a grid of n, N and perturbation");
  sweep->add_option("--n", v.n_text, "n values: v, lo:hi or lo:hi:step, comma-separable");
  sweep->add_option("--N", v.sequence_text, "sequence lengths, same syntax");
  sweep->add_option("--perturb", v.perturb_text, "perturbations: v or lo:hi:step");
  sweep->add_option("--state", v.state, "state spec, as in certify");
  sweep->add_option("--device", v.device, "device spec, as in certify");
  sweep->add_option("--seed", v.seed, "base seed for seeded states");
  sweep->add_flag("--timing", v.timing, "include timing (certify reports only)");
  add_common_output(sweep, v);
  add_tolerances(sweep, v);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return seqcert::cli::kExitConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  RunConfig config;
  try {
    if (sub->count("--config") > 0) {
      seqcert::cli::apply_config_file(config, v.config_path, command);
    }
    merge(sub, v, config, command);
  } catch (const seqcert::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return seqcert::cli::kExitConfigError;
  }

  try {
    if (command == "certify") return seqcert::cli::run_certify(config, std::cout, std::cerr);
    if (command == "bounds") return seqcert::cli::run_bounds(config, std::cout, std::cerr);
    return seqcert::cli::run_sweep(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    // Cross-check and invariant failures land here; they indicate a bug,
    // not a bad configuration, and deserve a distinct exit code.
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
