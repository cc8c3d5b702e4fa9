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

#include "seqcert/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>
#include <tuple>

#include "seqcert/lgcert.hpp"
#include "seqcert/randcert.hpp"
#include "seqcert/seqsim.hpp"
#include "seqcert/version.hpp"

namespace seqcert::cli {

namespace {

constexpr int kMaxN = 24;
constexpr std::size_t kMaxGridPoints = 100000;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid integer for ") + what + ": '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(text, &pos);
    if (pos != text.size() || text.find('-') != std::string::npos) {
      throw std::invalid_argument("trailing characters");
    }
    return value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid seed for ") + what + ": '" + text + "'");
  }
}

double parse_real(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size() || !std::isfinite(value)) {
      throw std::invalid_argument("trailing characters");
    }
    return value;
  } catch (const std::exception&) {
    throw ConfigError(std::string("invalid number for ") + what + ": '" + text + "'");
  }
}

bool parse_bool(const std::string& text, const char* what) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(std::string("invalid boolean for ") + what + ": '" + text + "'");
}

struct StateSpec {
  std::string kind;
  std::uint64_t seed = 0;
  bool seeded = false;
};

StateSpec parse_state_spec(const std::string& text) {
  const auto parts = split(text, ':');
  StateSpec spec;
  spec.kind = parts[0];
  if (spec.kind != "mixed" && spec.kind != "pure" && spec.kind != "fullrank") {
    throw ConfigError("state must be mixed, pure[:seed] or fullrank[:seed], got '" + text + "'");
  }
  if (parts.size() > 2) throw ConfigError("malformed state spec '" + text + "'");
  if (parts.size() == 2) {
    if (spec.kind == "mixed") throw ConfigError("the mixed state takes no seed");
    spec.seed = parse_u64(parts[1], "state");
    spec.seeded = true;
  }
  return spec;
}

struct DeviceSpec {
  std::string kind;
  double noise_weight = 0.2;
};

DeviceSpec parse_device_spec(const std::string& text) {
  const auto parts = split(text, ':');
  DeviceSpec spec;
  spec.kind = parts[0];
  if (spec.kind != "ideal" && spec.kind != "noisy" && spec.kind != "flipping") {
    throw ConfigError("device must be ideal, noisy[:weight] or flipping, got '" + text + "'");
  }
  if (parts.size() > 2 || (parts.size() == 2 && spec.kind != "noisy")) {
    throw ConfigError("malformed device spec '" + text + "'");
  }
  if (parts.size() == 2) {
    spec.noise_weight = parse_real(parts[1], "device");
    if (spec.noise_weight < 0.0 || spec.noise_weight > 1.0) {
      throw ConfigError("noise weight must lie in [0, 1]");
    }
  }
  return spec;
}

void validate_point(int n, int sequence_length, double perturbation) {
  if (n < 3 || n > kMaxN) {
    throw ConfigError("n must lie in 3.." + std::to_string(kMaxN));
  }
  if (sequence_length < 1 || sequence_length > seqsim::SequenceDistribution::kMaxLength) {
    throw ConfigError("N must lie in 1..20");
  }
  if (!(perturbation >= 0.0) || !std::isfinite(perturbation)) {
    throw ConfigError("perturbation must be a finite nonnegative angle");
  }
}

quantum::DensityState make_state(const StateSpec& spec, std::uint64_t default_seed,
                                 std::vector<std::string>& seed_trail) {
  if (spec.kind == "mixed") return quantum::maximally_mixed(2);
  const std::uint64_t seed = spec.seeded ? spec.seed : default_seed;
  if (spec.kind == "pure") {
    seed_trail.push_back("quantum.pure:" + std::to_string(seed));
    return quantum::random_pure_state(2, seed);
  }
  seed_trail.push_back("quantum.fullrank:" + std::to_string(seed));
  return quantum::random_full_rank_state(2, seed);
}

std::vector<quantum::DichotomicObservable> make_observables(int n, double perturbation) {
  std::vector<quantum::DichotomicObservable> observables;
  observables.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    if (x == 2 && perturbation != 0.0) {
      // Rotate the second measurement axis within the X-Z plane.
      const double theta = std::numbers::pi / n + perturbation;
      observables.emplace_back(std::cos(theta) * numkit::pauli_z() +
                               std::sin(theta) * numkit::pauli_x());
    } else {
      observables.push_back(quantum::canonical_observable(n, x));
    }
  }
  return observables;
}

std::vector<quantum::BinaryInstrument> make_instruments(
    const std::vector<quantum::DichotomicObservable>& observables, const DeviceSpec& device) {
  std::vector<quantum::BinaryInstrument> instruments;
  instruments.reserve(observables.size());
  for (const auto& obs : observables) {
    if (device.kind == "ideal") {
      instruments.push_back(quantum::BinaryInstrument::projective(obs));
    } else if (device.kind == "noisy") {
      const double w = device.noise_weight;
      const numkit::CMatrix m0 = (1.0 - w) * obs.projector(0) + w * obs.projector(1);
      const numkit::CMatrix m1 = w * obs.projector(0) + (1.0 - w) * obs.projector(1);
      const numkit::CMatrix id = numkit::identity(obs.dim());
      instruments.emplace_back(quantum::BinaryPovm(m0, m1), id, id);
    } else {
      instruments.emplace_back(quantum::BinaryPovm(obs.projector(0), obs.projector(1)),
                               numkit::pauli_x(), numkit::pauli_x());
    }
  }
  return instruments;
}

std::vector<int> nsit_diagnostic_inputs(int n, int sequence_length) {
  const int length = std::min(sequence_length, 8);
  if (n % 2 == 0) return randcert::alternating_inputs(n, 2, length);
  std::vector<int> inputs(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) inputs[static_cast<std::size_t>(k)] = k % n + 1;
  return inputs;
}

void write_output(const RunConfig& config, const std::string& payload, std::ostream& out) {
  if (config.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output path '" + config.out + "'");
  file << payload;
  if (!file) throw ConfigError("failed writing output path '" + config.out + "'");
}

int worker_count() {
  const char* env = std::getenv("SEQCERT_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  const int workers = parse_int(env, "SEQCERT_WORKERS");
  if (workers < 1 || workers > 256) {
    throw ConfigError("SEQCERT_WORKERS must lie in 1..256");
  }
  return workers;
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> values;
  for (const auto& segment : split(text, ',')) {
    const auto parts = split(trim(segment), ':');
    if (parts.size() == 1) {
      values.push_back(parse_int(parts[0], "range"));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const int lo = parse_int(parts[0], "range");
      const int hi = parse_int(parts[1], "range");
      const int step = parts.size() == 3 ? parse_int(parts[2], "range step") : 1;
      if (step < 1) throw ConfigError("range step must be positive");
      if (lo > hi) throw ConfigError("empty range '" + segment + "'");
      for (int v = lo; v <= hi; v += step) values.push_back(v);
    } else {
      throw ConfigError("malformed range '" + segment + "'");
    }
  }
  if (values.empty()) throw ConfigError("empty range list");
  return values;
}

std::vector<double> parse_real_range(const std::string& text) {
  std::vector<double> values;
  for (const auto& segment : split(text, ',')) {
    const auto parts = split(trim(segment), ':');
    if (parts.size() == 1) {
      values.push_back(parse_real(parts[0], "range"));
    } else if (parts.size() == 3) {
      const double lo = parse_real(parts[0], "range");
      const double hi = parse_real(parts[1], "range");
      const double step = parse_real(parts[2], "range step");
      if (!(step > 0.0)) throw ConfigError("range step must be positive");
      if (lo > hi) throw ConfigError("empty range '" + segment + "'");
      // Half-step slack keeps the endpoint when it is representable.
      for (double v = lo; v <= hi + step * 0.5; v += step) values.push_back(std::min(v, hi));
    } else {
      throw ConfigError("real ranges need either a value or lo:hi:step, got '" + segment + "'");
    }
  }
  if (values.empty()) throw ConfigError("empty range list");
  return values;
}

void apply_config_line(RunConfig& config, const std::string& key, const std::string& value,
                       const std::string& command) {
  static const std::set<std::string> certify_keys = {
      "n",          "N",           "state",
      "device",     "perturbation", "seed",
      "out",        "format",      "timing",
      "tol_zeno",   "tol_projective", "tol_sos_identity",
      "tol_sos_expectation", "tol_selftest", "tol_selftest_deviation"};
  static const std::set<std::string> bounds_keys = {"n_min", "n_max", "out", "format"};
  static const std::set<std::string> sweep_keys = {
      "n",          "N",           "perturb",
      "state",      "device",      "seed",
      "out",        "format",      "timing",
      "tol_zeno",   "tol_projective", "tol_sos_identity",
      "tol_sos_expectation", "tol_selftest", "tol_selftest_deviation"};

  const std::set<std::string>* allowed = nullptr;
  if (command == "certify") allowed = &certify_keys;
  else if (command == "bounds") allowed = &bounds_keys;
  else if (command == "sweep") allowed = &sweep_keys;
  else throw ConfigError("unknown command '" + command + "'");
  if (allowed->count(key) == 0) {
    throw ConfigError("unknown config key '" + key + "' for command " + command);
  }

  if (key == "n") {
    if (command == "sweep") config.n_values = parse_int_range(value);
    else config.n = parse_int(value, "n");
  } else if (key == "N") {
    if (command == "sweep") config.sequence_length_values = parse_int_range(value);
    else config.sequence_length = parse_int(value, "N");
  } else if (key == "perturb") {
    config.perturbation_values = parse_real_range(value);
  } else if (key == "state") {
    parse_state_spec(value);
    config.state = value;
  } else if (key == "device") {
    parse_device_spec(value);
    config.device = value;
  } else if (key == "perturbation") {
    config.perturbation = parse_real(value, "perturbation");
  } else if (key == "seed") {
    config.seed = parse_u64(value, "seed");
  } else if (key == "out") {
    config.out = value;
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw ConfigError("format must be json or csv");
    config.format = value;
  } else if (key == "timing") {
    config.timing = parse_bool(value, "timing");
  } else if (key == "n_min") {
    config.n_min = parse_int(value, "n_min");
  } else if (key == "n_max") {
    config.n_max = parse_int(value, "n_max");
  } else if (key == "tol_zeno") {
    config.tol_zeno = parse_real(value, key.c_str());
  } else if (key == "tol_projective") {
    config.tol_projective = parse_real(value, key.c_str());
  } else if (key == "tol_sos_identity") {
    config.tol_sos_identity = parse_real(value, key.c_str());
  } else if (key == "tol_sos_expectation") {
    config.tol_sos_expectation = parse_real(value, key.c_str());
  } else if (key == "tol_selftest") {
    config.tol_selftest = parse_real(value, key.c_str());
  } else if (key == "tol_selftest_deviation") {
    config.tol_selftest_deviation = parse_real(value, key.c_str());
  }
}

void apply_config_file(RunConfig& config, const std::string& path, const std::string& command) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_number) + " is not key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config line " + std::to_string(line_number) + " has an empty key or value");
    }
    apply_config_line(config, key, value, command);
  }
}

report::CertificationReport evaluate_certification(const RunConfig& config) {
  validate_point(config.n, config.sequence_length, config.perturbation);
  const StateSpec state_spec = parse_state_spec(config.state);
  const DeviceSpec device_spec = parse_device_spec(config.device);

  report::CertificationReport rep;
  rep.schema_version = kReportSchemaVersion;
  rep.toolkit_version = kToolkitVersion;
  rep.config = report::ConfigEcho{config.n,       config.sequence_length, config.state,
                                  config.device,  config.perturbation,    config.seed};

  const quantum::DensityState state = make_state(state_spec, config.seed, rep.seed_trail);
  const auto observables = make_observables(config.n, config.perturbation);
  const auto instruments = make_instruments(observables, device_spec);

  // Gate 1: repeating any measurement must reproduce its outcome.
  report::ZenoSection zeno;
  zeno.state_full_rank = state.full_rank();
  zeno.passes = true;
  for (const auto& inst : instruments) {
    const auto zr = seqsim::check_zeno(state, inst);
    zeno.max_violation = std::max(zeno.max_violation, zr.max_violation);
  }
  zeno.passes = zeno.max_violation <= config.tol_zeno;
  rep.zeno = zeno;
  if (!zeno.passes) {
    rep.failing_gate = "zeno";
    return rep;
  }

  // Gate 2: POVM elements must be projectors.
  bool projective = true;
  for (const auto& inst : instruments) {
    projective = projective && seqsim::is_projective(inst.povm(), config.tol_projective);
  }
  rep.projectivity_pass = projective;
  if (!projective) {
    rep.failing_gate = "projectivity";
    return rep;
  }

  std::vector<quantum::DichotomicObservable> measured;
  measured.reserve(instruments.size());
  for (const auto& inst : instruments) {
    measured.push_back(quantum::observable_from_instrument(inst));
  }

  // Gate 3: the functional must beat every memoryless classical model.
  const auto lg = lgcert::lg_value(state, measured);
  report::LgSection lg_section{lg.n, lg.value, lg.classical_bound, lg.quantum_bound,
                               lg.value > lg.classical_bound};
  rep.lg = lg_section;
  if (!lg_section.passes) {
    rep.failing_gate = "lg";
    return rep;
  }

  // Diagnostic only: quantum sequences signal in time in general.
  {
    const auto inputs = nsit_diagnostic_inputs(config.n, config.sequence_length);
    const auto dist = seqsim::simulate_projective(state, measured, inputs);
    const auto marginals = seqsim::single_shot_marginals(state, measured, inputs);
    rep.nsit_max_deviation = seqsim::check_nsit(dist, marginals).max_deviation;
  }

  // Gate 4: the certificate residuals must vanish.
  const auto cert = lgcert::sos_certificate(measured, state);
  report::SosSection sos;
  sos.identity_residual = cert.identity_residual;
  sos.expectation_residuals = cert.expectation_residuals;
  for (double r : cert.expectation_residuals) {
    sos.max_expectation_residual = std::max(sos.max_expectation_residual, r);
  }
  sos.passes = cert.identity_residual <= config.tol_sos_identity &&
               sos.max_expectation_residual < config.tol_sos_expectation;
  rep.sos = sos;
  if (!sos.passes) {
    rep.failing_gate = "sos";
    return rep;
  }

  // Gate 5: extract the self-testing unitary. The residual precondition
  // needs a full-rank reference; when the run state is rank-deficient the
  // maximally mixed state stands in (the residuals are state-independent
  // at the canonical maximizer).
  try {
    const quantum::DensityState reference =
        state.full_rank() ? state : quantum::maximally_mixed(state.dim());
    const auto st =
        lgcert::extract_certification_unitary(measured, reference, config.tol_selftest);
    report::SelfTestSection st_section{st.max_deviation, st.traceless_check,
                                       st.anticommutator_check,
                                       st.max_deviation <= config.tol_selftest_deviation};
    rep.self_test = st_section;
    if (!st_section.passes) {
      rep.failing_gate = "self_test";
      return rep;
    }
  } catch (const std::invalid_argument&) {
    rep.failing_gate = "self_test";
    return rep;
  }

  // Certified randomness has a closed form only for even n.
  if (config.n % 2 == 0) {
    const auto rr = randcert::guessing_probability_certified(config.n, config.sequence_length);
    rep.randomness = report::RandomnessSection{rr.p_guess, rr.min_entropy_bits,
                                               rr.sequence_length,
                                               randcert::method_name(rr.method)};
  }
  rep.pass = true;
  return rep;
}

int run_certify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json") {
      throw ConfigError("certify emits json reports; csv applies to bounds and sweep");
    }
    const auto start = std::chrono::steady_clock::now();
    report::CertificationReport rep = evaluate_certification(config);
    if (config.timing) {
      rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }
    write_output(config, report::serialize(rep), out);
    return rep.pass ? kExitPass : kExitGateFailure;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.n_min < 3 || config.n_max > kMaxN || config.n_min > config.n_max) {
      throw ConfigError("bounds range must satisfy 3 <= n_min <= n_max <= 24");
    }
    std::vector<report::BoundsRow> rows;
    bool consistent = true;
    for (int n = config.n_min; n <= config.n_max; ++n) {
      report::BoundsRow row;
      row.n = n;
      row.enumerated = lgcert::classical_bound_enumerated(n);
      row.classical_bound = lgcert::classical_bound(n);
      row.quantum_bound = lgcert::quantum_bound(n);
      row.gap = row.quantum_bound - row.classical_bound;
      consistent = consistent && (static_cast<double>(row.enumerated) == row.classical_bound);
      rows.push_back(row);
    }
    const std::string payload = config.format == "csv"
                                    ? report::bounds_csv(rows)
                                    : report::bounds_json(rows).dump(2) + "\n";
    write_output(config, payload, out);
    if (!consistent) {
      err << "bounds: enumerated classical bound deviates from the closed form\n";
      return kExitGateFailure;
    }
    return kExitPass;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

namespace {

report::SweepRow sweep_point(const RunConfig& base, int n, int sequence_length,
                             double perturbation) {
  RunConfig point = base;
  point.n = n;
  point.sequence_length = sequence_length;
  point.perturbation = perturbation;
  const auto rep = evaluate_certification(point);
  report::SweepRow row;
  row.n = n;
  row.sequence_length = sequence_length;
  row.perturbation = perturbation;
  if (rep.zeno) row.zeno_violation = rep.zeno->max_violation;
  if (rep.lg) row.lg_value = rep.lg->value;
  if (rep.sos) {
    row.identity_residual = rep.sos->identity_residual;
    row.max_expectation_residual = rep.sos->max_expectation_residual;
  }
  if (rep.self_test) row.self_test_deviation = rep.self_test->max_deviation;
  if (rep.randomness) {
    row.p_guess = rep.randomness->p_guess;
    row.min_entropy_bits = rep.randomness->min_entropy_bits;
  }
  row.pass = rep.pass;
  row.failing_gate = rep.failing_gate;
  return row;
}

}  // namespace

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::tuple<int, int, double>> grid;
    for (int n : config.n_values) {
      for (int len : config.sequence_length_values) {
        for (double p : config.perturbation_values) {
          validate_point(n, len, p);
          grid.emplace_back(n, len, p);
          if (grid.size() > kMaxGridPoints) {
            throw ConfigError("sweep grid exceeds 100000 points");
          }
        }
      }
    }
    if (grid.empty()) throw ConfigError("sweep grid is empty");
    std::stable_sort(grid.begin(), grid.end());

    const int workers = std::min<int>(worker_count(), static_cast<int>(grid.size()));
    std::vector<report::SweepRow> rows(grid.size());
    if (workers <= 1) {
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto& [n, len, p] = grid[k];
        rows[k] = sweep_point(config, n, len, p);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::atomic<bool> failed{false};
      std::string failure;
      std::mutex failure_mutex;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t k = next.fetch_add(1); k < grid.size(); k = next.fetch_add(1)) {
            if (failed.load()) return;
            try {
              const auto& [n, len, p] = grid[k];
              rows[k] = sweep_point(config, n, len, p);
            } catch (const std::exception& e) {
              failed.store(true);
              std::lock_guard<std::mutex> lock(failure_mutex);
              failure = e.what();
            }
          }
        });
      }
      for (auto& t : pool) t.join();
      if (failed.load()) throw std::runtime_error("sweep worker failed: " + failure);
    }

    const std::string payload = config.format == "csv"
                                    ? report::sweep_csv(rows)
                                    : report::sweep_json(rows).dump(2) + "\n";
    write_output(config, payload, out);
    return kExitPass;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace seqcert::cli
