// Copyright 2026 The qtsallis developers
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

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "qtsallis/report_io.hpp"

namespace qtsallis {

/// Raised on invalid run configurations (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One `check` invocation: which suites to run, at what size, where to
/// write the JSON report.
struct RunConfig {
  std::vector<std::string> suites = {"all"};
  int trials = 1000;
  std::uint64_t seed = 1;
  std::vector<std::size_t> dims = {2, 3, 4};
  std::vector<double> q_values;  // empty -> per-suite defaults
  double tol = tolerance.check;
  std::string output_path = "report.json";
};

inline std::vector<std::string> resolve_suites(
    const std::vector<std::string>& requested) {
  std::vector<std::string> resolved;
  for (const std::string& name : requested) {
    if (name == "all") {
      for (const std::string& s : suite_names()) resolved.push_back(s);
      continue;
    }
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ConfigError("unknown suite '" + name + "'");
    }
    resolved.push_back(name);
  }
  if (resolved.empty()) throw ConfigError("no suites selected");
  return resolved;
}

inline void validate_config(const RunConfig& cfg,
                            const std::vector<std::string>& suites) {
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  if (cfg.dims.empty()) throw ConfigError("dims must be nonempty");
  for (std::size_t d : cfg.dims) {
    if (d < 2 || d > 8) throw ConfigError("dims must lie in [2, 8]");
  }
  if (!(cfg.tol > 0.0)) throw ConfigError("tol must be positive");
  for (const std::string& s : suites) {
    try {
      validate_suite_q(s, cfg.q_values);
    } catch (const std::invalid_argument& ex) {
      throw ConfigError(ex.what());
    }
  }
}

/// Runs the selected suites and writes the JSON report. Deterministic in
/// the configuration: instance seeds depend only on (seed, suite, index).
inline RunSummary run_check(const RunConfig& cfg) {
  const std::vector<std::string> suites = resolve_suites(cfg.suites);
  validate_config(cfg, suites);

  RunSummary summary;
  summary.seed = cfg.seed;
  summary.tol = cfg.tol;
  SuiteConfig sc;
  sc.trials = cfg.trials;
  sc.seed = cfg.seed;
  sc.dims = cfg.dims;
  sc.q_values = cfg.q_values;
  sc.tol = cfg.tol;
  for (const std::string& name : suites) {
    summary.suites.push_back(run_suite(name, sc));
  }

  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output path '" + cfg.output_path + "'");
  file << write_check_json(summary);
  if (!file.good()) throw ConfigError("failed writing '" + cfg.output_path + "'");
  return summary;
}

namespace detail {

/// Canonical sweep input state per family: the state whose exchange and
/// fidelity columns have clean closed forms (maximally mixed in general;
/// |1><1| for amplitude damping, |+><+| for phase damping).
inline DensityMatrix sweep_state(ChannelKind kind, std::size_t d) {
  switch (kind) {
    case ChannelKind::amplitude_damping: {
      ComplexMatrix m(2, 2);
      m(1, 1) = 1.0;
      return DensityMatrix(m);
    }
    case ChannelKind::phase_damping: {
      ComplexMatrix m(2, 2);
      m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 0.5;
      return DensityMatrix(m);
    }
    default:
      return DensityMatrix((1.0 / static_cast<double>(d)) *
                           ComplexMatrix::identity(d));
  }
}

}  // namespace detail

inline ChannelKind channel_kind_from_string(const std::string& name) {
  if (name == "identity") return ChannelKind::identity;
  if (name == "unitary") return ChannelKind::unitary;
  if (name == "depolarizing") return ChannelKind::depolarizing;
  if (name == "amplitude_damping") return ChannelKind::amplitude_damping;
  if (name == "phase_damping") return ChannelKind::phase_damping;
  throw ConfigError("unknown channel family '" + name + "'");
}

/// Tabulates fidelity, q-entropy exchange, the Fano bound and its gap
/// across a named channel family, writing one CSV row per grid point.
inline std::vector<SweepRow> run_sweep(const std::string& channel,
                                       const std::vector<double>& param_grid,
                                       std::size_t dim, double q,
                                       const std::string& output_path) {
  const ChannelKind kind = channel_kind_from_string(channel);
  if (param_grid.empty()) throw ConfigError("param grid must be nonempty");
  for (double p : param_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("params must lie in [0, 1]");
  }
  if (dim < 2 || dim > 8) throw ConfigError("dim must lie in [2, 8]");
  if ((kind == ChannelKind::amplitude_damping ||
       kind == ChannelKind::phase_damping) &&
      dim != 2) {
    throw ConfigError("damping families are qubit-only");
  }
  QOrder order(0.0);
  try {
    order = QOrder(q);
  } catch (const std::domain_error& ex) {
    throw ConfigError(ex.what());
  }

  const DensityMatrix rho = detail::sweep_state(kind, dim);
  std::vector<SweepRow> rows;
  rows.reserve(param_grid.size());
  for (double p : param_grid) {
    const KrausChannel e = standard_channel(kind, dim, p);
    SweepRow row;
    row.param = p;
    row.fidelity = entanglement_fidelity(rho, e);
    row.exchange = entropy_exchange(rho, e, order);
    row.fano_bound = fano_bound(row.fidelity, dim, dim, order);
    row.gap = row.fano_bound - row.exchange;
    rows.push_back(row);
  }

  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output path '" + output_path + "'");
  file << write_sweep_csv(channel, dim, q, rows);
  if (!file.good()) throw ConfigError("failed writing '" + output_path + "'");
  return rows;
}

}  // namespace qtsallis
