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

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "qtsallis/suites.hpp"

namespace qtsallis {

/// 17 significant digits: enough to round-trip any double, and fixed so
/// reports from equal configurations compare byte-for-byte.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

inline std::string format_extended(const ExtendedReal& x) {
  return x.is_infinite() ? std::string("\"inf\"") : format_double(x.value());
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

struct RunSummary {
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<SuiteResult> suites;

  int total_violations() const {
    int n = 0;
    for (const auto& s : suites) n += s.violations;
    return n;
  }
};

inline std::string write_check_json(const RunSummary& summary) {
  std::string out;
  out += "{\n";
  out += "  \"seed\": " + std::to_string(summary.seed) + ",\n";
  out += "  \"tol\": " + format_double(summary.tol) + ",\n";
  out += "  \"suites\": [\n";
  for (std::size_t i = 0; i < summary.suites.size(); ++i) {
    const SuiteResult& s = summary.suites[i];
    out += "    {\n";
    out += "      \"name\": \"" + json_escape(s.name) + "\",\n";
    out += "      \"trials\": " + std::to_string(s.trials) + ",\n";
    out += "      \"violations\": " + std::to_string(s.violations) + ",\n";
    out += "      \"worst_gap\": " + format_double(s.worst_gap) + ",\n";
    out += "      \"failures\": [";
    for (std::size_t k = 0; k < s.failures.size(); ++k) {
      const FailureRecord& f = s.failures[k];
      out += (k == 0) ? "\n" : ",\n";
      out += "        {\"instance\": \"" + json_escape(f.instance) +
             "\", \"lhs\": " + format_extended(f.lhs) +
             ", \"rhs\": " + format_extended(f.rhs) + "}";
    }
    out += s.failures.empty() ? "]\n" : "\n      ]\n";
    out += (i + 1 < summary.suites.size()) ? "    },\n" : "    }\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

/// One sweep evaluation at a single channel parameter value.
struct SweepRow {
  double param = 0.0;
  double fidelity = 0.0;
  double exchange = 0.0;
  double fano_bound = 0.0;
  double gap = 0.0;
};

inline std::string write_sweep_csv(const std::string& channel, std::size_t dim,
                                   double q, const std::vector<SweepRow>& rows) {
  std::string out = "channel,param,dim,q,fidelity,exchange,fano_bound,gap\n";
  for (const SweepRow& r : rows) {
    out += channel + "," + format_double(r.param) + "," + std::to_string(dim) +
           "," + format_double(q) + "," + format_double(r.fidelity) + "," +
           format_double(r.exchange) + "," + format_double(r.fano_bound) + "," +
           format_double(r.gap) + "\n";
  }
  return out;
}

}  // namespace qtsallis
