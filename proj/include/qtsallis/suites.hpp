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

#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qtsallis/verifiers.hpp"

namespace qtsallis {

/// Shared knobs for one randomized verification suite. `trials` counts
/// instances per q-value; an empty `q_values` selects the suite's
/// default grid.
struct SuiteConfig {
  int trials = 1000;
  std::uint64_t seed = 1;
  std::vector<std::size_t> dims = {2, 3, 4};
  std::vector<double> q_values;
  double tol = tolerance.check;
};

struct FailureRecord {
  std::string instance;
  ExtendedReal lhs = ExtendedReal::finite(0.0);
  ExtendedReal rhs = ExtendedReal::finite(0.0);
};

/// Aggregate over all comparisons a suite evaluated. worst_gap is the
/// smallest finite rhs - lhs seen (negative on violations, near zero at
/// saturation), 0 when no finite gap was observed.
struct SuiteResult {
  std::string name;
  int trials = 0;
  int violations = 0;
  double worst_gap = 0.0;
  std::vector<FailureRecord> failures;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class SuiteBuilder {
 public:
  SuiteBuilder(std::string name, int trials) {
    result_.name = std::move(name);
    result_.trials = trials;
  }

  void add(const InequalityReport& r) {
    if (!r.satisfied) {
      ++result_.violations;
      result_.failures.push_back(
          FailureRecord{r.name + ";" + r.instance, r.lhs, r.rhs});
    }
    if (r.gap_defined) min_gap_ = std::min(min_gap_, r.gap);
  }

  void add(const std::vector<InequalityReport>& rs) {
    for (const auto& r : rs) add(r);
  }

  /// Instance evaluation aborted by an exception: counted as a violation.
  void abort_instance(const std::string& instance, const char* what) {
    ++result_.violations;
    result_.failures.push_back(FailureRecord{instance + ";error=" + what,
                                             ExtendedReal::infinity(),
                                             ExtendedReal::finite(0.0)});
  }

  SuiteResult finish() {
    result_.worst_gap =
        (min_gap_ == std::numeric_limits<double>::infinity()) ? 0.0 : min_gap_;
    return std::move(result_);
  }

 private:
  SuiteResult result_;
  double min_gap_ = std::numeric_limits<double>::infinity();
};

inline std::string fingerprint(std::uint64_t seed, std::size_t d,
                               std::size_t m, std::string_view kind,
                               double q) {
  std::ostringstream os;
  os << "seed=" << seed << ";d=" << d << ";m=" << m << ";kind=" << kind
     << ";q=" << q;
  return os.str();
}

/// Kraus counts cycle through {1, d, d^2} so unitary, thin and full
/// environments all appear.
inline std::size_t kraus_count(std::size_t d, int trial) {
  switch (trial % 3) {
    case 0: return 1;
    case 1: return d;
    default: return d * d;
  }
}

inline std::size_t pick_dim(const SuiteConfig& cfg, int trial) {
  return cfg.dims[static_cast<std::size_t>(trial) % cfg.dims.size()];
}

inline DensityMatrix random_state(std::size_t d, Rng& rng) {
  const std::size_t rank = 1 + rng.index(d);
  return random_mixed(d, rank, rng);
}

/// Full-rank state bounded away from singularity: mix with I/d.
inline DensityMatrix floored_state(std::size_t d, Rng& rng, double floor) {
  const DensityMatrix raw = random_mixed(d, d, rng);
  ComplexMatrix m = (1.0 - floor) * raw.matrix();
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) += floor / static_cast<double>(d);
  }
  return DensityMatrix(m);
}

}  // namespace detail

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(lo + (hi - lo) * static_cast<double>(i) /
                           static_cast<double>(n - 1));
  }
  return out;
}

// ----------------------------------------------------------------------
// Individual suites. Every instance draws from an Rng seeded by
// (master seed, suite name, q index, trial index) alone, so results are
// independent of evaluation order.
// ----------------------------------------------------------------------

inline SuiteResult run_fano_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0}
                           : cfg.q_values;
  detail::SuiteBuilder out("fano", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("fano");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::size_t m = detail::kraus_count(d, t);
      const std::string inst = detail::fingerprint(s, d, m, "random", qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const KrausChannel e = random_channel(d, m, rng);
        out.add(check_fano(rho, e, qs[qi], cfg.tol, inst));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_coherent_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{1.3, 2.0, 3.0} : cfg.q_values;
  detail::SuiteBuilder out("coherent", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("coherent");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::size_t m = detail::kraus_count(d, t);
      const std::string inst = detail::fingerprint(s, d, m, "random", qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const KrausChannel e = random_channel(d, m, rng);
        out.add(check_coherent_bound(rho, e, qs[qi], cfg.tol, inst));
        // Unitary operations are perfectly reversible: equality case.
        const KrausChannel u = random_channel(d, 1, rng);
        const InequalityReport eq = check_coherent_bound(rho, u, qs[qi], cfg.tol,
                                                         inst + ";unitary");
        out.add(eq);
        out.add(make_report("coherent_unitary_equality", std::abs(eq.gap), 0.0,
                            cfg.tol, inst + ";unitary"));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_subadditivity_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{1.5, 2.0, 3.0} : cfg.q_values;
  detail::SuiteBuilder out("subadditivity", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("subadditivity");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::string inst = detail::fingerprint(s, d, 0, "bipartite", qs[qi]);
      try {
        const DensityMatrix rho_ab = detail::random_state(d * d, rng);
        const auto [sub, tri] =
            check_subadditivity(rho_ab, d, d, qs[qi], cfg.tol, inst);
        out.add(sub);
        out.add(tri);
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_monotonicity_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? linspace(0.0, 2.0, 11) : cfg.q_values;
  detail::SuiteBuilder out("monotonicity", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("monotonicity");
  static constexpr const char* kinds[] = {"pinching", "depolarizing",
                                          "amplitude_damping", "random"};
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const char* kind = kinds[t % 4];
      std::size_t d = detail::pick_dim(cfg, t);
      if (std::string_view(kind) == "amplitude_damping") d = 2;
      const std::string inst = detail::fingerprint(s, d, 0, kind, qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const DensityMatrix sigma = detail::random_state(d, rng);
        KrausChannel e = [&]() -> KrausChannel {
          switch (t % 4) {
            case 0: return pinching_channel(haar_unitary(d, rng));
            case 1: return standard_channel(ChannelKind::depolarizing, d, rng.uniform());
            case 2: return standard_channel(ChannelKind::amplitude_damping, 2, rng.uniform());
            default: return random_channel(d, detail::kraus_count(d, t), rng);
          }
        }();
        out.add(check_quantum_monotonicity(rho, sigma, e, qs[qi], cfg.tol, inst));

        // Unitary channels are isospectral transforms: equality case.
        // Equality is checked at zero slack, so the pair is kept away
        // from singularity (negative powers of near-zero eigenvalues
        // otherwise amplify eigensolver round-off past 1e-9).
        const KrausChannel u = random_channel(d, 1, rng);
        const QOrder q(qs[qi]);
        const DensityMatrix rho_eq = detail::floored_state(d, rng, 1e-2);
        const DensityMatrix sigma_eq = detail::floored_state(d, rng, 1e-2);
        const ExtendedReal lhs_u =
            relative_entropy(apply(u, rho_eq), apply(u, sigma_eq), q);
        const ExtendedReal rhs_u = relative_entropy(rho_eq, sigma_eq, q);
        ExtendedReal diff = ExtendedReal::finite(0.0);
        if (lhs_u.is_infinite() != rhs_u.is_infinite()) {
          diff = ExtendedReal::infinity();
        } else if (!lhs_u.is_infinite()) {
          diff = ExtendedReal::finite(std::abs(lhs_u.value() - rhs_u.value()));
        }
        out.add(make_report("monotonicity_unitary_equality", diff,
                            ExtendedReal::finite(0.0), cfg.tol,
                            inst + ";unitary"));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_classical_monotonicity_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0, 3.0}
                           : cfg.q_values;
  detail::SuiteBuilder out("classical_monotonicity", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("classical_monotonicity");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t n = detail::pick_dim(cfg, t) + (t % 2 ? 2 : 0);
      const std::string inst = detail::fingerprint(s, n, 0, t % 2 ? "coarse" : "stochastic", qs[qi]);
      try {
        const ProbabilityVector p = random_distribution(n, rng);
        const ProbabilityVector r = random_distribution(n, rng);
        const StochasticMatrix tm =
            (t % 2) ? binary_coarse_graining(n, 1 + rng.index(n - 1))
                    : random_stochastic(n, n, rng);
        out.add(check_classical_monotonicity(p, r, tm, qs[qi], cfg.tol, inst));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_pinsker_suite(const SuiteConfig& cfg) {
  // Default grid: the [0, 2] window plus q = 1/2, whose report carries
  // the trace-norm chain.
  std::vector<double> default_qs = linspace(0.0, 2.0, 11);
  default_qs.push_back(0.5);
  const std::vector<double> qs = cfg.q_values.empty() ? default_qs : cfg.q_values;
  detail::SuiteBuilder out("pinsker", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("pinsker");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::string inst = detail::fingerprint(s, d, 0, "pair", qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const DensityMatrix sigma = detail::random_state(d, rng);
        out.add(pinsker_report(rho, sigma, qs[qi], cfg.tol, inst));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_ordering_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{0.5, 1.5} : cfg.q_values;
  std::vector<double> lows, highs;
  for (double q : qs) (q < 1.0 ? lows : highs).push_back(q);
  if (lows.empty() || highs.empty()) {
    throw std::invalid_argument("ordering suite: needs q values on both sides of 1");
  }
  detail::SuiteBuilder out("ordering", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("ordering");
  std::size_t combo = 0;
  for (double lo : lows) {
    for (double hi : highs) {
      for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t s = derive_seed(cfg.seed, stream,
                                            combo * static_cast<std::size_t>(cfg.trials) + t);
        Rng rng(s);
        const std::size_t d = detail::pick_dim(cfg, t);
        std::ostringstream tag;
        tag << "seed=" << s << ";d=" << d << ";p=" << hi << ";q=" << lo;
        try {
          const DensityMatrix rho = detail::floored_state(d, rng, 1e-3);
          const DensityMatrix sigma = detail::floored_state(d, rng, 1e-3);
          out.add(check_relative_ordering(rho, sigma, hi, lo, cfg.tol, tag.str()));
        } catch (const std::exception& ex) {
          out.abort_instance(tag.str(), ex.what());
        }
      }
      ++combo;
    }
  }
  return out.finish();
}

inline SuiteResult run_reference_fano_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? linspace(0.0, 2.0, 11) : cfg.q_values;
  detail::SuiteBuilder out("reference_fano", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("reference_fano");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::size_t m = detail::kraus_count(d, t);
      const std::string inst = detail::fingerprint(s, d, m, "random", qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const KrausChannel e = random_channel(d, m, rng);
        // Nonsingular omega: full-rank sample floored with I/d^2.
        const DensityMatrix omega = detail::floored_state(d * d, rng, 1e-3);
        out.add(reference_fano_report(rho, e, omega, qs[qi], cfg.tol, inst));
        if (QOrder(qs[qi]).is_one()) {
          // Uniform omega must reproduce the plain Fano bound at q = 1.
          const DensityMatrix uniform(
              (1.0 / static_cast<double>(d * d)) *
              ComplexMatrix::identity(d * d));
          const auto reports =
              reference_fano_report(rho, e, uniform, 1.0, cfg.tol, inst);
          const double fano = fano_bound(entanglement_fidelity(rho, e), d, d, 1.0);
          out.add(make_report("reference_fano_uniform_match",
                              std::abs(reports.front().rhs.value() - fano), 0.0,
                              cfg.tol, inst));
        }
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_product_omega_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}
                           : cfg.q_values;
  detail::SuiteBuilder out("product_omega", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("product_omega");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::size_t m = detail::kraus_count(d, t);
      const std::string inst = detail::fingerprint(s, d, m, "product", qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const KrausChannel e = random_channel(d, m, rng);
        // Keep mu and omega_Q well conditioned so the 1e-10 closed-form
        // agreement is meaningful in double precision.
        std::vector<double> mu(d);
        double norm = 0.0;
        for (double& x : mu) {
          x = 1.0 + rng.uniform();
          norm += x;
        }
        for (double& x : mu) x /= norm;
        const DensityMatrix omega_q = detail::floored_state(d, rng, 0.3);
        const ProductOmegaTerms terms =
            product_omega_terms(rho, e, ProbabilityVector(mu), omega_q, qs[qi]);
        out.add(make_report("product_omega_f",
                            std::abs(terms.f_omega - terms.f_omega_dense), 0.0,
                            tolerance.closed_form, inst));
        out.add(make_report("product_omega_trace",
                            std::abs(terms.trace_term - terms.trace_term_dense),
                            0.0, tolerance.closed_form, inst));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_crosscheck_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0, 3.0}
                           : cfg.q_values;
  detail::SuiteBuilder out("crosscheck", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("crosscheck");
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const std::size_t m = detail::kraus_count(d, t);
      const std::string inst = detail::fingerprint(s, d, m, "random", qs[qi]);
      try {
        const DensityMatrix rho = detail::random_state(d, rng);
        const KrausChannel e = random_channel(d, m, rng);
        const QOrder q(qs[qi]);

        const double exch_w = entropy_exchange(rho, e, q);
        const double exch_joint = entropy_exchange_via_joint(rho, e, q);
        out.add(make_report("exchange_routes", std::abs(exch_w - exch_joint),
                            0.0, cfg.tol, inst));

        const double fid_kraus = entanglement_fidelity(rho, e);
        const double fid_joint = entanglement_fidelity_via_joint(rho, e);
        out.add(make_report("fidelity_routes", std::abs(fid_kraus - fid_joint),
                            0.0, cfg.tol, inst));

        // Purification changed by a random reference-side unitary.
        PurifiedState psi = purify(rho);
        const ComplexMatrix u = haar_unitary(d, rng);
        PurifiedState rotated{std::vector<cdouble>(d * d), d, d};
        for (std::size_t r = 0; r < d; ++r) {
          for (std::size_t rr = 0; rr < d; ++rr) {
            const cdouble w = u(r, rr);
            if (w == cdouble(0.0, 0.0)) continue;
            for (std::size_t i = 0; i < d; ++i) {
              rotated.vec[r * d + i] += w * psi.vec[rr * d + i];
            }
          }
        }
        const DensityMatrix joint2 = joint_output(e, rotated);
        const double fid2 = expectation(joint2.matrix(), rotated.vec).real();
        const double exch2 = tsallis_entropy(joint2, q);
        out.add(make_report("fidelity_purification_free",
                            std::abs(fid2 - fid_kraus), 0.0, cfg.tol, inst));
        out.add(make_report("exchange_purification_free",
                            std::abs(exch2 - exch_w), 0.0, cfg.tol, inst));

        // Same channel under a unitary remixing of the Kraus list.
        const ComplexMatrix mix = haar_unitary(m, rng);
        std::vector<ComplexMatrix> remixed(m, ComplexMatrix(d, d));
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            remixed[a] += mix(a, b) * e.kraus()[b];
          }
        }
        const KrausChannel e2(std::move(remixed));
        out.add(make_report("exchange_gauge_free",
                            std::abs(entropy_exchange(rho, e2, q) - exch_w), 0.0,
                            cfg.tol, inst));
        out.add(make_report("fidelity_gauge_free",
                            std::abs(entanglement_fidelity(rho, e2) - fid_kraus),
                            0.0, cfg.tol, inst));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_concavity_suite(const SuiteConfig& cfg) {
  const std::vector<double> qs =
      cfg.q_values.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0, 3.0}
                           : cfg.q_values;
  detail::SuiteBuilder out("concavity", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("concavity");
  static constexpr double thetas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t s = derive_seed(cfg.seed, stream,
                                          qi * static_cast<std::size_t>(cfg.trials) + t);
      Rng rng(s);
      const std::size_t d = detail::pick_dim(cfg, t);
      const double theta = thetas[t % 5];
      const QOrder q(qs[qi]);
      std::ostringstream tag;
      tag << "seed=" << s << ";d=" << d << ";theta=" << theta << ";q=" << qs[qi];
      const std::string inst = tag.str();
      try {
        // Exchange concave in the state.
        const std::size_t m = (t % 2) ? d : 1;
        const KrausChannel e = random_channel(d, m, rng);
        const DensityMatrix rho1 = detail::random_state(d, rng);
        const DensityMatrix rho2 = detail::random_state(d, rng);
        const DensityMatrix mix_state(theta * rho1.matrix() +
                                      (1.0 - theta) * rho2.matrix());
        out.add(make_report(
            "exchange_concave_state",
            theta * entropy_exchange(rho1, e, q) +
                (1.0 - theta) * entropy_exchange(rho2, e, q),
            entropy_exchange(mix_state, e, q), cfg.tol, inst));

        // Exchange concave in the operation.
        const KrausChannel g = random_channel(d, m, rng);
        const KrausChannel mixed = mix_channels(theta, g, e);
        out.add(make_report("exchange_concave_channel",
                            theta * entropy_exchange(rho1, g, q) +
                                (1.0 - theta) * entropy_exchange(rho1, e, q),
                            entropy_exchange(rho1, mixed, q), cfg.tol, inst));

        // tr f concavity for f = eta_q on positive-spectrum Hermitians.
        ComplexMatrix ga(d, d), gb(d, d);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j <= i; ++j) {
            const cdouble za = (i == j) ? cdouble(rng.normal(), 0.0)
                                        : 0.5 * rng.complex_normal();
            const cdouble zb = (i == j) ? cdouble(rng.normal(), 0.0)
                                        : 0.5 * rng.complex_normal();
            ga(i, j) = za;
            ga(j, i) = std::conj(za);
            gb(i, j) = zb;
            gb(j, i) = std::conj(zb);
          }
        }
        const double shift_a = ga.frobenius_norm() + 0.1;
        const double shift_b = gb.frobenius_norm() + 0.1;
        ga += shift_a * ComplexMatrix::identity(d);
        gb += shift_b * ComplexMatrix::identity(d);
        const auto phi = [&q](const ComplexMatrix& x) {
          double sum = 0.0;
          for (double lam : hermitian_eig(HermitianOperator(x)).values) {
            sum += eta_q(lam, q);
          }
          return sum;
        };
        out.add(make_report(
            "trace_function_concave", theta * phi(ga) + (1.0 - theta) * phi(gb),
            phi(theta * ga + (1.0 - theta) * gb), cfg.tol, inst));
      } catch (const std::exception& ex) {
        out.abort_instance(inst, ex.what());
      }
    }
  }
  return out.finish();
}

inline SuiteResult run_continuity_suite(const SuiteConfig& cfg) {
  detail::SuiteBuilder out("continuity", cfg.trials);
  const std::uint64_t stream = detail::fnv1a("continuity");
  const double continuity_tol = 1e-4;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t s = derive_seed(cfg.seed, stream, t);
    Rng rng(s);
    const std::size_t d = detail::pick_dim(cfg, t);
    const std::size_t m = detail::kraus_count(d, t);
    const std::string inst = detail::fingerprint(s, d, m, "full_rank", 1.0);
    try {
      const DensityMatrix rho = detail::floored_state(d, rng, 0.5);
      const DensityMatrix sigma = detail::floored_state(d, rng, 0.5);
      const KrausChannel e = random_channel(d, m, rng);
      const ProbabilityVector p = random_distribution(d, rng, 0.5);
      const ProbabilityVector r = random_distribution(d, rng, 0.5);
      const double w = 0.2 + 0.6 * rng.uniform();

      const double s1_state = tsallis_entropy(rho, 1.0);
      const double s1_vec = tsallis_entropy(p, 1.0);
      const double h1 = binary_entropy(w, 1.0);
      const double dc1 = relative_entropy(p, r, QOrder(1.0)).value();
      const double dq1 = relative_entropy(rho, sigma, QOrder(1.0)).value();
      const double ex1 = entropy_exchange(rho, e, 1.0);
      const double co1 = coherent_q_information(rho, e, 1.0);
      for (double q : {1.0 - 1e-5, 1.0 + 1e-5}) {
        out.add(make_report("continuity_state",
                            std::abs(tsallis_entropy(rho, q) - s1_state), 0.0,
                            continuity_tol, inst));
        out.add(make_report("continuity_vec",
                            std::abs(tsallis_entropy(p, q) - s1_vec), 0.0,
                            continuity_tol, inst));
        out.add(make_report("continuity_binary",
                            std::abs(binary_entropy(w, q) - h1), 0.0,
                            continuity_tol, inst));
        out.add(make_report(
            "continuity_classical_relative",
            std::abs(relative_entropy(p, r, q).value() - dc1), 0.0,
            continuity_tol, inst));
        out.add(make_report(
            "continuity_quantum_relative",
            std::abs(relative_entropy(rho, sigma, q).value() - dq1), 0.0,
            continuity_tol, inst));
        out.add(make_report("continuity_exchange",
                            std::abs(entropy_exchange(rho, e, q) - ex1), 0.0,
                            continuity_tol, inst));
        out.add(make_report(
            "continuity_coherent",
            std::abs(coherent_q_information(rho, e, q) - co1), 0.0,
            continuity_tol, inst));
      }
    } catch (const std::exception& ex) {
      out.abort_instance(inst, ex.what());
    }
  }
  return out.finish();
}

inline SuiteResult run_bhattacharyya_suite(const SuiteConfig& cfg) {
  detail::SuiteBuilder out("bhattacharyya", cfg.trials);
  for (int i = 1; i <= 9; ++i) {
    const double t = 0.1 * i;
    std::ostringstream tag;
    tag << "t=" << t;
    const BhattacharyyaScan scan =
        bhattacharyya_bound_report(t, 10000, 1e-6, tag.str());
    out.add(scan.report);
    // Grid maximizer must land within one step of ((1+t)/2, (1-t)/2).
    out.add(make_report("bhattacharyya_maximizer",
                        std::abs(scan.max_u - 0.5 * (1.0 + t)), scan.grid_step,
                        1e-12, tag.str()));
  }
  return out.finish();
}

// ----------------------------------------------------------------------
// Registry
// ----------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "fano",          "coherent",     "subadditivity",
      "monotonicity",  "classical_monotonicity", "pinsker",
      "ordering",      "reference_fano", "product_omega",
      "crosscheck",    "concavity",    "continuity",
      "bhattacharyya"};
  return names;
}

inline SuiteResult run_suite(std::string_view name, const SuiteConfig& cfg) {
  if (name == "fano") return run_fano_suite(cfg);
  if (name == "coherent") return run_coherent_suite(cfg);
  if (name == "subadditivity") return run_subadditivity_suite(cfg);
  if (name == "monotonicity") return run_monotonicity_suite(cfg);
  if (name == "classical_monotonicity") return run_classical_monotonicity_suite(cfg);
  if (name == "pinsker") return run_pinsker_suite(cfg);
  if (name == "ordering") return run_ordering_suite(cfg);
  if (name == "reference_fano") return run_reference_fano_suite(cfg);
  if (name == "product_omega") return run_product_omega_suite(cfg);
  if (name == "crosscheck") return run_crosscheck_suite(cfg);
  if (name == "concavity") return run_concavity_suite(cfg);
  if (name == "continuity") return run_continuity_suite(cfg);
  if (name == "bhattacharyya") return run_bhattacharyya_suite(cfg);
  throw std::invalid_argument("run_suite: unknown suite '" + std::string(name) + "'");
}

/// Validates user-supplied q values against a suite's validity window;
/// throws std::invalid_argument on any violation.
inline void validate_suite_q(std::string_view name,
                             const std::vector<double>& qs) {
  const auto reject = [&](const std::string& why) {
    throw std::invalid_argument("suite '" + std::string(name) + "': " + why);
  };
  for (double q : qs) {
    if (!std::isfinite(q) || q < 0.0) reject("q must be finite and nonnegative");
  }
  if (name == "coherent" || name == "subadditivity") {
    for (double q : qs) {
      if (q <= 1.0 + tolerance.q_one_crossover) reject("q must exceed 1");
    }
  } else if (name == "monotonicity" || name == "pinsker" ||
             name == "reference_fano" || name == "product_omega") {
    for (double q : qs) {
      if (q > 2.0) reject("q must lie in [0, 2]");
    }
  } else if (name == "ordering") {
    bool low = false, high = false;
    for (double q : qs) {
      if (q > 2.0) reject("q must lie in [0, 2]");
      if (std::abs(q - 1.0) <= tolerance.q_one_crossover) reject("q = 1 not allowed");
      (q < 1.0 ? low : high) = true;
    }
    if (!qs.empty() && (!low || !high)) {
      reject("needs q values on both sides of 1");
    }
  }
}

}  // namespace qtsallis
