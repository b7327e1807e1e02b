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
//
// Library tour: build a channel, compute the entropic functionals, and
// watch the q-Fano bound track the entropy exchange.

#include <cstdio>

#include "qtsallis/qtsallis.hpp"

int main() {
  using namespace qtsallis;

  const std::size_t d = 2;
  const DensityMatrix rho((1.0 / d) * ComplexMatrix::identity(d));

  std::printf("amplitude damping on |1><1|, q = 2\n");
  std::printf("%8s %12s %12s %12s %12s\n", "gamma", "fidelity", "exchange",
              "bound", "coherent");
  ComplexMatrix excited(2, 2);
  excited(1, 1) = 1.0;
  const DensityMatrix ket1(excited);
  for (double gamma = 0.0; gamma <= 1.0; gamma += 0.1) {
    const KrausChannel e =
        standard_channel(ChannelKind::amplitude_damping, 2, gamma);
    const double f = entanglement_fidelity(ket1, e);
    const double ex = entropy_exchange(ket1, e, 2.0);
    std::printf("%8.2f %12.6f %12.6f %12.6f %12.6f\n", gamma, f, ex,
                fano_bound(f, d, d, 2.0), coherent_q_information(ket1, e, 2.0));
  }

  std::printf("\nrandom channel on I/2: inequality reports\n");
  Rng rng(7);
  const KrausChannel e = random_channel(d, 4, rng);
  const InequalityReport fano = check_fano(rho, e, 1.5);
  std::printf("  fano:      lhs=%.6f rhs=%.6f gap=%.2e -> %s\n",
              fano.lhs.value(), fano.rhs.value(), fano.gap,
              fano.satisfied ? "ok" : "VIOLATED");
  const InequalityReport coh = check_coherent_bound(rho, e, 2.0);
  std::printf("  coherent:  lhs=%.6f rhs=%.6f gap=%.2e -> %s\n",
              coh.lhs.value(), coh.rhs.value(), coh.gap,
              coh.satisfied ? "ok" : "VIOLATED");

  const DensityMatrix sigma = random_mixed(d, 2, rng);
  for (const InequalityReport& r : pinsker_report(rho, sigma, 0.5)) {
    std::printf("  %-24s lhs=%.6f rhs=%.6f -> %s\n", r.name.c_str(),
                r.lhs.value(), r.rhs.value(), r.satisfied ? "ok" : "VIOLATED");
  }
  return 0;
}
