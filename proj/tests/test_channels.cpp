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

#include <cmath>

#include "doctest.h"
#include "test_support.hpp"

using namespace qttest;

TEST_SUITE_BEGIN("channels");

TEST_CASE("channel construction") {
  CHECK_NOTHROW(KrausChannel({ComplexMatrix::identity(2)}));

  const double r = std::sqrt(0.5);
  CHECK_NOTHROW(KrausChannel({r * ComplexMatrix::identity(2), r * pauli_z()}));

  CHECK_THROWS_AS(
      KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(2)}),
      std::invalid_argument);
  CHECK_THROWS_AS(KrausChannel({}), std::invalid_argument);
}

TEST_CASE("channel application") {
  Rng rng(3);
  SUBCASE("identity leaves states alone") {
    const DensityMatrix rho = random_mixed(3, 2, rng);
    const KrausChannel id = standard_channel(ChannelKind::identity, 3);
    CHECK((apply(id, rho).matrix() - rho.matrix()).max_abs() < 1e-12);
  }

  SUBCASE("full depolarizing sends every qubit state to I/2") {
    const KrausChannel dep = standard_channel(ChannelKind::depolarizing, 2, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho = random_mixed(2, 1 + rng.index(2), rng);
      CHECK((apply(dep, rho).matrix() - 0.5 * ComplexMatrix::identity(2))
                .max_abs() < 1e-12);
    }
  }

  SUBCASE("amplitude damping at gamma = 1 resets |1><1| to |0><0|") {
    const KrausChannel ad =
        standard_channel(ChannelKind::amplitude_damping, 2, 1.0);
    CHECK((apply(ad, ket1_state()).matrix() - ket0_state().matrix()).max_abs() <
          1e-12);
  }

  SUBCASE("trace preservation") {
    for (std::size_t d : {2, 4}) {
      const KrausChannel e = random_channel(d, d, rng);
      const DensityMatrix rho = random_mixed(d, d, rng);
      CHECK(apply(e, rho).matrix().trace().real() ==
            doctest::Approx(1.0).epsilon(1e-9));
    }
  }

  CHECK_THROWS_AS(apply(standard_channel(ChannelKind::identity, 2),
                        maximally_mixed(3)),
                  std::invalid_argument);
}

TEST_CASE("joint output") {
  Rng rng(7);
  SUBCASE("identity keeps the purification") {
    const DensityMatrix rho = maximally_mixed(2);
    const PurifiedState psi = purify(rho);
    const DensityMatrix joint =
        joint_output(standard_channel(ChannelKind::identity, 2), psi);
    CHECK((joint.matrix() - psi.projector()).max_abs() < 1e-12);
  }

  SUBCASE("unitary channels preserve purity") {
    const PurifiedState psi = purify(maximally_mixed(2));
    const KrausChannel u = random_channel(2, 1, rng);
    const DensityMatrix joint = joint_output(u, psi);
    CHECK((joint.matrix() * joint.matrix()).trace().real() ==
          doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("full depolarizing of a Bell half gives I/4") {
    const PurifiedState psi = purify(maximally_mixed(2));
    const DensityMatrix joint =
        joint_output(standard_channel(ChannelKind::depolarizing, 2, 1.0), psi);
    CHECK((joint.matrix() - 0.25 * ComplexMatrix::identity(4)).max_abs() < 1e-12);
  }

  SUBCASE("reference factor is untouched and consistent with apply") {
    for (int rep = 0; rep < 10; ++rep) {
      const std::size_t d = 2 + rng.index(3);
      const DensityMatrix rho = random_mixed(d, 1 + rng.index(d), rng);
      const PurifiedState psi = purify(rho);
      const KrausChannel e = random_channel(d, d, rng);
      const DensityMatrix joint = joint_output(e, psi);
      const ComplexMatrix ref_before =
          partial_trace(psi.projector(), d, d, Subsystem::left);
      const ComplexMatrix ref_after =
          partial_trace(joint.matrix(), d, d, Subsystem::left);
      CHECK((ref_after - ref_before).max_abs() < 1e-9);
      const ComplexMatrix principal =
          partial_trace(joint.matrix(), d, d, Subsystem::right);
      CHECK((principal - apply(e, rho).matrix()).max_abs() < 1e-9);
    }
  }
}

TEST_CASE("pinching") {
  Rng rng(11);
  SUBCASE("canonical basis dephases") {
    const KrausChannel pinch = pinching_channel(ComplexMatrix::identity(2));
    const DensityMatrix rho = plus_state();
    const ComplexMatrix out = apply(pinch, rho).matrix();
    CHECK(out(0, 1) == cdouble(0.0, 0.0));
    CHECK(out(0, 0).real() == doctest::Approx(0.5));
    // Diagonal states pass through unchanged.
    const DensityMatrix diag(ComplexMatrix::diagonal({0.3, 0.7}));
    CHECK((apply(pinch, diag).matrix() - diag.matrix()).max_abs() < 1e-12);
  }

  SUBCASE("pinched pairs commute in the split eigenbasis") {
    const DensityMatrix rho = random_mixed(3, 3, rng);
    const DensityMatrix sigma = random_mixed(3, 3, rng);
    const JordanSplit split = jordan_split(rho.hermitian(), sigma.hermitian());
    const EigenSystem basis =
        hermitian_eig(HermitianOperator(rho.matrix() - sigma.matrix()));
    const KrausChannel pinch = pinching_channel(basis.vectors);
    const ComplexMatrix a = apply(pinch, rho).matrix();
    const ComplexMatrix b = apply(pinch, sigma).matrix();
    CHECK((a * b - b * a).max_abs() < 1e-10);
    (void)split;
  }

  SUBCASE("idempotence") {
    const EigenSystem basis =
        hermitian_eig(HermitianOperator(random_hermitian(3, rng)));
    const KrausChannel pinch = pinching_channel(basis.vectors);
    const DensityMatrix rho = random_mixed(3, 3, rng);
    const DensityMatrix once = apply(pinch, rho);
    const DensityMatrix twice = apply(pinch, once);
    CHECK((once.matrix() - twice.matrix()).max_abs() < 1e-10);
  }

  SUBCASE("non-orthonormal basis rejected") {
    ComplexMatrix bad = ComplexMatrix::identity(2);
    bad(0, 1) = 0.5;
    CHECK_THROWS_AS(pinching_channel(bad), std::invalid_argument);
  }
}

TEST_CASE("standard families") {
  SUBCASE("qubit depolarizing Kraus set") {
    const KrausChannel dep = standard_channel(ChannelKind::depolarizing, 2, 0.6);
    CHECK(dep.size() == 4);
    CHECK(approx_equal(dep.kraus()[0],
                       std::sqrt(1.0 - 0.45) * ComplexMatrix::identity(2),
                       1e-12));
    CHECK(approx_equal(dep.kraus()[1], std::sqrt(0.15) * pauli_x(), 1e-12));
    CHECK(approx_equal(dep.kraus()[2], std::sqrt(0.15) * pauli_y(), 1e-12));
    CHECK(approx_equal(dep.kraus()[3], std::sqrt(0.15) * pauli_z(), 1e-12));
  }

  SUBCASE("qutrit depolarizing is complete and mixes toward I/3") {
    const KrausChannel dep = standard_channel(ChannelKind::depolarizing, 3, 1.0);
    CHECK(dep.size() == 9);
    Rng rng(13);
    const DensityMatrix rho = random_mixed(3, 2, rng);
    CHECK((apply(dep, rho).matrix() - maximally_mixed(3).matrix()).max_abs() <
          1e-12);
  }

  SUBCASE("amplitude damping Kraus set") {
    const KrausChannel ad =
        standard_channel(ChannelKind::amplitude_damping, 2, 0.36);
    CHECK(approx_equal(ad.kraus()[0], ComplexMatrix::diagonal({1.0, 0.8}), 1e-12));
    CHECK(ad.kraus()[1](0, 1).real() == doctest::Approx(0.6));
  }

  SUBCASE("identity family") {
    const KrausChannel id = standard_channel(ChannelKind::identity, 3);
    CHECK(id.size() == 1);
    CHECK(approx_equal(id.kraus()[0], ComplexMatrix::identity(3), 0.0));
  }

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(standard_channel(ChannelKind::depolarizing, 2, 1.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(standard_channel(ChannelKind::amplitude_damping, 3, 0.5),
                    std::invalid_argument);
  }
}

TEST_CASE("random channels") {
  Rng rng(17);
  SUBCASE("m = 1 is unitary") {
    const KrausChannel u = random_channel(3, 1, rng);
    CHECK(u.size() == 1);
    const ComplexMatrix& k = u.kraus()[0];
    CHECK((k.dagger() * k - ComplexMatrix::identity(3)).max_abs() < 1e-12);
  }

  SUBCASE("construction validates completeness for every m") {
    for (std::size_t m : {1, 2, 4, 9}) {
      CHECK_NOTHROW(random_channel(3, m, rng));
    }
  }

  SUBCASE("fixed seed reproduces the Kraus list") {
    Rng a(99), b(99);
    const KrausChannel ca = random_channel(2, 4, a);
    const KrausChannel cb = random_channel(2, 4, b);
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(approx_equal(ca.kraus()[k], cb.kraus()[k], 0.0));
    }
  }
}

TEST_CASE("channel mixtures") {
  Rng rng(19);
  const KrausChannel id = standard_channel(ChannelKind::identity, 2);
  const KrausChannel dep = standard_channel(ChannelKind::depolarizing, 2, 1.0);

  SUBCASE("endpoints behave as the pure channels") {
    const DensityMatrix rho = random_mixed(2, 2, rng);
    const KrausChannel all_g = mix_channels(1.0, id, dep);
    const KrausChannel all_f = mix_channels(0.0, id, dep);
    CHECK((apply(all_g, rho).matrix() - rho.matrix()).max_abs() < 1e-12);
    CHECK((apply(all_f, rho).matrix() - apply(dep, rho).matrix()).max_abs() <
          1e-12);
  }

  SUBCASE("even identity/depolarizing mixture on |0><0|") {
    const KrausChannel mix = mix_channels(0.5, id, dep);
    const ComplexMatrix expected =
        0.5 * (ket0_state().matrix() + 0.5 * ComplexMatrix::identity(2));
    CHECK((apply(mix, ket0_state()).matrix() - expected).max_abs() < 1e-12);
  }

  SUBCASE("convex action on random states") {
    for (int rep = 0; rep < 10; ++rep) {
      const double theta = rng.uniform();
      const KrausChannel g = random_channel(2, 2, rng);
      const KrausChannel f = random_channel(2, 4, rng);
      const KrausChannel mix = mix_channels(theta, g, f);
      const DensityMatrix rho = random_mixed(2, 2, rng);
      const ComplexMatrix expected = theta * apply(g, rho).matrix() +
                                     (1.0 - theta) * apply(f, rho).matrix();
      CHECK((apply(mix, rho).matrix() - expected).max_abs() < 1e-9);
    }
  }
}

TEST_SUITE_END();
