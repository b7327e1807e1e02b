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

TEST_SUITE_BEGIN("states");

TEST_CASE("probability vectors") {
  CHECK_NOTHROW(ProbabilityVector({0.5, 0.5}));
  CHECK_THROWS_AS(ProbabilityVector({0.7, 0.7}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{}), std::invalid_argument);

  Rng rng(1);
  for (int rep = 0; rep < 10; ++rep) {
    const ProbabilityVector p = random_distribution(5, rng, 0.2);
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[i] >= 0.2 / 5);
      sum += p[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("make_density accepts, repairs, rejects") {
  SUBCASE("maximally mixed is unchanged") {
    const DensityMatrix rho(0.5 * ComplexMatrix::identity(2));
    CHECK(approx_equal(rho.matrix(), 0.5 * ComplexMatrix::identity(2), 1e-12));
  }

  SUBCASE("tolerance-level negatives clamp to zero") {
    const DensityMatrix rho(ComplexMatrix::diagonal({1.0 + 1e-12, -1e-12}));
    CHECK(approx_equal(rho.matrix(), ComplexMatrix::diagonal({1.0, 0.0}), 1e-11));
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("bad trace rejected") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({0.7, 0.7})),
                    std::invalid_argument);
  }

  SUBCASE("genuinely negative eigenvalue rejected") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2})),
                    std::invalid_argument);
  }

  SUBCASE("non-Hermitian rejected") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 0.4}, {0.0, 0.5}}),
                    std::invalid_argument);
  }
}

TEST_CASE("random pure states") {
  Rng rng(42);
  SUBCASE("d = 1 gives the scalar 1") {
    const DensityMatrix rho = random_pure(1, rng);
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("purity") {
    for (std::size_t d : {2, 3, 5}) {
      const DensityMatrix rho = random_pure(d, rng);
      CHECK((rho.matrix() * rho.matrix()).trace().real() ==
            doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  SUBCASE("fixed seed reproduces the state") {
    Rng a(42), b(42);
    const DensityMatrix ra = random_pure(2, a);
    const DensityMatrix rb = random_pure(2, b);
    CHECK(approx_equal(ra.matrix(), rb.matrix(), 0.0));
  }
}

TEST_CASE("random mixed states") {
  Rng rng(5);
  SUBCASE("rank one is pure") {
    const DensityMatrix rho = random_mixed(3, 1, rng);
    CHECK((rho.matrix() * rho.matrix()).trace().real() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("unit trace and bounded rank") {
    const DensityMatrix rho = random_mixed(4, 2, rng);
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<double> lam = rho.spectrum();
    CHECK(lam[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(lam[1] == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("sample mean approaches the maximally mixed state") {
    ComplexMatrix mean(2, 2);
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      mean += random_mixed(2, 2, rng).matrix();
    }
    mean *= 1.0 / samples;
    CHECK((mean - 0.5 * ComplexMatrix::identity(2)).max_abs() < 0.05);
  }

  CHECK_THROWS_AS(random_mixed(2, 3, rng), std::invalid_argument);
}

TEST_CASE("purification") {
  SUBCASE("pure input gives a product vector") {
    const PurifiedState psi = purify(ket0_state());
    // Single nonzero Schmidt coefficient: the vector is e_k (x) |0>.
    double overlap = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      overlap += std::norm(psi.vec[k * 2 + 0]);
    }
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vector_norm(psi.vec) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("maximally mixed gives both Schmidt weights 1/2") {
    const PurifiedState psi = purify(maximally_mixed(2));
    const ComplexMatrix reduced =
        partial_trace(psi.projector(), 2, 2, Subsystem::left);
    CHECK(approx_equal(reduced, 0.5 * ComplexMatrix::identity(2), 1e-12));
  }

  SUBCASE("partial trace over the reference reproduces rho") {
    Rng rng(9);
    for (int rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho = random_mixed(3, 1 + rng.index(3), rng);
      const PurifiedState psi = purify(rho);
      CHECK(psi.d_r == 3);
      CHECK(psi.d_q == 3);
      const ComplexMatrix reduced =
          partial_trace(psi.projector(), psi.d_r, psi.d_q, Subsystem::right);
      CHECK((reduced - rho.matrix()).max_abs() < 1e-9);
    }
  }

  SUBCASE("purification is deterministic") {
    Rng rng(15);
    const ComplexMatrix m = random_mixed(3, 3, rng).matrix();
    const PurifiedState a = purify(DensityMatrix(m));
    const PurifiedState b = purify(DensityMatrix(m));
    for (std::size_t i = 0; i < a.vec.size(); ++i) {
      CHECK(a.vec[i] == b.vec[i]);
    }
  }
}

TEST_SUITE_END();
