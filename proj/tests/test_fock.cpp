// Copyright 2026 Bosonlab Contributors
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

#include <doctest.h>

#include <cmath>
#include <random>

#include "bosonlab/fock.hpp"
#include "bosonlab/states.hpp"
#include "oracles.hpp"

using namespace bosonlab;

TEST_CASE("lowering acts as sqrt(n) shift") {
  FockVector one(5);
  one.amps[1] = 1.0;
  auto [lowered, rep] = apply_ladder(one, Mode::A, LadderKind::Lower, 1);
  CHECK(std::abs(lowered.amps[0] - cplx(1.0, 0.0)) < 1e-15);
  for (int n = 1; n <= 5; ++n) CHECK(std::abs(lowered.amps[static_cast<std::size_t>(n)]) == 0.0);
  CHECK(rep.leaked_weight == 0.0);
}

TEST_CASE("lowering annihilates the vacuum") {
  FockVector vac(4);
  vac.amps[0] = 1.0;
  auto [lowered, rep] = apply_ladder(vac, Mode::A, LadderKind::Lower, 1);
  CHECK(lowered.squared_norm() == 0.0);
  CHECK(rep.leaked_weight == 0.0);
  CHECK_FALSE(rep.flagged);
}

TEST_CASE("raising a coherent state reproduces the series norm") {
  // ||a^dag psi||^2 = <a a^dag> = |alpha|^2 + 1 = 2 at alpha = 1; oracle is
  // direct summation over independently generated coherent amplitudes.
  const auto amps = oracles::coherent_amps(cplx(1.0, 0.0), 30);
  const cplx oracle = oracles::monomial_direct(amps, 1, 1) + cplx(1.0, 0.0);

  const FockVector psi = make_coherent(cplx(1.0, 0.0), 30);
  auto [raised, rep] = apply_ladder(psi, Mode::A, LadderKind::Raise, 1);
  CHECK(raised.squared_norm() == doctest::Approx(oracle.real()).epsilon(1e-8));
  CHECK(raised.squared_norm() == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(rep.leaked_weight < 1e-10);
}

TEST_CASE("raising past the cutoff records the dropped weight") {
  FockVector top(3);
  top.amps[3] = 1.0;
  auto [raised, rep] = apply_ladder(top, Mode::A, LadderKind::Raise, 1);
  CHECK(raised.squared_norm() == 0.0);
  CHECK(rep.leaked_weight == doctest::Approx(4.0));  // ||a^dag |3>||^2 = 4
  CHECK(rep.flagged);
}

TEST_CASE("single-mode states reject mode b") {
  FockVector v(3);
  v.amps[0] = 1.0;
  CHECK_THROWS_AS(apply_ladder(v, Mode::B, LadderKind::Lower, 1), std::invalid_argument);
  CHECK_THROWS_AS(expectation(v, MonomialSpec{0, 0, 1, 0}), std::invalid_argument);
}

TEST_CASE("expectation examples") {
  SUBCASE("coherent photon number") {
    const FockVector psi = make_coherent(cplx(2.0, 0.0), 40);
    CHECK(std::abs(expectation(psi, MonomialSpec{1, 1, 0, 0}) - cplx(4.0, 0.0)) < 1e-8);
  }
  SUBCASE("squeezed vacuum <a^2>") {
    const FockVector psi = make_squeezed_vacuum(1.0, 0.0, 80);
    const cplx oracle = oracles::squeezed_a_squared(1.0, 0.0);
    CHECK(std::abs(expectation(psi, MonomialSpec{0, 2, 0, 0}) - oracle) < 1e-6);
    CHECK(oracle.real() == doctest::Approx(-1.8134).epsilon(1e-4));
  }
  SUBCASE("number state <a> vanishes") {
    const FockVector psi = make_fock(3, 10);
    CHECK(std::abs(expectation(psi, MonomialSpec{0, 1, 0, 0})) == 0.0);
  }
  SUBCASE("unnormalized input is rejected") {
    FockVector bad(3);
    bad.amps[0] = 0.5;
    CHECK_THROWS_AS(expectation(bad, MonomialSpec{1, 1, 0, 0}), std::invalid_argument);
  }
}

TEST_CASE("variance examples") {
  SUBCASE("coherent states have vanishing ladder variance") {
    const FockVector psi = make_coherent(cplx(1.3, -0.4), 40);
    CHECK(std::abs(variance(psi, VarianceOf::Op)) < 1e-9);
    CHECK(std::abs(variance(psi, VarianceOf::OpDagger)) < 1e-9);
  }
  SUBCASE("squeezed vacuum variance equals <a^2>") {
    const FockVector psi = make_squeezed_vacuum(0.5, 0.0, 60);
    const cplx oracle = oracles::squeezed_a_squared(0.5, 0.0);
    CHECK(std::abs(variance(psi, VarianceOf::Op) - oracle) < 1e-6);
    CHECK(oracle.real() == doctest::Approx(-0.5876).epsilon(1e-3));
  }
  SUBCASE("vacuum") {
    FockVector vac(3);
    vac.amps[0] = 1.0;
    CHECK(std::abs(variance(vac, VarianceOf::Op)) == 0.0);
  }
}

TEST_CASE("tensor product layout and norms") {
  SUBCASE("vacuum times vacuum") {
    FockVector vac(2);
    vac.amps[0] = 1.0;
    const TwoModeVector prod = tensor_product(vac, vac);
    CHECK(std::abs(prod.amps[0] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(prod.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("mode-a-major indexing") {
    const FockVector a = make_fock(1, 3);
    const FockVector b = make_fock(2, 4);
    const TwoModeVector prod = tensor_product(a, b);
    CHECK(prod.index(1, 2) == 7);
    CHECK(std::abs(prod.amps[7] - cplx(1.0, 0.0)) < 1e-15);
  }
  SUBCASE("photon-number additivity") {
    const FockVector c = make_coherent(cplx(1.0, 0.0), 25);
    const TwoModeVector prod = tensor_product(c, c);
    const cplx na = expectation(prod, MonomialSpec{1, 1, 0, 0});
    const cplx nb = expectation(prod, MonomialSpec{0, 0, 1, 1});
    CHECK(std::abs(na + nb - cplx(2.0, 0.0)) < 1e-8);
  }
}

TEST_CASE("ladder adjointness on random vectors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const FockVector phi = oracles::random_state(rng, 12, 12);
    const FockVector psi = oracles::random_state(rng, 12, 12);
    const FockVector a_psi = apply_ladder(psi, Mode::A, LadderKind::Lower, 1).first;
    const FockVector adag_phi = apply_ladder(phi, Mode::A, LadderKind::Raise, 1).first;
    const cplx lhs = inner_product(phi, a_psi);
    const cplx rhs = std::conj(inner_product(psi, adag_phi));
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("commutator identity away from the top level") {
  std::mt19937 rng(12);
  FockVector psi = oracles::random_state(rng, 10, 9);  // top level empty
  const FockVector raised_then_lowered =
      apply_ladder(apply_ladder(psi, Mode::A, LadderKind::Raise, 1).first, Mode::A,
                   LadderKind::Lower, 1)
          .first;
  const FockVector lowered_then_raised =
      apply_ladder(apply_ladder(psi, Mode::A, LadderKind::Lower, 1).first, Mode::A,
                   LadderKind::Raise, 1)
          .first;
  for (std::size_t n = 0; n < psi.amps.size(); ++n) {
    const cplx comm = raised_then_lowered.amps[n] - lowered_then_raised.amps[n];
    CHECK(std::abs(comm - psi.amps[n]) < 1e-12);
  }
}

TEST_CASE("expectation matches direct index summation") {
  std::mt19937 rng(13);
  const FockVector psi = oracles::random_state(rng, 14, 14);
  for (const auto [p, q] : {std::pair{1, 1}, {0, 2}, {2, 0}, {2, 2}, {3, 1}}) {
    const cplx lib = expectation(psi, MonomialSpec{p, q, 0, 0});
    const cplx oracle = oracles::monomial_direct(psi.amps, p, q);
    CHECK(std::abs(lib - oracle) < 1e-10);
  }
}

TEST_CASE("two-mode expectation factorizes on products") {
  std::mt19937 rng(14);
  const FockVector a = oracles::random_state(rng, 10, 10);
  const FockVector b = oracles::random_state(rng, 9, 9);
  const TwoModeVector prod = tensor_product(a, b);
  const cplx joint = expectation(prod, MonomialSpec{1, 1, 0, 1});
  const cplx split = expectation(a, MonomialSpec{1, 1, 0, 0}) * expectation(b, MonomialSpec{0, 1, 0, 0});
  CHECK(std::abs(joint - split) < 1e-10);
}

TEST_CASE("tensor norm is the product of norms") {
  std::mt19937 rng(15);
  const FockVector a = oracles::random_state(rng, 8, 8);
  const FockVector b = oracles::random_state(rng, 7, 7);
  const TwoModeVector prod = tensor_product(a, b);
  CHECK(prod.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-mode ladder acts on the advertised mode") {
  const FockVector a = make_fock(2, 4);
  const FockVector b = make_fock(1, 4);
  const TwoModeVector prod = tensor_product(a, b);
  auto [lowered_b, rep] = apply_ladder(prod, Mode::B, LadderKind::Lower, 1);
  CHECK(std::abs(lowered_b.at(2, 0) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(rep.leaked_weight == 0.0);
  auto [raised_a, rep2] = apply_ladder(prod, Mode::A, LadderKind::Raise, 1);
  CHECK(std::abs(raised_a.at(3, 1) - cplx(std::sqrt(3.0), 0.0)) < 1e-15);
}
