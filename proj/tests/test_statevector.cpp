// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"
#include "oracle.hpp"

using liepool::Complex;
using liepool::PauliSum;
using liepool::PauliTerm;
using liepool::StateVector;

namespace {

constexpr double kPi = std::numbers::pi;

PauliTerm word(std::string_view w, Complex c = 1.0) {
  return PauliTerm::from_string(w, c);
}

double dense_distance(const StateVector& a, const Eigen::VectorXcd& b) {
  return (oracle::dense_state(a) - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("basis states and bitstrings address qubit j at bit j") {
  const StateVector s = StateVector::basis_state(2, 2);
  CHECK(s[0] == Complex{0.0});
  CHECK(s[2] == Complex{1.0});
  CHECK(s.dim() == 4);
  CHECK(s.norm() == 1.0);

  // Character j of the bitstring is the value of qubit j.
  CHECK(StateVector::from_bitstring("01")[2] == Complex{1.0});
  CHECK(StateVector::from_bitstring("10")[1] == Complex{1.0});
  CHECK(StateVector::from_bitstring("1100")[3] == Complex{1.0});

  CHECK_THROWS_AS(StateVector::basis_state(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::from_bitstring("012"), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(liepool::kMaxSimQubits + 1),
                  std::invalid_argument);
}

TEST_CASE("inner products and normalization") {
  StateVector a(1);
  a[0] = Complex{3.0, 0.0};
  a[1] = Complex{0.0, 4.0};
  CHECK(a.norm() == Catch::Approx(5.0).epsilon(1e-15));
  a.normalize();
  CHECK(a.norm() == Catch::Approx(1.0).epsilon(1e-15));

  const StateVector z0 = StateVector::basis_state(1, 0);
  const StateVector z1 = StateVector::basis_state(1, 1);
  CHECK(z0.inner(z1) == Complex{0.0});
  // inner is <this|other>: conjugate-linear in this.
  CHECK(a.inner(z1).imag() == Catch::Approx(-0.8).epsilon(1e-12));

  StateVector zero(1);
  CHECK_THROWS_AS(zero.normalize(), std::runtime_error);
  CHECK_THROWS_AS(z0.inner(StateVector(2)), std::invalid_argument);
}

TEST_CASE("apply_pauli_sum matches the dense oracle") {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const PauliSum op = fixtures::random_sum(rng, n, 6);
    const StateVector psi = fixtures::random_state(rng, n);
    const StateVector got = liepool::apply_pauli_sum(op, psi);
    const Eigen::VectorXcd want = oracle::dense(op) * oracle::dense_state(psi);
    CHECK(dense_distance(got, want) < 1e-13);
  }
  CHECK_THROWS_AS(
      liepool::apply_pauli_sum(PauliSum(2), StateVector::basis_state(3, 0)),
      std::invalid_argument);
}

TEST_CASE("apply_exp_pauli closed-form rotations") {
  const StateVector zero = StateVector::basis_state(1, 0);

  SECTION("tau = 0 is the identity") {
    std::mt19937_64 rng(79);
    const StateVector psi = fixtures::random_state(rng, 2);
    const StateVector out = liepool::apply_exp_pauli(0.0, word("XY"), psi);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) CHECK(out[i] == psi[i]);
  }

  SECTION("tau = pi/2 about x maps |0> to i|1>") {
    const StateVector out = liepool::apply_exp_pauli(kPi / 2, word("X"), zero);
    CHECK(std::abs(out[0]) < 1e-15);
    CHECK(std::abs(out[1] - Complex{0.0, 1.0}) < 1e-15);
  }

  SECTION("tau = pi is a global minus sign") {
    std::mt19937_64 rng(83);
    const StateVector psi = fixtures::random_state(rng, 3);
    const StateVector out = liepool::apply_exp_pauli(kPi, word("ZXY"), psi);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) {
      CHECK(std::abs(out[i] + psi[i]) < 1e-15);
    }
  }

  SECTION("agrees with the dense exponential and preserves norm") {
    std::mt19937_64 rng(89);
    for (int rep = 0; rep < 10; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const liepool::PauliKey k = fixtures::random_key(rng, n);
      const PauliTerm p = PauliTerm::from_masks(n, k.x, k.z);
      const double tau = 3.0 * fixtures::random_coeff(rng);
      const StateVector psi = fixtures::random_state(rng, n);
      const StateVector got = liepool::apply_exp_pauli(tau, p, psi);
      const Eigen::MatrixXcd u =
          oracle::expm(Complex{0.0, tau} * oracle::dense_term(n, k));
      CHECK(dense_distance(got, u * oracle::dense_state(psi)) < 1e-12);
      CHECK(got.norm() == Catch::Approx(1.0).margin(1e-10));
    }
  }

  SECTION("rejects non-unit coefficients") {
    CHECK_THROWS_AS(
        liepool::apply_exp_pauli(0.3, word("X", Complex{2.0, 0.0}), zero),
        std::invalid_argument);
    CHECK_THROWS_AS(
        liepool::apply_exp_pauli(0.3, word("X", Complex{0.0, 1.0}), zero),
        std::invalid_argument);
    // coeff -1 is fine: it folds into the angle.
    const StateVector plus = liepool::apply_exp_pauli(
        0.4, word("X", Complex{-1.0, 0.0}), zero);
    const StateVector minus = liepool::apply_exp_pauli(-0.4, word("X"), zero);
    for (std::uint64_t i = 0; i < 2; ++i) {
      CHECK(std::abs(plus[i] - minus[i]) < 1e-15);
    }
  }
}

TEST_CASE("apply_exp_sum matches dense matrix exponentials") {
  std::mt19937_64 rng(97);

  SECTION("empty sum is the identity") {
    const StateVector psi = fixtures::random_state(rng, 2);
    const StateVector out = liepool::apply_exp_sum(PauliSum(2), psi);
    for (std::uint64_t i = 0; i < psi.dim(); ++i) CHECK(out[i] == psi[i]);
  }

  SECTION("single-term sums agree with the closed-form rotation") {
    for (int rep = 0; rep < 10; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const liepool::PauliKey k = fixtures::random_key(rng, n);
      const double tau = 2.0 * fixtures::random_coeff(rng);
      PauliSum a(n);
      a.add(k, Complex{0.0, tau});
      const StateVector psi = fixtures::random_state(rng, n);
      const StateVector via_sum = liepool::apply_exp_sum(a, psi);
      const StateVector via_pauli =
          liepool::apply_exp_pauli(tau, PauliTerm::from_masks(n, k.x, k.z),
                                   psi);
      for (std::uint64_t i = 0; i < psi.dim(); ++i) {
        CHECK(std::abs(via_sum[i] - via_pauli[i]) < 1e-12);
      }
    }
  }

  SECTION("random anti-Hermitian generators, including large norms") {
    for (int rep = 0; rep < 12; ++rep) {
      const int n = 1 + static_cast<int>(rng() % 5);
      PauliSum a = fixtures::random_antihermitian(rng, n, 6);
      if (rep % 3 == 2) a *= Complex{20.0, 0.0};  // force many slices
      const StateVector psi = fixtures::random_state(rng, n);
      const StateVector got = liepool::apply_exp_sum(a, psi);
      const Eigen::VectorXcd want =
          oracle::expm(oracle::dense(a)) * oracle::dense_state(psi);
      CHECK(dense_distance(got, want) < 1e-12);
      CHECK(got.norm() == Catch::Approx(1.0).margin(1e-10));
    }
  }

  SECTION("rejects Hermitian input") {
    CHECK_THROWS_AS(
        liepool::apply_exp_sum(
            PauliSum::from_term(word("X")), StateVector::basis_state(1, 0)),
        std::invalid_argument);
  }
}

TEST_CASE("expectation values") {
  const StateVector zero = StateVector::basis_state(1, 0);
  const StateVector one = StateVector::basis_state(1, 1);

  CHECK(liepool::expectation(PauliSum::from_term(word("Z")), zero) == 1.0);
  CHECK(liepool::expectation(PauliSum::from_term(word("Z")), one) == -1.0);
  CHECK(liepool::expectation(PauliSum::from_term(word("X")), zero) == 0.0);
  CHECK(liepool::expectation(PauliSum::identity(1, Complex{2.5, 0.0}), zero) ==
        2.5);

  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliSum h = fixtures::random_hermitian(rng, n, 6);
    const StateVector psi = fixtures::random_state(rng, n);
    const Eigen::VectorXcd v = oracle::dense_state(psi);
    const double want = (v.adjoint() * oracle::dense(h) * v)(0, 0).real();
    CHECK(liepool::expectation(h, psi) ==
          Catch::Approx(want).margin(1e-12));
  }

  // A non-Hermitian operator leaves an imaginary residue.
  StateVector plus(1);
  plus[0] = plus[1] = Complex{std::sqrt(0.5), 0.0};
  CHECK_THROWS_AS(
      liepool::expectation(PauliSum::from_term(word("X", Complex{0.0, 1.0})),
                           plus),
      std::invalid_argument);
}

TEST_CASE("gradient equals the commutator expectation, pinned by oracle") {
  const StateVector zero = StateVector::basis_state(1, 0);
  const PauliSum hz = PauliSum::from_term(word("Z"));
  const PauliSum hx = PauliSum::from_term(word("X"));

  // Commuting pair: exactly zero.
  CHECK(liepool::gradient(hz, word("Z"), zero) == 0.0);

  // <z> is stationary under a y-rotation of |0>; <x> is not.
  CHECK(liepool::gradient(hz, word("Y"), zero) ==
        Catch::Approx(0.0).margin(1e-12));
  CHECK(oracle::fd_gradient(hz, word("Y"), zero) ==
        Catch::Approx(0.0).margin(1e-6));
  CHECK(liepool::gradient(hx, word("Y"), zero) ==
        Catch::Approx(-2.0).margin(1e-12));
  CHECK(oracle::fd_gradient(hx, word("Y"), zero) ==
        Catch::Approx(-2.0).margin(1e-6));

  // Diagonal against diagonal vanishes on any state.
  std::mt19937_64 rng(103);
  const StateVector psi = fixtures::random_state(rng, 2);
  PauliSum diag(2);
  diag.add(word("ZI", Complex{0.7, 0.0}));
  diag.add(word("ZZ", Complex{-0.3, 0.0}));
  CHECK(liepool::gradient(diag, word("IZ"), psi) ==
        Catch::Approx(0.0).margin(1e-12));

  CHECK_THROWS_AS(
      liepool::gradient(PauliSum::from_term(word("X", Complex{0.0, 1.0})),
                        word("Y"), zero),
      std::invalid_argument);
  CHECK_THROWS_AS(
      liepool::gradient(hx, word("Y", Complex{2.0, 0.0}), zero),
      std::invalid_argument);
}

TEST_CASE("gradient agrees with central finite differences") {
  std::mt19937_64 rng(107);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const PauliSum h = fixtures::random_hermitian(rng, n, 5);
    const liepool::PauliKey k = fixtures::random_key(rng, n);
    const PauliTerm p = PauliTerm::from_masks(n, k.x, k.z);
    const StateVector ref = fixtures::random_state(rng, n);
    const double got = liepool::gradient(h, p, ref);
    const double fd = oracle::fd_gradient(h, p, ref);
    CHECK(std::abs(got - fd) <= 1e-6);
  }
}

TEST_CASE("gradient is the derivative of the rotated expectation") {
  std::mt19937_64 rng(109);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const PauliSum h = fixtures::random_hermitian(rng, n, 4);
    const liepool::PauliKey k = fixtures::random_key(rng, n);
    const PauliTerm p = PauliTerm::from_masks(n, k.x, k.z);
    const StateVector ref = fixtures::random_state(rng, n);
    const double step = 1e-5;
    const double ep =
        liepool::expectation(h, liepool::apply_exp_pauli(step, p, ref));
    const double em =
        liepool::expectation(h, liepool::apply_exp_pauli(-step, p, ref));
    CHECK(std::abs(liepool::gradient(h, p, ref) - (ep - em) / (2 * step)) <=
          1e-6);
  }
}

TEST_CASE("fidelity is the overlap magnitude") {
  std::mt19937_64 rng(113);
  const StateVector psi = fixtures::random_state(rng, 3);
  CHECK(liepool::fidelity(psi, psi) == Catch::Approx(1.0).epsilon(1e-12));

  StateVector phased = psi;
  phased *= Complex{std::cos(0.8), std::sin(0.8)};
  CHECK(liepool::fidelity(psi, phased) == Catch::Approx(1.0).epsilon(1e-12));

  CHECK(liepool::fidelity(StateVector::basis_state(2, 1),
                          StateVector::basis_state(2, 2)) == 0.0);
  CHECK_THROWS_AS(
      liepool::fidelity(StateVector(1), StateVector(2)), std::invalid_argument);
}
