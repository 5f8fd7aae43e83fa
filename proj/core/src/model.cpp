// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/model.hpp"

#include <cmath>

namespace liepool::model {

namespace {

constexpr int kModes = 4;

// JW image of n_p - n_q = (z_q - z_p)/2.
PauliSum number_difference(int p, int q) {
  PauliSum out(kModes);
  out.add(PauliKey{0, std::uint64_t{1} << q}, Complex{0.5, 0.0});
  out.add(PauliKey{0, std::uint64_t{1} << p}, Complex{-0.5, 0.0});
  return out;
}

}  // namespace

TwoElectron TwoElectron::build() {
  TwoElectron m;
  // Modes: i = 0, ibar = 1, a = 2, abar = 3.
  m.kappa_single_alpha = jordan_wigner(make_kappa({0}, {2}, kModes));
  m.kappa_single_beta = jordan_wigner(make_kappa({1}, {3}, kModes));
  m.kappa_double = jordan_wigner(make_kappa({1, 0}, {2, 3}, kModes));
  m.kappa_cross = jordan_wigner(make_kappa({3, 0}, {2, 1}, kModes));

  m.n_diff_alpha = number_difference(2, 0);  // n_a - n_i
  m.n_diff_beta = number_difference(3, 1);   // n_abar - n_ibar

  const PauliSum nda2 = m.n_diff_alpha * m.n_diff_alpha;
  const PauliSum ndb2 = m.n_diff_beta * m.n_diff_beta;
  const PauliSum one = PauliSum::identity(kModes);

  m.a1 = m.kappa_single_alpha + m.kappa_single_beta;
  m.a2 = m.kappa_double;
  m.a3 = m.n_diff_alpha * m.kappa_single_beta +
         m.n_diff_beta * m.kappa_single_alpha;
  m.a4 = nda2 * m.kappa_single_beta + ndb2 * m.kappa_single_alpha;
  m.a_center = (one - nda2) * m.kappa_single_beta +
               (one - ndb2) * m.kappa_single_alpha;
  return m;
}

std::vector<PauliSum> TwoElectron::generators() const {
  return {kappa_double, kappa_single_beta, kappa_single_alpha};
}

std::vector<PauliSum> TwoElectron::algebra1() const {
  const PauliSum nda2 = n_diff_alpha * n_diff_alpha;
  return {n_diff_beta * kappa_single_alpha, kappa_double + kappa_cross,
          nda2 * kappa_single_beta};
}

std::vector<PauliSum> TwoElectron::algebra2() const {
  const PauliSum ndb2 = n_diff_beta * n_diff_beta;
  return {n_diff_alpha * kappa_single_beta, kappa_double - kappa_cross,
          ndb2 * kappa_single_alpha};
}

std::vector<PauliSum> TwoElectron::center_displayed() const {
  const PauliSum one = PauliSum::identity(kModes);
  const PauliSum nda2 = n_diff_alpha * n_diff_alpha;
  const PauliSum ndb2 = n_diff_beta * n_diff_beta;
  return {(one - nda2) * kappa_single_beta, (one - ndb2) * kappa_single_alpha};
}

std::vector<PauliSum> TwoElectron::adapted_su2() const {
  return {a2, Complex{0.5, 0.0} * a3, Complex{0.5, 0.0} * a4};
}

StateVector TwoElectron::ref() const { return StateVector::basis_state(4, 3); }

StateVector TwoElectron::target() const {
  // Basis indices order creators by ascending mode, so the determinant
  // |a ibar> = a_a^+ a_ibar^+ |vac> is -|0110> while |i abar> is +|1001>.
  StateVector t(4);
  const double amp = 1.0 / std::sqrt(2.0);
  t[6] = -amp;  // |a ibar>
  t[9] = amp;   // |i abar>
  return t;
}

}  // namespace liepool::model
