// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "liepool/fermion.hpp"
#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace liepool::model {

/*
 * Two electrons in four spin-orbitals: occupied (i, ibar) = modes (0, 1),
 * virtual (a, abar) = modes (2, 3) under the interleaved layout.  All
 * operators are 4-qubit JW images; states use amplitude index bit j = mode j.
 *
 * The two-electron sector is spanned by the determinants
 *   |i ibar> = index 3, |a ibar> = index 6, |i abar> = index 9,
 *   |a abar> = index 12.
 */
struct TwoElectron {
  SpinOrbitalLayout layout{2};

  PauliSum kappa_single_alpha;  // kappa_i^a
  PauliSum kappa_single_beta;   // kappa_ibar^abar
  PauliSum kappa_double;        // kappa_{i ibar}^{a abar}
  PauliSum kappa_cross;         // kappa_{i abar}^{a ibar}

  PauliSum n_diff_alpha;  // n_a - n_i
  PauliSum n_diff_beta;   // n_abar - n_ibar

  // Symmetry-adapted set and its center element.
  PauliSum a1, a2, a3, a4, a_center;

  static TwoElectron build();

  /// Closure generators in display order: {kappa_double, kappa_ibar^abar,
  /// kappa_i^a}.
  std::vector<PauliSum> generators() const;

  /// The two su(2) blocks of the 8-dimensional closure.
  std::vector<PauliSum> algebra1() const;
  std::vector<PauliSum> algebra2() const;

  /// The displayed 2-element center.
  std::vector<PauliSum> center_displayed() const;

  /// su(2)-normalized adapted block {A2, A3/2, A4/2}.
  std::vector<PauliSum> adapted_su2() const;

  StateVector ref() const;     // |i ibar>
  StateVector target() const;  // (|a ibar> + |i abar>)/sqrt(2)

  /// Basis indices of the two-electron singlet-problem sector.
  std::vector<std::uint64_t> sector() const { return {3, 6, 9, 12}; }
};

}  // namespace liepool::model
