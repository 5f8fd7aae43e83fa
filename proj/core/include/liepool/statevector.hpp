// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "liepool/pauli.hpp"

namespace liepool {

/// Largest register size accepted by dense state propagation.
inline constexpr int kMaxSimQubits = 14;

/*
 * Dense complex state over n qubits, amplitude index bit j = qubit j
 * (computational-basis index |n> with qubit 0 the least significant bit).
 */
class StateVector {
 public:
  explicit StateVector(int n_qubits);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  /// Character j of bits is the value of qubit j ('0' or '1').
  static StateVector from_bitstring(std::string_view bits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }

  Complex& operator[](std::uint64_t i) { return amps_[i]; }
  const Complex& operator[](std::uint64_t i) const { return amps_[i]; }

  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm() const;
  void normalize();

  /// <this|other>.
  Complex inner(const StateVector& other) const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator*=(Complex scale);

 private:
  int n_qubits_;
  std::vector<Complex> amps_;
};

/// op |psi>, applied term by term: W(x,z)|n> = i^{|x&z|} (-1)^{|z&n|} |n^x>.
StateVector apply_pauli_sum(const PauliSum& op, const StateVector& psi);

/// exp(i tau P) |psi> = cos(tau)|psi> + i sin(tau) P|psi> for a
/// unit-coefficient Pauli product P (P^2 = 1 makes the rotation closed-form).
StateVector apply_exp_pauli(double tau, const PauliTerm& p,
                            const StateVector& psi);

/// exp(A) |psi> for anti-Hermitian A, via a scaled Taylor series: A is split
/// into 2^s equal slices until the coefficient 1-norm of a slice drops below
/// 1/2, so the series converges past 1e-15 within the fixed term budget.
StateVector apply_exp_sum(const PauliSum& a, const StateVector& psi);

/// <psi|h|psi> for Hermitian h; throws if the imaginary residue exceeds 1e-10.
double expectation(const PauliSum& h, const StateVector& psi);

/// d/dtheta <ref| e^{-i theta P} H e^{i theta P} |ref> at theta = 0,
/// i.e. i<ref|[H, P]|ref>, for Hermitian H and unit-coefficient P.
double gradient(const PauliSum& h, const PauliTerm& p, const StateVector& ref);

/// |<a|b>|.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace liepool
