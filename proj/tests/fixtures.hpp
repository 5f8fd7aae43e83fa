// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace fixtures {

inline liepool::PauliKey random_key(std::mt19937_64& rng, int n_qubits) {
  const std::uint64_t mask = (std::uint64_t{1} << n_qubits) - 1;
  return {rng() & mask, rng() & mask};
}

inline double random_coeff(std::mt19937_64& rng) {
  // Uniform in [-1, 1), deterministic across standard libraries.
  return -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Random Hermitian sum: real coefficients on random products.
inline liepool::PauliSum random_hermitian(std::mt19937_64& rng, int n_qubits,
                                          int n_terms) {
  liepool::PauliSum s(n_qubits);
  for (int t = 0; t < n_terms; ++t) {
    s.add(random_key(rng, n_qubits), liepool::Complex{random_coeff(rng), 0.0});
  }
  s.canonicalize();
  return s;
}

/// Random anti-Hermitian sum: imaginary coefficients on random products.
inline liepool::PauliSum random_antihermitian(std::mt19937_64& rng,
                                              int n_qubits, int n_terms) {
  liepool::PauliSum s(n_qubits);
  for (int t = 0; t < n_terms; ++t) {
    s.add(random_key(rng, n_qubits), liepool::Complex{0.0, random_coeff(rng)});
  }
  s.canonicalize();
  return s;
}

/// Random normalized dense state.
inline liepool::StateVector random_state(std::mt19937_64& rng, int n_qubits) {
  liepool::StateVector psi(n_qubits);
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    psi[i] = liepool::Complex{random_coeff(rng), random_coeff(rng)};
  }
  psi.normalize();
  return psi;
}

/// Random generic complex sum.
inline liepool::PauliSum random_sum(std::mt19937_64& rng, int n_qubits,
                                    int n_terms) {
  liepool::PauliSum s(n_qubits);
  for (int t = 0; t < n_terms; ++t) {
    s.add(random_key(rng, n_qubits),
          liepool::Complex{random_coeff(rng), random_coeff(rng)});
  }
  s.canonicalize();
  return s;
}

}  // namespace fixtures
