// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/dis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace liepool {

namespace {

// The reference must be a computational-basis product state; returns its
// basis index.
std::uint64_t basis_index_of(const StateVector& ref) {
  std::uint64_t index = 0;
  bool found = false;
  for (std::uint64_t n = 0; n < ref.dim(); ++n) {
    if (std::abs(ref[n]) <= 1e-12) continue;
    if (found) {
      throw std::invalid_argument(
          "dis_classes requires a computational-basis reference state");
    }
    found = true;
    index = n;
  }
  if (!found || std::abs(std::abs(ref[index]) - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "dis_classes requires a normalized basis reference state");
  }
  return index;
}

}  // namespace

std::vector<GradientClass> dis_classes(const PauliSum& h,
                                       const StateVector& ref) {
  const int n = ref.n_qubits();
  if (h.n_qubits() != n) {
    throw std::invalid_argument("Hamiltonian qubit count differs from state");
  }
  if (n > kMaxDisQubits) {
    throw std::invalid_argument("dis_classes enumerates 4^N - 1 terms; N > " +
                                std::to_string(kMaxDisQubits) +
                                " not supported");
  }
  if (!is_hermitian(h)) {
    throw std::invalid_argument("dis_classes expects a Hermitian Hamiltonian");
  }

  const std::uint64_t r = basis_index_of(ref);
  const Complex ref_amp = ref[r];
  const StateVector h_ref = apply_pauli_sum(h, ref);

  struct Candidate {
    double magnitude;
    PauliKey key;
  };
  std::vector<Candidate> kept;

  //   grad = i<ref|[H, P]|ref> = -2 Im <H ref | P ref>,
  // and P|r> is the single basis state |r ^ x> with phase
  // i^{|x&z|} (-1)^{|z&r|}, so each candidate costs O(1).
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < dim; ++x) {
    const Complex hx = h_ref[r ^ x];
    if (hx == Complex{0.0}) {
      continue;  // <H ref | P ref> vanishes for every z in this column
    }
    for (std::uint64_t z = 0; z < dim; ++z) {
      if (x == 0 && z == 0) continue;
      Complex phase = ref_amp;
      switch (std::popcount(x & z) & 3) {
        case 0: break;
        case 1: phase = Complex{-phase.imag(), phase.real()}; break;
        case 2: phase = -phase; break;
        default: phase = Complex{phase.imag(), -phase.real()}; break;
      }
      if (std::popcount(z & r) & 1) phase = -phase;
      const double grad = -2.0 * std::imag(std::conj(hx) * phase);
      if (std::abs(grad) > kGradEps) {
        kept.push_back({std::abs(grad), PauliKey{x, z}});
      }
    }
  }

  std::sort(kept.begin(), kept.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
              return a.key < b.key;
            });

  std::vector<GradientClass> classes;
  for (const Candidate& c : kept) {
    if (classes.empty() ||
        classes.back().magnitude - c.magnitude > kGradEps) {
      GradientClass g;
      g.representative = PauliTerm{n, c.key.x, c.key.z, 1.0};
      g.magnitude = c.magnitude;
      classes.push_back(std::move(g));
    }
    classes.back().members.push_back(PauliTerm{n, c.key.x, c.key.z, 1.0});
  }
  return classes;
}

}  // namespace liepool
