// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace liepool {

/// Exhaustive DIS enumeration walks all 4^N - 1 products; capped here.
inline constexpr int kMaxDisQubits = 8;

/// One gradient-magnitude equivalence class of the direct interaction set.
struct GradientClass {
  PauliTerm representative;
  double magnitude = 0.0;
  std::vector<PauliTerm> members;
};

/*
 * Direct interaction set of h at a computational-basis reference: every
 * Pauli product with |i<ref|[H, P]|ref>| > kGradEps, grouped into classes of
 * equal magnitude (within kGradEps) and sorted by descending magnitude.
 * Ties inside a class are ordered by Pauli key, so the representative is the
 * lexicographically first member.  Cost is O(1) per candidate after one
 * H|ref> evaluation.
 */
std::vector<GradientClass> dis_classes(const PauliSum& h,
                                       const StateVector& ref);

}  // namespace liepool
