// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "liepool/pauli.hpp"

namespace liepool {

/// [basis_i, basis_j] = sum_k value * basis_k contributions, stored sparse.
struct StructureTriple {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
};

/*
 * Ordered anti-Hermitian basis of a commutator-closed operator space.
 *
 * Basis elements are unit coordinate-norm PauliSums whose real-linear span is
 * closed under commutation to <= kSpanEps residual; structure holds the
 * antisymmetric constants solved over that basis, and provenance records how
 * each element arose ("generator[2]", "[b0,b1]", "center[0]", ...).
 */
struct Subalgebra {
  int n_qubits = 1;
  std::vector<PauliSum> basis;
  std::vector<StructureTriple> structure;
  std::vector<std::string> provenance;

  std::size_t dim() const { return basis.size(); }
};

/// Thrown when a closure would exceed its dimension cap (exponential growth
/// must be loud, never silently truncated).
class dimension_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankResult {
  bool independent = false;
  PauliSum residual;
};

/// 4^N - 1 (the full traceless algebra), saturating for large N.
std::size_t default_max_dim(int n_qubits);

/*
 * Breadth-first commutator closure: generators are normalized and admitted in
 * order, then pairwise commutators are processed FIFO, appending each
 * normalized commutator that extends the rank until no pair is left.  Throws
 * dimension_cap_error when an admission would exceed max_dim (0 selects
 * default_max_dim) and std::invalid_argument for non-anti-Hermitian input.
 */
Subalgebra close(const std::vector<PauliSum>& generators,
                 std::size_t max_dim = 0);

/// Project candidate onto the real span of basis (coordinates = imaginary
/// parts of Pauli coefficients); independent iff the residual norm exceeds
/// kSpanEps.
RankResult rank_extend(const std::vector<PauliSum>& basis,
                       const PauliSum& candidate);

/// Least-squares solve of every pairwise commutator over the basis; throws
/// std::runtime_error if any residual exceeds kSpanEps (non-closed input).
std::vector<StructureTriple> structure_constants(const Subalgebra& s);

/// Nullspace of the adjoint action: elements commuting with the whole
/// algebra to <= kSpanEps.  The result is verified abelian.
Subalgebra center(const Subalgebra& s);

/// Maximal subspace of span(s) commuting with every (Hermitian) symmetry
/// operator, returned with verified closure.  May be empty.
Subalgebra symmetry_adapt(const Subalgebra& s,
                          const std::vector<PauliSum>& symmetries);

/*
 * Subalgebra spanned by K pairwise-anticommuting unit Pauli products:
 * basis = {i P_1, ..., i P_K} followed by the products P_j P_k (j < k, in
 * lexicographic order), dimension K(K+1)/2.  Products of anticommuting
 * Hermitian products carry a +-i phase, so every element is anti-Hermitian
 * as stored.  Throws if some pair commutes or a coefficient is not +-1.
 */
Subalgebra anticommuting_subalgebra(const std::vector<PauliTerm>& paulis);

/*
 * Check the so(K+1) relations
 *   [S_ab, S_cd] = delta_bc S_ad + delta_ad S_bc - delta_ac S_bd - delta_bd S_ac
 * against s under the canonical index map of anticommuting_subalgebra:
 * S_0j = -i P_j / 2 = -basis[j-1]/2 and S_jk = P_j P_k / 2 (j < k).
 * Returns false when the dimension or any relation does not match.
 */
bool verify_so_relations(const Subalgebra& s, int n_anticommuting);

}  // namespace liepool
