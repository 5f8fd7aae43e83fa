// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liepool/pauli.hpp"

namespace liepool {

/// One ladder operator: a_mode or a_mode^dagger.
struct FermionOp {
  int mode = 0;
  bool dagger = false;

  friend constexpr auto operator<=>(const FermionOp&, const FermionOp&) =
      default;
};

/// coeff * (ordered product of ladder operators).  An empty string is the
/// identity.
struct FermionTerm {
  Complex coeff = 1.0;
  std::vector<FermionOp> ops;
};

/// Interleaved spin-orbital convention: mode 2p = (p, alpha),
/// mode 2p+1 = (p, beta).
struct SpinOrbitalLayout {
  int n_spatial = 1;

  int n_modes() const { return 2 * n_spatial; }
  int alpha(int p) const { return 2 * p; }
  int beta(int p) const { return 2 * p + 1; }
};

/*
 * Sparse second-quantized operator over a fixed number of spin-orbitals.
 *
 * Terms are stored as given; normal_ordered() rewrites to the canonical form
 * with creation operators left of annihilation operators, mode indices
 * descending inside each block and signs tracked through the fermionic
 * anticommutation relations.  Equality tests and text output go through the
 * canonical form.
 */
class FermionOperator {
 public:
  FermionOperator() : n_modes_(1) {}
  explicit FermionOperator(int n_modes);

  int n_modes() const { return n_modes_; }
  const std::vector<FermionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(Complex coeff, std::vector<FermionOp> ops);

  /// Canonical normal-ordered form; terms with |coeff| <= eps dropped and the
  /// remainder sorted deterministically.
  FermionOperator normal_ordered(double eps = kCoeffEps) const;

  FermionOperator adjoint() const;

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(Complex scale);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b);
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b);
  friend FermionOperator operator*(const FermionOperator& a,
                                   const FermionOperator& b);
  friend FermionOperator operator*(Complex scale, FermionOperator a);

 private:
  int n_modes_;
  std::vector<FermionTerm> terms_;
};

/// Normal forms agree within eps (coefficient-wise).
bool approx_equal(const FermionOperator& a, const FermionOperator& b,
                  double eps = kCoeffEps);

/// Jordan-Wigner image on n_modes qubits:
/// a_p -> (x_p + i y_p)/2 (x) z-string on modes < p, extended linearly and
/// multiplicatively.  The result is canonical.
PauliSum jordan_wigner(const FermionOperator& f);

/// Excitation string minus its adjoint:
/// make_kappa([i,j], [a,b]) = a_a^ a_b^ a_i a_j - adjoint (anti-Hermitian).
/// Lists must be non-empty, of equal length, in range, jointly disjoint.
FermionOperator make_kappa(const std::vector<int>& occupied,
                           const std::vector<int>& virtuals, int n_modes);

/// The two commuting 4-term reductions of the 8-term double
/// excitation/de-excitation image; requires i < j, a < b, all distinct.
std::pair<PauliSum, PauliSum> make_xi_pi(int i, int j, int a, int b,
                                         int n_qubits);

enum class SymmetryKind { Ne, Sz, Splus, Sminus, S2 };

/// JW image of the symmetry operator: N_e = sum_p n_p;
/// S_z = 1/2 sum_p (n_{p,alpha} - n_{p,beta}); S_+ = sum_p a^_{p,alpha} a_{p,beta};
/// S^2 = S_- S_+ + S_z (S_z + 1).
PauliSum symmetry_operator(SymmetryKind kind, const SpinOrbitalLayout& layout);

/// True iff op commutes with S_z, S_+ and S_- (the S = M = 0 case of the
/// spherical-tensor defining relations).
bool is_singlet_tensor(const PauliSum& op, const SpinOrbitalLayout& layout);

/*
 * Hermitian operator set a symmetry selection adapts against.  Ne and Sz map
 * to their own images; S2 (and S+/S-) expand to the spin components
 * {Sx, Sy, Sz}, because commuting with the quadratic Casimir alone is weaker
 * than the tensor condition: commutants of S^2 can keep non-singlet
 * combinations that commuting with every spin component rules out.
 */
std::vector<PauliSum> adaptation_operators(const std::vector<SymmetryKind>& kinds,
                                           const SpinOrbitalLayout& layout);

enum class SingletKind { SinglePair, PairedDouble, Seniority2Pair };

/// Displayed singlet combinations over spatial indices:
///   SinglePair {i,a}      -> kappa_i^a + kappa_ibar^abar
///   PairedDouble {i,a}    -> kappa_{i ibar}^{a abar}
///   Seniority2Pair {i,a,b}-> kappa_{i ibar}^{a bbar} + kappa_{i ibar}^{b abar}
FermionOperator build_singlet(SingletKind kind, const std::vector<int>& spatial,
                              const SpinOrbitalLayout& layout);

// --- text format -----------------------------------------------------------
//
// Header "modes: <M>" fixes the spin-orbital count (required, first
// non-comment line); optional "layout: <n_spatial>" overrides the default
// interleaved spatial count M/2.  Terms follow, one per line:
// "<coeff> <token>..." with tokens "p^" (creation), "p" (annihilation) and
// "id" (identity factor, for terms with no ladder operators).  Blank lines
// separate operators.

struct FermionFile {
  int n_modes = 0;
  SpinOrbitalLayout layout;
  std::vector<FermionOperator> operators;
};

FermionFile parse_fermion_file(std::string_view text);
std::string to_text(const FermionFile& file);

/// True when the first non-blank, non-comment line starts with "modes:".
bool looks_like_fermion_file(std::string_view text);

}  // namespace liepool
