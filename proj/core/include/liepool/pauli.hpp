// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liepool {

using Complex = std::complex<double>;

/// Coefficients at or below this magnitude are treated as zero when a sum is
/// canonicalized.
inline constexpr double kCoeffEps = 1e-12;

/// Residual threshold for rank / span decisions in the Lie-algebra engine.
inline constexpr double kSpanEps = 1e-9;

/// Gradient-magnitude threshold used when grouping pool candidates.
inline constexpr double kGradEps = 1e-8;

/// Largest qubit count representable by the 64-bit mask pair.
inline constexpr int kMaxQubits = 64;

/// (x_mask, z_mask) pair naming a Pauli product.  Bit j of each mask refers
/// to qubit j.  Ordering is lexicographic on (x, z) as unsigned integers and
/// fixes the deterministic term order of every PauliSum.
struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend constexpr auto operator<=>(const PauliKey&, const PauliKey&) = default;
};

/*
 * A single Pauli product with a complex coefficient.
 *
 * The operator named by (x, z) is the Hermitian product
 *
 *     W(x, z) = i^{|x & z|} X^x Z^z,
 *
 * i.e. a qubit with both the x and z bit set carries Y (since i X Z = Y).
 * Coefficients multiply by exact powers of i, so products and commutators of
 * terms with exactly representable coefficients incur no rounding at all.
 */
struct PauliTerm {
  int n_qubits = 1;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  Complex coeff = 1.0;

  PauliKey key() const { return {x_mask, z_mask}; }
  bool is_identity_op() const { return x_mask == 0 && z_mask == 0; }

  /// Identity with coefficient c.
  static PauliTerm identity(int n_qubits, Complex c = 1.0);

  /// Single-qubit factor: axis is one of 'X', 'Y', 'Z'.
  static PauliTerm single(int n_qubits, int qubit, char axis, Complex c = 1.0);

  static PauliTerm from_masks(int n_qubits, std::uint64_t x, std::uint64_t z,
                              Complex c = 1.0);

  /// Parse an IXYZ word (either case), character j naming the factor on
  /// qubit j.
  static PauliTerm from_string(std::string_view word, Complex c = 1.0);

  /// IXYZ word of length n_qubits, character j naming the factor on qubit j.
  std::string pauli_string() const;
};

/// Exact product of two Pauli terms (coefficients included).
PauliTerm pauli_mul(const PauliTerm& a, const PauliTerm& b);

/// True when the two products commute; unit-coefficient Pauli products either
/// commute or anticommute, decided by the symplectic parity
/// |x_a & z_b| + |z_a & x_b| mod 2.
bool commutes(const PauliTerm& a, const PauliTerm& b);

/*
 * Sparse real-linear combination of Pauli terms over a fixed qubit count.
 *
 * Terms live in a map keyed by (x_mask, z_mask); iteration order is therefore
 * deterministic.  add() accumulates without pruning so that explicitly
 * constructed near-cancellations survive until canonicalize() is called;
 * every arithmetic operator returns a canonicalized result.
 */
class PauliSum {
 public:
  PauliSum() : n_qubits_(1) {}
  explicit PauliSum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const std::map<PauliKey, Complex>& terms() const { return terms_; }

  /// Coefficient of a key, zero if absent.
  Complex coeff(PauliKey k) const;

  /// Accumulate one term (merging by key, no pruning).
  void add(const PauliTerm& t);
  void add(PauliKey k, Complex c);

  /// Drop terms with |coeff| <= eps.
  void canonicalize(double eps = kCoeffEps);
  PauliSum canonicalized(double eps = kCoeffEps) const;

  /// sqrt(sum of |coeff|^2): the Euclidean norm of the coefficient vector.
  double coord_norm() const;

  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b);
  friend PauliSum operator-(PauliSum a, const PauliSum& b);
  friend PauliSum operator*(Complex scale, PauliSum a);
  friend PauliSum operator*(PauliSum a, Complex scale);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  static PauliSum from_term(const PauliTerm& t);
  static PauliSum identity(int n_qubits, Complex c = 1.0);

 private:
  int n_qubits_;
  std::map<PauliKey, Complex> terms_;
};

/// [a, b] = ab - ba.  Only anticommuting term pairs contribute (each as
/// twice their product), so the result is exact for exact inputs.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// {a, b} = ab + ba.
PauliSum anticommutator(const PauliSum& a, const PauliSum& b);

/// All coefficients purely imaginary within eps (empty sums qualify).
bool is_antihermitian(const PauliSum& s, double eps = kCoeffEps);

/// All coefficients purely real within eps (empty sums qualify).
bool is_hermitian(const PauliSum& s, double eps = kCoeffEps);

/// coord_norm of (a - b) <= eps.
bool approx_equal(const PauliSum& a, const PauliSum& b, double eps = kCoeffEps);

// --- text format -----------------------------------------------------------
//
// One term per line: "<coeff> <IXYZ word>", coefficient written as a+bi with
// 17 significant digits (round-trip exact).  '#' starts a comment; blank
// lines are ignored by parse_pauli_sum and act as operator separators in
// parse_pauli_sum_list.

std::string format_complex(Complex c);
Complex parse_complex(std::string_view text);

std::string to_text(const PauliSum& s);
std::string term_to_text(const PauliTerm& t);

/// Parse one operator.  If expect_qubits > 0 every word must have exactly
/// that length, otherwise the length is taken from the first term.
/// Throws std::invalid_argument on malformed input.
PauliSum parse_pauli_sum(std::string_view text, int expect_qubits = 0);

/// Parse a blank-line-separated list of operators sharing one qubit count.
std::vector<PauliSum> parse_pauli_sum_list(std::string_view text,
                                           int expect_qubits = 0);

}  // namespace liepool
