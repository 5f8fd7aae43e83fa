// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace liepool {

inline constexpr int kMaxOptimizeAmplitudes = 12;
inline constexpr int kMaxOrderScanFactors = 8;

/// One exponent-product factor e^{tau * generator}.
struct AnsatzFactor {
  PauliSum generator;  // anti-Hermitian
  double amplitude = 0.0;
};

/*
 * Apply the factor product to ref, rightmost factor first, i.e. the list
 * [f0, f1, f2] produces e^{t0 G0} e^{t1 G1} e^{t2 G2} |ref> and matches the
 * left-to-right reading order of a displayed operator product.  Single-term
 * generators take the closed-form rotation path.
 */
StateVector build_ansatz(const std::vector<AnsatzFactor>& factors,
                         const StateVector& ref);

/// What optimize() minimizes: 1 - fidelity against a target state, or the
/// energy expectation of a Hermitian Hamiltonian.
class Objective {
 public:
  enum class Kind { MaxFidelity, MinEnergy };

  static Objective max_fidelity(StateVector target);
  static Objective min_energy(PauliSum hamiltonian);

  Kind kind() const { return kind_; }
  const StateVector& target() const { return target_; }
  const PauliSum& hamiltonian() const { return hamiltonian_; }

  /// Internal loss to minimize (1 - F, or E).
  double loss(const StateVector& psi) const;

  /// Reported value for a given loss (F = 1 - loss, or E = loss).
  double reported(double loss) const;

 private:
  Kind kind_ = Kind::MaxFidelity;
  StateVector target_{1};
  PauliSum hamiltonian_{1};
};

struct OptimizeOptions {
  /// One local search per seed, in order; empty selects seeds 0..31.
  std::vector<std::uint64_t> seeds;
  /// Stop scanning seeds once the loss falls below this (only used for
  /// fidelity objectives, whose loss is bounded below by zero).
  double early_exit_loss = 1e-12;
};

struct OptimizeResult {
  std::vector<double> amplitudes;
  double loss = 0.0;
  double objective = 0.0;  // fidelity or energy, per the Objective kind
  std::uint64_t best_seed = 0;
  long evaluations = 0;
};

/*
 * Deterministic multi-start optimization: for each seed, draw a start
 * uniformly from the amplitude box ([-pi, pi) per amplitude, widened to
 * [-2pi, 2pi) when any generator has more than one term), run Nelder-Mead
 * with a polish restart, and keep the best local minimum.  Throws for more
 * than kMaxOptimizeAmplitudes factors.
 */
OptimizeResult optimize(const std::vector<AnsatzFactor>& factors,
                        const StateVector& ref, const Objective& objective,
                        const OptimizeOptions& opts = {});

struct PermutationResult {
  std::vector<int> order;  // factor indices, application order as listed
  OptimizeResult result;
};

struct OrderScanResult {
  std::vector<PermutationResult> permutations;  // lexicographic order
  double best_objective = 0.0;
  double worst_objective = 0.0;
  double spread = 0.0;                // max - min of reported objectives
  bool order_invariant = false;       // spread <= 1e-8
};

/// optimize() for every permutation of the factor list (factorial scan,
/// hence the kMaxOrderScanFactors cap).  Permutations are processed in
/// parallel and merged by index, so the report is thread-count independent.
OrderScanResult orderscan(const std::vector<AnsatzFactor>& factors,
                          const StateVector& ref, const Objective& objective,
                          const OptimizeOptions& opts = {});

/// One n-tuple excitation/de-excitation amplitude t * kappa(occupied -> virtuals).
struct UccsdExcitation {
  std::vector<int> occupied;
  std::vector<int> virtuals;
  double t = 0.0;
};

/*
 * K-step Trotterized UCCSD: each step applies all doubles then all singles
 * factors e^{t kappa / K} (the displayed step reads singles-product times
 * doubles-product, and the rightmost factor acts first).  K = 1 is the
 * disentangled product ansatz.
 */
StateVector trotter_uccsd(const std::vector<UccsdExcitation>& singles,
                          const std::vector<UccsdExcitation>& doubles,
                          int k_steps, const StateVector& ref);

/// Exact exp of the summed anti-Hermitian generator (the K -> infinity
/// limit), used as the Trotter error reference.
StateVector exact_uccsd(const std::vector<UccsdExcitation>& singles,
                        const std::vector<UccsdExcitation>& doubles,
                        const StateVector& ref);

}  // namespace liepool
