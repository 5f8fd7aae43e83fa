// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "liepool/fermion.hpp"
#include "liepool/parallel.hpp"

namespace liepool {

StateVector build_ansatz(const std::vector<AnsatzFactor>& factors,
                         const StateVector& ref) {
  StateVector state = ref;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const AnsatzFactor& f = *it;
    if (f.generator.n_qubits() != ref.n_qubits()) {
      throw std::invalid_argument("ansatz factor qubit count differs");
    }
    if (f.amplitude == 0.0 || f.generator.empty()) continue;
    if (f.generator.size() == 1) {
      // i tau P rotation: tau absorbs the (imaginary) coefficient.
      const auto& [key, coeff] = *f.generator.terms().begin();
      if (std::abs(coeff.real()) > kCoeffEps) {
        throw std::invalid_argument("ansatz generator must be anti-Hermitian");
      }
      const PauliTerm p{ref.n_qubits(), key.x, key.z, 1.0};
      state = apply_exp_pauli(f.amplitude * coeff.imag(), p, state);
    } else {
      state = apply_exp_sum(Complex{f.amplitude, 0.0} * f.generator, state);
    }
  }
  return state;
}

Objective Objective::max_fidelity(StateVector target) {
  Objective o;
  o.kind_ = Kind::MaxFidelity;
  o.target_ = std::move(target);
  return o;
}

Objective Objective::min_energy(PauliSum hamiltonian) {
  if (!is_hermitian(hamiltonian)) {
    throw std::invalid_argument("energy objective requires a Hermitian sum");
  }
  Objective o;
  o.kind_ = Kind::MinEnergy;
  o.hamiltonian_ = std::move(hamiltonian);
  return o;
}

double Objective::loss(const StateVector& psi) const {
  if (kind_ == Kind::MaxFidelity) return 1.0 - fidelity(target_, psi);
  return expectation(hamiltonian_, psi);
}

double Objective::reported(double loss) const {
  return kind_ == Kind::MaxFidelity ? 1.0 - loss : loss;
}

namespace {

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  long evaluations = 0;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) over a smooth periodic objective; no box constraints are
// enforced during descent.
template <typename F>
NelderMeadResult nelder_mead(const F& func, const std::vector<double>& x0,
                             double step, int max_iter) {
  const std::size_t d = x0.size();
  NelderMeadResult out;

  std::vector<std::vector<double>> pts(d + 1, x0);
  std::vector<double> fs(d + 1);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
  for (std::size_t i = 0; i <= d; ++i) {
    fs[i] = func(pts[i]);
    ++out.evaluations;
  }

  std::vector<std::size_t> order(d + 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    for (std::size_t i = 0; i <= d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const std::size_t best = order[0], worst = order[d];
    const std::size_t second = order[d - 1];

    if (fs[worst] - fs[best] <= 1e-13 * (1.0 + std::abs(fs[best]))) break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    const auto blend = [&](double alpha) {
      std::vector<double> p(d);
      for (std::size_t k = 0; k < d; ++k) {
        p[k] = centroid[k] + alpha * (pts[worst][k] - centroid[k]);
      }
      return p;
    };

    std::vector<double> refl = blend(-1.0);
    const double fr = func(refl);
    ++out.evaluations;
    if (fr < fs[order[0]]) {
      std::vector<double> exp_pt = blend(-2.0);
      const double fe = func(exp_pt);
      ++out.evaluations;
      if (fe < fr) {
        pts[worst] = std::move(exp_pt);
        fs[worst] = fe;
      } else {
        pts[worst] = std::move(refl);
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second]) {
      pts[worst] = std::move(refl);
      fs[worst] = fr;
      continue;
    }
    const bool outside = fr < fs[worst];
    std::vector<double> contr = blend(outside ? -0.5 : 0.5);
    const double fc = func(contr);
    ++out.evaluations;
    if (fc < std::min(fr, fs[worst])) {
      pts[worst] = std::move(contr);
      fs[worst] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= d; ++i) {  // shrink toward the best point
      const std::size_t idx = order[i];
      for (std::size_t k = 0; k < d; ++k) {
        pts[idx][k] = pts[best][k] + 0.5 * (pts[idx][k] - pts[best][k]);
      }
      fs[idx] = func(pts[idx]);
      ++out.evaluations;
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  out.x = pts[best];
  out.f = fs[best];
  return out;
}

// Uniform draw in [lo, hi) from raw 64-bit output; bit-identical across
// standard libraries, unlike std::uniform_real_distribution.
double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace

OptimizeResult optimize(const std::vector<AnsatzFactor>& factors,
                        const StateVector& ref, const Objective& objective,
                        const OptimizeOptions& opts) {
  const std::size_t d = factors.size();
  if (d > kMaxOptimizeAmplitudes) {
    throw std::invalid_argument("optimize supports at most " +
                                std::to_string(kMaxOptimizeAmplitudes) +
                                " amplitudes");
  }

  OptimizeResult out;
  if (d == 0) {
    out.loss = objective.loss(ref);
    out.objective = objective.reported(out.loss);
    out.evaluations = 1;
    return out;
  }

  bool multi_term = false;
  for (const AnsatzFactor& f : factors) {
    if (!is_antihermitian(f.generator)) {
      throw std::invalid_argument("ansatz generator must be anti-Hermitian");
    }
    multi_term = multi_term || f.generator.size() > 1;
  }
  // Single-Pauli exponents are 2*pi-periodic; sum generators are not, so the
  // start box widens to cover their longer periods.
  const double box = multi_term ? 2.0 * std::numbers::pi : std::numbers::pi;

  const auto eval = [&](const std::vector<double>& x) {
    std::vector<AnsatzFactor> trial = factors;
    for (std::size_t k = 0; k < d; ++k) trial[k].amplitude = x[k];
    return objective.loss(build_ansatz(trial, ref));
  };

  std::vector<std::uint64_t> seeds = opts.seeds;
  if (seeds.empty()) {
    seeds.resize(32);
    for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i;
  }

  const int iter_budget = 400 * static_cast<int>(d);
  bool have_best = false;
  for (const std::uint64_t seed : seeds) {
    std::mt19937_64 rng(seed);
    std::vector<double> x0(d);
    for (double& x : x0) x = uniform_in(rng, -box, box);

    NelderMeadResult run = nelder_mead(eval, x0, 0.6, iter_budget);
    NelderMeadResult polish = nelder_mead(eval, run.x, 0.05, iter_budget);
    out.evaluations += run.evaluations + polish.evaluations;
    if (polish.f < run.f) run = std::move(polish);

    if (!have_best || run.f < out.loss) {
      have_best = true;
      out.loss = run.f;
      out.amplitudes = run.x;
      out.best_seed = seed;
    }
    if (objective.kind() == Objective::Kind::MaxFidelity &&
        out.loss <= opts.early_exit_loss) {
      break;  // fidelity loss is bounded below by zero: cannot improve
    }
  }

  out.objective = objective.reported(out.loss);
  return out;
}

OrderScanResult orderscan(const std::vector<AnsatzFactor>& factors,
                          const StateVector& ref, const Objective& objective,
                          const OptimizeOptions& opts) {
  const std::size_t d = factors.size();
  if (d > kMaxOrderScanFactors) {
    throw std::invalid_argument("orderscan supports at most " +
                                std::to_string(kMaxOrderScanFactors) +
                                " factors");
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = static_cast<int>(i);
  do {
    perms.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));

  OrderScanResult scan;
  scan.permutations.resize(perms.size());
  parallel_for(perms.size(), [&](std::size_t p) {
    std::vector<AnsatzFactor> arranged;
    arranged.reserve(d);
    for (int idx : perms[p]) arranged.push_back(factors[idx]);
    scan.permutations[p] =
        PermutationResult{perms[p], optimize(arranged, ref, objective, opts)};
  });

  scan.best_objective = scan.worst_objective =
      scan.permutations.empty() ? 0.0 : scan.permutations[0].result.objective;
  for (const PermutationResult& r : scan.permutations) {
    scan.best_objective = std::max(scan.best_objective, r.result.objective);
    scan.worst_objective = std::min(scan.worst_objective, r.result.objective);
  }
  scan.spread = scan.best_objective - scan.worst_objective;
  scan.order_invariant = scan.spread <= 1e-8;
  return scan;
}

namespace {

PauliSum excitation_generator(const UccsdExcitation& ex, int n_modes) {
  return jordan_wigner(make_kappa(ex.occupied, ex.virtuals, n_modes));
}

}  // namespace

StateVector trotter_uccsd(const std::vector<UccsdExcitation>& singles,
                          const std::vector<UccsdExcitation>& doubles,
                          int k_steps, const StateVector& ref) {
  if (k_steps < 1) throw std::invalid_argument("trotter_uccsd requires K >= 1");
  const int n = ref.n_qubits();

  std::vector<PauliSum> single_gens, double_gens;
  std::vector<double> single_t, double_t;
  for (const UccsdExcitation& ex : singles) {
    single_gens.push_back(excitation_generator(ex, n));
    single_t.push_back(ex.t / k_steps);
  }
  for (const UccsdExcitation& ex : doubles) {
    double_gens.push_back(excitation_generator(ex, n));
    double_t.push_back(ex.t / k_steps);
  }

  StateVector state = ref;
  for (int step = 0; step < k_steps; ++step) {
    // Rightmost factor of [prod_singles][prod_doubles] acts first.
    for (std::size_t k = double_gens.size(); k-- > 0;) {
      state = apply_exp_sum(Complex{double_t[k], 0.0} * double_gens[k], state);
    }
    for (std::size_t k = single_gens.size(); k-- > 0;) {
      state = apply_exp_sum(Complex{single_t[k], 0.0} * single_gens[k], state);
    }
  }
  return state;
}

StateVector exact_uccsd(const std::vector<UccsdExcitation>& singles,
                        const std::vector<UccsdExcitation>& doubles,
                        const StateVector& ref) {
  const int n = ref.n_qubits();
  PauliSum total(n);
  for (const UccsdExcitation& ex : singles) {
    total += Complex{ex.t, 0.0} * excitation_generator(ex, n);
  }
  for (const UccsdExcitation& ex : doubles) {
    total += Complex{ex.t, 0.0} * excitation_generator(ex, n);
  }
  return apply_exp_sum(total, ref);
}

}  // namespace liepool
