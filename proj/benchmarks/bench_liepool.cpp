// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "liepool/ansatz.hpp"
#include "liepool/dis.hpp"
#include "liepool/fermion.hpp"
#include "liepool/lie.hpp"
#include "liepool/model.hpp"
#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace {

using namespace liepool;

PauliSum random_sum(std::mt19937_64& rng, int n_qubits, int n_terms,
                    bool hermitian) {
  const std::uint64_t mask = n_qubits >= 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n_qubits) - 1;
  PauliSum s(n_qubits);
  for (int t = 0; t < n_terms; ++t) {
    const double c =
        -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    s.add({rng() & mask, rng() & mask},
          hermitian ? Complex{c, 0.0} : Complex{0.0, c});
  }
  s.canonicalize();
  return s;
}

void BM_PauliMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const PauliSum a = random_sum(rng, n, 32, false);
  const PauliSum b = random_sum(rng, n, 32, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PauliMul)->Arg(8)->Arg(32)->Arg(64);

void BM_Commutator(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const PauliSum a = random_sum(rng, n, 32, false);
  const PauliSum b = random_sum(rng, n, 32, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator(a, b));
  }
}
BENCHMARK(BM_Commutator)->Arg(8)->Arg(32)->Arg(64);

void BM_ModelClosure(benchmark::State& state) {
  const model::TwoElectron m = model::TwoElectron::build();
  const std::vector<PauliSum> gens = m.generators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(close(gens));
  }
}
BENCHMARK(BM_ModelClosure);

void BM_SinglesClosure(benchmark::State& state) {
  const int n_modes = static_cast<int>(state.range(0));
  std::vector<PauliSum> singles;
  for (int p = 0; p < n_modes; ++p) {
    for (int q = p + 1; q < n_modes; ++q) {
      singles.push_back(jordan_wigner(make_kappa({p}, {q}, n_modes)));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(close(singles));
  }
}
BENCHMARK(BM_SinglesClosure)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ApplyExpSum(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  const PauliSum a = random_sum(rng, n, 8, false);
  StateVector psi(n);
  psi[0] = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_exp_sum(a, psi));
  }
}
BENCHMARK(BM_ApplyExpSum)->Arg(6)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMicrosecond);

void BM_DisClasses(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int n = static_cast<int>(state.range(0));
  const PauliSum h = random_sum(rng, n, 12, true);
  const StateVector ref = StateVector::basis_state(n, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dis_classes(h, ref));
  }
}
BENCHMARK(BM_DisClasses)->Arg(4)->Arg(6)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void BM_OptimizeSu2(benchmark::State& state) {
  const model::TwoElectron m = model::TwoElectron::build();
  std::vector<AnsatzFactor> factors;
  for (const PauliSum& op : m.adapted_su2()) factors.push_back({op, 0.0});
  const Objective objective = Objective::max_fidelity(m.target());
  OptimizeOptions opts;
  opts.seeds = {0, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize(factors, m.ref(), objective, opts));
  }
}
BENCHMARK(BM_OptimizeSu2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
