// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace liepool {

namespace {

void check_sim_qubits(int n) {
  if (n < 1 || n > kMaxSimQubits) {
    throw std::invalid_argument("state vector supports 1.." +
                                std::to_string(kMaxSimQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("qubit counts differ: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::uint64_t{1} << n_qubits) {
  check_sim_qubits(n_qubits);
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector out(n_qubits);
  if (index >= out.dim()) {
    throw std::invalid_argument("basis index out of range");
  }
  out.amps_[index] = 1.0;
  return out;
}

StateVector StateVector::from_bitstring(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  check_sim_qubits(n);
  std::uint64_t index = 0;
  for (int j = 0; j < n; ++j) {
    if (bits[j] == '1') {
      index |= std::uint64_t{1} << j;
    } else if (bits[j] != '0') {
      throw std::invalid_argument("bitstring must contain only 0/1");
    }
  }
  return basis_state(n, index);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n <= 0.0) throw std::runtime_error("cannot normalize the zero vector");
  const double inv = 1.0 / n;
  for (Complex& a : amps_) a *= inv;
}

Complex StateVector::inner(const StateVector& other) const {
  check_same(n_qubits_, other.n_qubits_);
  Complex s = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    s += std::conj(amps_[i]) * other.amps_[i];
  }
  return s;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  check_same(n_qubits_, other.n_qubits_);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

StateVector& StateVector::operator*=(Complex scale) {
  for (Complex& a : amps_) a *= scale;
  return *this;
}

namespace {

// out += c * W(x,z) |in>, one term.
void accumulate_term(std::uint64_t x, std::uint64_t z, Complex c,
                     const StateVector& in, StateVector& out) {
  // i^{|x&z|} folded into the coefficient once.
  switch (std::popcount(x & z) & 3) {
    case 0: break;
    case 1: c = Complex{-c.imag(), c.real()}; break;
    case 2: c = -c; break;
    default: c = Complex{c.imag(), -c.real()}; break;
  }
  const std::uint64_t dim = in.dim();
  for (std::uint64_t n = 0; n < dim; ++n) {
    const Complex amp = in[n];
    if (amp == Complex{0.0}) continue;
    const bool neg = (std::popcount(z & n) & 1) != 0;
    out[n ^ x] += neg ? -c * amp : c * amp;
  }
}

}  // namespace

StateVector apply_pauli_sum(const PauliSum& op, const StateVector& psi) {
  check_same(op.n_qubits(), psi.n_qubits());
  StateVector out(psi.n_qubits());
  for (const auto& [k, c] : op.terms()) {
    accumulate_term(k.x, k.z, c, psi, out);
  }
  return out;
}

StateVector apply_exp_pauli(double tau, const PauliTerm& p,
                            const StateVector& psi) {
  check_same(p.n_qubits, psi.n_qubits());
  if (std::abs(std::abs(p.coeff) - 1.0) > 1e-12 ||
      std::abs(p.coeff.imag()) > 1e-12) {
    throw std::invalid_argument(
        "apply_exp_pauli expects a unit real coefficient; scale tau instead");
  }
  const double c = std::cos(tau);
  const double s = std::sin(tau) * p.coeff.real();
  StateVector out = psi;
  out *= c;
  StateVector rotated(psi.n_qubits());
  accumulate_term(p.x_mask, p.z_mask, Complex{0.0, s}, psi, rotated);
  out += rotated;
  return out;
}

StateVector apply_exp_sum(const PauliSum& a, const StateVector& psi) {
  check_same(a.n_qubits(), psi.n_qubits());
  if (!is_antihermitian(a)) {
    throw std::invalid_argument("apply_exp_sum expects an anti-Hermitian sum");
  }
  double one_norm = 0.0;
  for (const auto& [k, c] : a.terms()) one_norm += std::abs(c);
  int slices = 1;
  while (one_norm / slices > 0.5 && slices < (1 << 24)) slices *= 2;

  // 22 series terms at slice norm <= 1/2: remainder < (1/2)^23/23! ~ 1e-30.
  constexpr int kTerms = 22;
  const Complex inv_slices{1.0 / slices, 0.0};
  PauliSum slice = a * inv_slices;

  StateVector state = psi;
  for (int s = 0; s < slices; ++s) {
    StateVector sum = state;
    StateVector power = state;
    for (int k = 1; k <= kTerms; ++k) {
      StateVector next = apply_pauli_sum(slice, power);
      next *= Complex{1.0 / k, 0.0};
      sum += next;
      power = std::move(next);
    }
    state = std::move(sum);
  }
  return state;
}

double expectation(const PauliSum& h, const StateVector& psi) {
  const Complex v = psi.inner(apply_pauli_sum(h, psi));
  if (std::abs(v.imag()) > 1e-10) {
    throw std::invalid_argument(
        "expectation value has imaginary residue; operator not Hermitian?");
  }
  return v.real();
}

double gradient(const PauliSum& h, const PauliTerm& p, const StateVector& ref) {
  if (!is_hermitian(h)) {
    throw std::invalid_argument("gradient expects a Hermitian operator");
  }
  PauliTerm unit = p;
  if (std::abs(std::abs(unit.coeff) - 1.0) > 1e-12 ||
      std::abs(unit.coeff.imag()) > 1e-12) {
    throw std::invalid_argument("gradient expects a unit-coefficient Pauli");
  }
  // i<ref|[H,P]|ref> = -2 Im <ref|H P|ref> for Hermitian H and P.
  StateVector p_ref(ref.n_qubits());
  accumulate_term(unit.x_mask, unit.z_mask, unit.coeff, ref, p_ref);
  const Complex z = ref.inner(apply_pauli_sum(h, p_ref));
  return -2.0 * z.imag();
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::abs(a.inner(b));
}

}  // namespace liepool
