// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/pauli.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace liepool {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be between 1 and 64, got " +
                                std::to_string(n));
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("qubit counts differ: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

// c * i^k, carried out by swaps and negations only.
Complex times_i_pow(Complex c, int k) {
  switch (k & 3) {
    case 0: return c;
    case 1: return {-c.imag(), c.real()};
    case 2: return -c;
    default: return {c.imag(), -c.real()};
  }
}

}  // namespace

PauliTerm PauliTerm::identity(int n_qubits, Complex c) {
  check_qubits(n_qubits);
  return {n_qubits, 0, 0, c};
}

PauliTerm PauliTerm::single(int n_qubits, int qubit, char axis, Complex c) {
  check_qubits(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (std::toupper(static_cast<unsigned char>(axis))) {
    case 'X': return {n_qubits, bit, 0, c};
    case 'Y': return {n_qubits, bit, bit, c};
    case 'Z': return {n_qubits, 0, bit, c};
    case 'I': return {n_qubits, 0, 0, c};
    default:
      throw std::invalid_argument(std::string("unknown Pauli axis '") + axis +
                                  "'");
  }
}

PauliTerm PauliTerm::from_masks(int n_qubits, std::uint64_t x, std::uint64_t z,
                                Complex c) {
  check_qubits(n_qubits);
  if (n_qubits < kMaxQubits) {
    const std::uint64_t valid = (std::uint64_t{1} << n_qubits) - 1;
    if ((x & ~valid) != 0 || (z & ~valid) != 0) {
      throw std::invalid_argument("mask addresses qubits beyond n_qubits");
    }
  }
  return {n_qubits, x, z, c};
}

PauliTerm PauliTerm::from_string(std::string_view word, Complex c) {
  const int n = static_cast<int>(word.size());
  check_qubits(n);
  std::uint64_t x = 0, z = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    switch (std::toupper(static_cast<unsigned char>(word[j]))) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli word character '" +
                                    std::string(1, word[j]) + "'");
    }
  }
  return {n, x, z, c};
}

std::string PauliTerm::pauli_string() const {
  std::string out(static_cast<std::size_t>(n_qubits), 'I');
  for (int j = 0; j < n_qubits; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    const bool xb = (x_mask & bit) != 0;
    const bool zb = (z_mask & bit) != 0;
    if (xb && zb) out[j] = 'Y';
    else if (xb) out[j] = 'X';
    else if (zb) out[j] = 'Z';
  }
  return out;
}

PauliTerm pauli_mul(const PauliTerm& a, const PauliTerm& b) {
  check_same(a.n_qubits, b.n_qubits);
  const std::uint64_t x = a.x_mask ^ b.x_mask;
  const std::uint64_t z = a.z_mask ^ b.z_mask;
  // Phase from commuting Z^za past X^xb and from the Y-count bookkeeping of
  // the Hermitian convention W(x,z) = i^{|x&z|} X^x Z^z.
  const int k = popcount(a.x_mask & a.z_mask) + popcount(b.x_mask & b.z_mask) +
                2 * popcount(a.z_mask & b.x_mask) - popcount(x & z);
  return {a.n_qubits, x, z, times_i_pow(a.coeff * b.coeff, k)};
}

bool commutes(const PauliTerm& a, const PauliTerm& b) {
  check_same(a.n_qubits, b.n_qubits);
  const int parity =
      popcount(a.x_mask & b.z_mask) + popcount(a.z_mask & b.x_mask);
  return (parity & 1) == 0;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
}

Complex PauliSum::coeff(PauliKey k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Complex{0.0} : it->second;
}

void PauliSum::add(const PauliTerm& t) {
  check_same(n_qubits_, t.n_qubits);
  add(t.key(), t.coeff);
}

void PauliSum::add(PauliKey k, Complex c) { terms_[k] += c; }

void PauliSum::canonicalize(double eps) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= eps) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

PauliSum PauliSum::canonicalized(double eps) const {
  PauliSum out = *this;
  out.canonicalize(eps);
  return out;
}

double PauliSum::coord_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [k, c] : terms_) out.terms_[k] = std::conj(c);
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  check_same(n_qubits_, other.n_qubits_);
  for (const auto& [k, c] : other.terms_) terms_[k] += c;
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  check_same(n_qubits_, other.n_qubits_);
  for (const auto& [k, c] : other.terms_) terms_[k] -= c;
  canonicalize();
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& [k, c] : terms_) c *= scale;
  canonicalize();
  return *this;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(Complex scale, PauliSum a) { return a *= scale; }
PauliSum operator*(PauliSum a, Complex scale) { return a *= scale; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    const PauliTerm ta{a.n_qubits(), ka.x, ka.z, ca};
    for (const auto& [kb, cb] : b.terms()) {
      const PauliTerm tb{b.n_qubits(), kb.x, kb.z, cb};
      out.add(pauli_mul(ta, tb));
    }
  }
  out.canonicalize();
  return out;
}

PauliSum PauliSum::from_term(const PauliTerm& t) {
  PauliSum out(t.n_qubits);
  out.add(t);
  return out;
}

PauliSum PauliSum::identity(int n_qubits, Complex c) {
  PauliSum out(n_qubits);
  out.add(PauliKey{0, 0}, c);
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  check_same(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    const PauliTerm ta{a.n_qubits(), ka.x, ka.z, ca};
    for (const auto& [kb, cb] : b.terms()) {
      const PauliTerm tb{b.n_qubits(), kb.x, kb.z, cb};
      if (commutes(ta, tb)) continue;  // st - ts vanishes pairwise
      PauliTerm prod = pauli_mul(ta, tb);
      prod.coeff *= 2.0;
      out.add(prod);
    }
  }
  out.canonicalize();
  return out;
}

PauliSum anticommutator(const PauliSum& a, const PauliSum& b) {
  check_same(a.n_qubits(), b.n_qubits());
  PauliSum out(a.n_qubits());
  for (const auto& [ka, ca] : a.terms()) {
    const PauliTerm ta{a.n_qubits(), ka.x, ka.z, ca};
    for (const auto& [kb, cb] : b.terms()) {
      const PauliTerm tb{b.n_qubits(), kb.x, kb.z, cb};
      if (!commutes(ta, tb)) continue;
      PauliTerm prod = pauli_mul(ta, tb);
      prod.coeff *= 2.0;
      out.add(prod);
    }
  }
  out.canonicalize();
  return out;
}

bool is_antihermitian(const PauliSum& s, double eps) {
  for (const auto& [k, c] : s.terms()) {
    if (std::abs(c.real()) > eps) return false;
  }
  return true;
}

bool is_hermitian(const PauliSum& s, double eps) {
  for (const auto& [k, c] : s.terms()) {
    if (std::abs(c.imag()) > eps) return false;
  }
  return true;
}

bool approx_equal(const PauliSum& a, const PauliSum& b, double eps) {
  return (a - b).canonicalized(0.0).coord_norm() <= eps;
}

// --- text format -----------------------------------------------------------

std::string format_complex(Complex c) {
  // +0.0 normalizes negative zero so formatting is sign-stable.
  const double re = c.real() + 0.0;
  const double im = c.imag() + 0.0;
  char buf[64];
  std::string out;
  std::snprintf(buf, sizeof buf, "%.17g", re);
  out = buf;
  std::snprintf(buf, sizeof buf, "%+.17g", im);
  out += buf;
  out += 'i';
  return out;
}

namespace {

double parse_double_strict(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;  // from_chars rejects a leading '+'
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  }
  return value;
}

// Index of the +/- sign separating real and imaginary parts, or npos.
// Signs at position 0 or directly after an exponent marker do not split.
std::size_t split_sign(std::string_view s) {
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] != '+' && s[i] != '-') continue;
    const char prev = s[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    return i;
  }
  return std::string_view::npos;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  if (text.back() != 'i') {
    return {parse_double_strict(text), 0.0};
  }
  std::string_view body = text.substr(0, text.size() - 1);
  const std::size_t at = split_sign(body);
  auto imag_of = [](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_double_strict(part);
  };
  if (at == std::string_view::npos) {
    return {0.0, imag_of(body)};
  }
  return {parse_double_strict(body.substr(0, at)), imag_of(body.substr(at))};
}

std::string term_to_text(const PauliTerm& t) {
  return format_complex(t.coeff) + " " + t.pauli_string();
}

std::string to_text(const PauliSum& s) {
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    out += term_to_text({s.n_qubits(), k.x, k.z, c});
    out += '\n';
  }
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Split a text into lines with comments removed; empty entries mark blank
// source lines (kept so callers can use them as separators).
std::vector<std::string_view> logical_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    out.push_back(strip(line));
    if (nl == text.size()) break;
    pos = nl + 1;
  }
  return out;
}

void parse_term_line(std::string_view line, PauliSum& sum, int& n_qubits,
                     int expect_qubits, std::size_t line_no) {
  const std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string_view::npos) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": expected '<coeff> <pauli word>'");
  }
  const Complex c = parse_complex(strip(line.substr(0, sp)));
  const std::string_view word = strip(line.substr(sp + 1));
  PauliTerm t = PauliTerm::from_string(word, c);
  if (n_qubits == 0) {
    n_qubits = (expect_qubits > 0) ? expect_qubits : t.n_qubits;
    sum = PauliSum(n_qubits);
  }
  if (t.n_qubits != n_qubits) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": Pauli word length " +
                                std::to_string(t.n_qubits) +
                                " does not match operator width " +
                                std::to_string(n_qubits));
  }
  sum.add(t);
}

}  // namespace

PauliSum parse_pauli_sum(std::string_view text, int expect_qubits) {
  PauliSum sum;
  int n_qubits = 0;
  std::size_t line_no = 0;
  for (std::string_view line : logical_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    parse_term_line(line, sum, n_qubits, expect_qubits, line_no);
  }
  if (n_qubits == 0) {
    if (expect_qubits <= 0) {
      throw std::invalid_argument("operator text contains no terms");
    }
    return PauliSum(expect_qubits);
  }
  // Exactly cancelled merges disappear; explicit tiny coefficients survive
  // until the caller asks for canonicalize(kCoeffEps).
  sum.canonicalize(0.0);
  return sum;
}

std::vector<PauliSum> parse_pauli_sum_list(std::string_view text,
                                           int expect_qubits) {
  std::vector<PauliSum> out;
  std::string block;
  int width = expect_qubits;
  const auto flush = [&] {
    if (block.empty()) return;
    PauliSum s = parse_pauli_sum(block, width);
    if (width <= 0) width = s.n_qubits();
    out.push_back(std::move(s));
    block.clear();
  };
  for (std::string_view line : logical_lines(text)) {
    if (line.empty()) {
      flush();
    } else {
      block.append(line);
      block += '\n';
    }
  }
  flush();
  return out;
}

}  // namespace liepool
