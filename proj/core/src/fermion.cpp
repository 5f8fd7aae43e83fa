// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/fermion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liepool {

namespace {

void check_modes(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("mode count must be between 1 and 64, got " +
                                std::to_string(n));
  }
}

void check_same(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("mode counts differ: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

// Deterministic map key for an operator string.
std::vector<int> encode_ops(const std::vector<FermionOp>& ops) {
  std::vector<int> key;
  key.reserve(ops.size());
  for (const FermionOp& op : ops) {
    key.push_back((op.mode << 1) | (op.dagger ? 1 : 0));
  }
  return key;
}

}  // namespace

FermionOperator::FermionOperator(int n_modes) : n_modes_(n_modes) {
  check_modes(n_modes);
}

void FermionOperator::add_term(Complex coeff, std::vector<FermionOp> ops) {
  for (const FermionOp& op : ops) {
    if (op.mode < 0 || op.mode >= n_modes_) {
      throw std::invalid_argument("mode index " + std::to_string(op.mode) +
                                  " out of range for " +
                                  std::to_string(n_modes_) + " modes");
    }
  }
  terms_.push_back({coeff, std::move(ops)});
}

/*
 * Worklist rewriting.  The first out-of-order adjacent pair found is either
 * swapped (sign flip), contracted (a_p a_p^ = 1 - a_p^ a_p gives two
 * branches), or kills the term (repeated identical operator).  Each rewrite
 * reduces string length or inversion count, so the loop terminates.
 */
FermionOperator FermionOperator::normal_ordered(double eps) const {
  std::vector<FermionTerm> work = terms_;
  std::map<std::vector<int>, FermionTerm> result;

  while (!work.empty()) {
    FermionTerm t = std::move(work.back());
    work.pop_back();

    bool rewritten = false;
    for (std::size_t k = 0; k + 1 < t.ops.size(); ++k) {
      const FermionOp u = t.ops[k];
      const FermionOp v = t.ops[k + 1];

      if (u.dagger == v.dagger) {
        if (u.mode == v.mode) {
          rewritten = true;  // a a or a^ a^ on one mode vanishes
          break;
        }
        if (u.mode < v.mode) {  // enforce descending within a block
          std::swap(t.ops[k], t.ops[k + 1]);
          t.coeff = -t.coeff;
          work.push_back(std::move(t));
          rewritten = true;
          break;
        }
        continue;
      }

      if (!u.dagger && v.dagger) {  // annihilator left of creator
        if (u.mode == v.mode) {
          FermionTerm contracted{t.coeff, {}};
          contracted.ops.reserve(t.ops.size() - 2);
          for (std::size_t m = 0; m < t.ops.size(); ++m) {
            if (m != k && m != k + 1) contracted.ops.push_back(t.ops[m]);
          }
          work.push_back(std::move(contracted));
          std::swap(t.ops[k], t.ops[k + 1]);
          t.coeff = -t.coeff;
          work.push_back(std::move(t));
        } else {
          std::swap(t.ops[k], t.ops[k + 1]);
          t.coeff = -t.coeff;
          work.push_back(std::move(t));
        }
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;

    auto [it, inserted] = result.try_emplace(encode_ops(t.ops), t);
    if (!inserted) it->second.coeff += t.coeff;
  }

  FermionOperator out(n_modes_);
  for (auto& [key, term] : result) {
    if (std::abs(term.coeff) > eps) out.terms_.push_back(std::move(term));
  }
  return out;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  for (const FermionTerm& t : terms_) {
    FermionTerm conj{std::conj(t.coeff), {t.ops.rbegin(), t.ops.rend()}};
    for (FermionOp& op : conj.ops) op.dagger = !op.dagger;
    out.terms_.push_back(std::move(conj));
  }
  return out;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  check_same(n_modes_, other.n_modes_);
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
  check_same(n_modes_, other.n_modes_);
  for (FermionTerm t : other.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(std::move(t));
  }
  return *this;
}

FermionOperator& FermionOperator::operator*=(Complex scale) {
  for (FermionTerm& t : terms_) t.coeff *= scale;
  return *this;
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
  return a += b;
}

FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
  return a -= b;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  check_same(a.n_modes_, b.n_modes_);
  FermionOperator out(a.n_modes_);
  for (const FermionTerm& ta : a.terms_) {
    for (const FermionTerm& tb : b.terms_) {
      FermionTerm prod{ta.coeff * tb.coeff, ta.ops};
      prod.ops.insert(prod.ops.end(), tb.ops.begin(), tb.ops.end());
      out.terms_.push_back(std::move(prod));
    }
  }
  return out;
}

FermionOperator operator*(Complex scale, FermionOperator a) {
  return a *= scale;
}

bool approx_equal(const FermionOperator& a, const FermionOperator& b,
                  double eps) {
  const FermionOperator diff = (a - b).normal_ordered(0.0);
  for (const FermionTerm& t : diff.terms()) {
    if (std::abs(t.coeff) > eps) return false;
  }
  return true;
}

namespace {

// JW image of a single ladder operator on n qubits.
PauliSum jw_ladder(int n, FermionOp op) {
  const std::uint64_t site = std::uint64_t{1} << op.mode;
  const std::uint64_t zstring = site - 1;  // modes < p
  PauliSum out(n);
  out.add(PauliKey{site, zstring}, Complex{0.5, 0.0});
  const double sign = op.dagger ? -0.5 : 0.5;
  out.add(PauliKey{site, zstring | site}, Complex{0.0, sign});
  return out;
}

}  // namespace

PauliSum jordan_wigner(const FermionOperator& f) {
  const int n = f.n_modes();
  PauliSum out(n);
  for (const FermionTerm& t : f.terms()) {
    PauliSum acc(n);
    acc.add(PauliKey{0, 0}, t.coeff);
    for (const FermionOp& op : t.ops) acc = acc * jw_ladder(n, op);
    out += acc;
  }
  return out;
}

FermionOperator make_kappa(const std::vector<int>& occupied,
                           const std::vector<int>& virtuals, int n_modes) {
  check_modes(n_modes);
  if (occupied.empty() || occupied.size() != virtuals.size()) {
    throw std::invalid_argument(
        "make_kappa requires non-empty index lists of equal length");
  }
  std::set<int> seen;
  for (const std::vector<int>* list : {&occupied, &virtuals}) {
    for (int m : *list) {
      if (m < 0 || m >= n_modes) {
        throw std::invalid_argument("make_kappa index out of range");
      }
      if (!seen.insert(m).second) {
        throw std::invalid_argument("make_kappa indices must be disjoint");
      }
    }
  }

  FermionTerm excite{1.0, {}};
  for (int v : virtuals) excite.ops.push_back({v, true});
  for (int o : occupied) excite.ops.push_back({o, false});

  FermionOperator ex(n_modes);
  ex.add_term(excite.coeff, excite.ops);
  return (ex - ex.adjoint()).normal_ordered();
}

std::pair<PauliSum, PauliSum> make_xi_pi(int i, int j, int a, int b,
                                         int n_qubits) {
  check_modes(n_qubits);
  const std::set<int> distinct{i, j, a, b};
  if (distinct.size() != 4 || i >= j || a >= b || *distinct.begin() < 0 ||
      *distinct.rbegin() >= n_qubits) {
    throw std::invalid_argument(
        "make_xi_pi requires distinct in-range indices with i < j and a < b");
  }

  const auto bit = [](int q) { return std::uint64_t{1} << q; };
  const auto range_mask = [&](int lo, int hi) {  // bits lo+1 .. hi-1
    std::uint64_t m = 0;
    for (int q = lo + 1; q < hi; ++q) m |= bit(q);
    return m;
  };
  const std::uint64_t zs = range_mask(i, j) ^ range_mask(a, b);
  const std::uint64_t xall = bit(i) | bit(j) | bit(a) | bit(b);

  // One displayed word: y_flags say which of (i, j, a, b) carries y.
  const auto word = [&](PauliSum& dst, bool yi, bool yj, bool ya, bool yb,
                        double sign) {
    std::uint64_t z = zs;
    if (yi) z |= bit(i);
    if (yj) z |= bit(j);
    if (ya) z |= bit(a);
    if (yb) z |= bit(b);
    dst.add(PauliKey{xall, z}, Complex{0.0, 0.25 * sign});
  };

  PauliSum xi(n_qubits);
  word(xi, false, false, true, false, +1.0);  // x_i x_j y_a x_b
  word(xi, true, false, true, true, +1.0);    // y_i x_j y_a y_b
  word(xi, false, true, false, false, -1.0);  // x_i y_j x_a x_b
  word(xi, true, true, false, true, -1.0);    // y_i y_j x_a y_b
  xi.canonicalize();

  PauliSum pi(n_qubits);
  word(pi, false, true, true, true, +1.0);   // x_i y_j y_a y_b
  word(pi, false, false, false, true, +1.0); // x_i x_j x_a y_b
  word(pi, true, false, false, false, -1.0); // y_i x_j x_a x_b
  word(pi, true, true, true, false, -1.0);   // y_i y_j y_a x_b
  pi.canonicalize();

  return {xi, pi};
}

PauliSum symmetry_operator(SymmetryKind kind, const SpinOrbitalLayout& layout) {
  const int n = layout.n_modes();
  check_modes(n);
  const auto number_op = [&](int mode) {  // n_p -> (1 - z_p)/2
    PauliSum s(n);
    s.add(PauliKey{0, 0}, Complex{0.5, 0.0});
    s.add(PauliKey{0, std::uint64_t{1} << mode}, Complex{-0.5, 0.0});
    return s;
  };

  switch (kind) {
    case SymmetryKind::Ne: {
      PauliSum s(n);
      for (int p = 0; p < n; ++p) s += number_op(p);
      return s;
    }
    case SymmetryKind::Sz: {
      PauliSum s(n);
      for (int p = 0; p < layout.n_spatial; ++p) {
        s += Complex{0.5, 0.0} *
             (number_op(layout.alpha(p)) - number_op(layout.beta(p)));
      }
      return s;
    }
    case SymmetryKind::Splus: {
      FermionOperator f(n);
      for (int p = 0; p < layout.n_spatial; ++p) {
        f.add_term(1.0, {{layout.alpha(p), true}, {layout.beta(p), false}});
      }
      return jordan_wigner(f);
    }
    case SymmetryKind::Sminus:
      return symmetry_operator(SymmetryKind::Splus, layout).adjoint();
    case SymmetryKind::S2: {
      const PauliSum sz = symmetry_operator(SymmetryKind::Sz, layout);
      const PauliSum sp = symmetry_operator(SymmetryKind::Splus, layout);
      const PauliSum sm = sp.adjoint();
      PauliSum identity(n);
      identity.add(PauliKey{0, 0}, 1.0);
      return sm * sp + sz * (sz + identity);
    }
  }
  throw std::invalid_argument("unknown symmetry kind");
}

bool is_singlet_tensor(const PauliSum& op, const SpinOrbitalLayout& layout) {
  check_same(op.n_qubits(), layout.n_modes());
  const PauliSum sz = symmetry_operator(SymmetryKind::Sz, layout);
  const PauliSum sp = symmetry_operator(SymmetryKind::Splus, layout);
  const PauliSum sm = sp.adjoint();
  for (const PauliSum* s : {&sz, &sp, &sm}) {
    if (!commutator(*s, op).canonicalized().empty()) return false;
  }
  return true;
}

std::vector<PauliSum> adaptation_operators(
    const std::vector<SymmetryKind>& kinds, const SpinOrbitalLayout& layout) {
  bool want_ne = false, want_sz = false, want_spin = false;
  for (SymmetryKind kind : kinds) {
    switch (kind) {
      case SymmetryKind::Ne:
        want_ne = true;
        break;
      case SymmetryKind::Sz:
        want_sz = true;
        break;
      case SymmetryKind::Splus:
      case SymmetryKind::Sminus:
      case SymmetryKind::S2:
        want_spin = true;
        break;
    }
  }

  std::vector<PauliSum> out;
  if (want_ne) out.push_back(symmetry_operator(SymmetryKind::Ne, layout));
  if (want_sz || want_spin) {
    out.push_back(symmetry_operator(SymmetryKind::Sz, layout));
  }
  if (want_spin) {
    const PauliSum sp = symmetry_operator(SymmetryKind::Splus, layout);
    const PauliSum sm = sp.adjoint();
    PauliSum sx = Complex{0.5, 0.0} * (sp + sm);
    sx.canonicalize();
    PauliSum sy = Complex{0.0, -0.5} * (sp + Complex{-1.0, 0.0} * sm);
    sy.canonicalize();
    out.push_back(std::move(sx));
    out.push_back(std::move(sy));
  }
  return out;
}

FermionOperator build_singlet(SingletKind kind, const std::vector<int>& spatial,
                              const SpinOrbitalLayout& layout) {
  const int n = layout.n_modes();
  const auto check_spatial = [&](std::size_t expected) {
    if (spatial.size() != expected) {
      throw std::invalid_argument("build_singlet: wrong spatial index count");
    }
    std::set<int> distinct(spatial.begin(), spatial.end());
    if (distinct.size() != spatial.size() || *distinct.begin() < 0 ||
        *distinct.rbegin() >= layout.n_spatial) {
      throw std::invalid_argument(
          "build_singlet: spatial indices must be distinct and in range");
    }
  };

  switch (kind) {
    case SingletKind::SinglePair: {
      check_spatial(2);
      const int i = spatial[0], a = spatial[1];
      return (make_kappa({layout.alpha(i)}, {layout.alpha(a)}, n) +
              make_kappa({layout.beta(i)}, {layout.beta(a)}, n))
          .normal_ordered();
    }
    case SingletKind::PairedDouble: {
      check_spatial(2);
      const int i = spatial[0], a = spatial[1];
      return make_kappa({layout.beta(i), layout.alpha(i)},
                        {layout.alpha(a), layout.beta(a)}, n);
    }
    case SingletKind::Seniority2Pair: {
      check_spatial(3);
      const int i = spatial[0], a = spatial[1], b = spatial[2];
      return (make_kappa({layout.beta(i), layout.alpha(i)},
                         {layout.alpha(a), layout.beta(b)}, n) +
              make_kappa({layout.beta(i), layout.alpha(i)},
                         {layout.alpha(b), layout.beta(a)}, n))
          .normal_ordered();
    }
  }
  throw std::invalid_argument("unknown singlet kind");
}

// --- text format -----------------------------------------------------------

namespace {

std::string_view strip_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() &&
           std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() &&
           !std::isspace(static_cast<unsigned char>(s[end]))) {
      ++end;
    }
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

int parse_int_strict(std::string_view s, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" +
                                std::string(s) + "'");
  }
  return value;
}

}  // namespace

FermionFile parse_fermion_file(std::string_view text) {
  FermionFile file;
  int spatial_override = 0;
  FermionOperator current;
  bool open = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line{raw};
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = strip_view(line);
    if (line.empty()) {
      if (open) {
        file.operators.push_back(current);
        current = FermionOperator(file.n_modes);
        open = false;
      }
      continue;
    }

    if (line.starts_with("modes:")) {
      if (file.n_modes != 0) {
        throw std::invalid_argument("duplicate modes: header");
      }
      file.n_modes = parse_int_strict(strip_view(line.substr(6)), "mode count");
      check_modes(file.n_modes);
      current = FermionOperator(file.n_modes);
      continue;
    }
    if (line.starts_with("layout:")) {
      spatial_override =
          parse_int_strict(strip_view(line.substr(7)), "layout spatial count");
      continue;
    }

    if (file.n_modes == 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": terms before modes: header");
    }
    const auto tokens = split_ws(line);
    if (tokens.size() < 2) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected '<coeff> <token>...'");
    }
    const Complex coeff = parse_complex(tokens[0]);
    std::vector<FermionOp> ops;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      std::string_view tok = tokens[k];
      if (tok == "id") continue;  // explicit identity factor
      FermionOp op;
      if (tok.ends_with('^')) {
        op.dagger = true;
        tok.remove_suffix(1);
      }
      op.mode = parse_int_strict(tok, "mode index");
      ops.push_back(op);
    }
    try {
      current.add_term(coeff, std::move(ops));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
    open = true;
  }
  if (open) file.operators.push_back(current);

  if (file.n_modes == 0) {
    throw std::invalid_argument("fermion file lacks a modes: header");
  }
  if (spatial_override > 0) {
    file.layout.n_spatial = spatial_override;
  } else {
    if (file.n_modes % 2 != 0) {
      throw std::invalid_argument(
          "odd mode count requires an explicit layout: header");
    }
    file.layout.n_spatial = file.n_modes / 2;
  }
  return file;
}

std::string to_text(const FermionFile& file) {
  std::string out = "modes: " + std::to_string(file.n_modes) + "\n";
  if (file.layout.n_spatial * 2 != file.n_modes) {
    out += "layout: " + std::to_string(file.layout.n_spatial) + "\n";
  }
  for (std::size_t k = 0; k < file.operators.size(); ++k) {
    out += '\n';
    const FermionOperator canon = file.operators[k].normal_ordered();
    for (const FermionTerm& t : canon.terms()) {
      out += format_complex(t.coeff);
      if (t.ops.empty()) out += " id";
      for (const FermionOp& op : t.ops) {
        out += ' ';
        out += std::to_string(op.mode);
        if (op.dagger) out += '^';
      }
      out += '\n';
    }
  }
  return out;
}

bool looks_like_fermion_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line{raw};
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = strip_view(line);
    if (line.empty()) continue;
    return line.starts_with("modes:");
  }
  return false;
}

}  // namespace liepool
