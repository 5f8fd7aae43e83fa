// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "liepool/lie.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace liepool {

namespace {

using Coords = std::map<PauliKey, double>;

// Anti-Hermitian sums live in the real vector space of imaginary parts.
Coords coords_of(const PauliSum& s) {
  Coords out;
  for (const auto& [k, c] : s.terms()) {
    if (c.imag() != 0.0) out[k] = c.imag();
  }
  return out;
}

double coords_norm(const Coords& v) {
  double s = 0.0;
  for (const auto& [k, x] : v) s += x * x;
  return std::sqrt(s);
}

double coords_dot(const Coords& a, const Coords& b) {
  const Coords& small = a.size() <= b.size() ? a : b;
  const Coords& large = a.size() <= b.size() ? b : a;
  double s = 0.0;
  for (const auto& [k, x] : small) {
    const auto it = large.find(k);
    if (it != large.end()) s += x * it->second;
  }
  return s;
}

void coords_axpy(Coords& y, double alpha, const Coords& x) {
  if (alpha == 0.0) return;
  for (const auto& [k, v] : x) y[k] += alpha * v;
}

PauliSum coords_to_sum(int n_qubits, const Coords& v, double eps = kCoeffEps) {
  PauliSum out(n_qubits);
  for (const auto& [k, x] : v) out.add(k, Complex{0.0, x});
  out.canonicalize(eps);
  return out;
}

// Orthonormal span with modified Gram-Schmidt; a second projection pass
// keeps the residual orthogonal to working precision.
class SpanTracker {
 public:
  Coords residual_of(const Coords& v) const {
    Coords r = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Coords& o : ortho_) {
        coords_axpy(r, -coords_dot(r, o), o);
      }
    }
    return r;
  }

  // Commit a residual known to be independent.
  void add_residual(Coords r) {
    const double n = coords_norm(r);
    for (auto& [k, x] : r) x /= n;
    ortho_.push_back(std::move(r));
  }

 private:
  std::vector<Coords> ortho_;
};

PauliSum normalized(const PauliSum& s) {
  const double n = s.coord_norm();
  return s * Complex{1.0 / n, 0.0};
}

void check_antihermitian(const PauliSum& s, const char* who) {
  if (!is_antihermitian(s)) {
    throw std::invalid_argument(std::string(who) +
                                " expects anti-Hermitian operators");
  }
}

// Key union over a list of sums (imaginary-part coordinates).
std::vector<PauliKey> key_union(const std::vector<const PauliSum*>& sums) {
  std::set<PauliKey> keys;
  for (const PauliSum* s : sums) {
    for (const auto& [k, c] : s->terms()) keys.insert(k);
  }
  return {keys.begin(), keys.end()};
}

}  // namespace

std::size_t default_max_dim(int n_qubits) {
  if (n_qubits >= 16) return static_cast<std::size_t>(-1);
  return (std::size_t{1} << (2 * n_qubits)) - 1;
}

RankResult rank_extend(const std::vector<PauliSum>& basis,
                       const PauliSum& candidate) {
  SpanTracker tracker;
  for (const PauliSum& b : basis) {
    const Coords c = coords_of(b);
    const Coords r = tracker.residual_of(c);
    if (coords_norm(r) > kSpanEps) tracker.add_residual(r);
  }
  Coords r = tracker.residual_of(coords_of(candidate));
  const double norm = coords_norm(r);
  RankResult out;
  out.independent = norm > kSpanEps;
  out.residual = coords_to_sum(candidate.n_qubits(), r, kSpanEps);
  return out;
}

Subalgebra close(const std::vector<PauliSum>& generators,
                 std::size_t max_dim) {
  if (generators.empty()) {
    throw std::invalid_argument("close requires at least one generator");
  }
  const int n = generators.front().n_qubits();
  if (max_dim == 0) max_dim = default_max_dim(n);
  if (max_dim < generators.size()) {
    throw std::invalid_argument("max_dim smaller than the generator count");
  }

  Subalgebra s;
  s.n_qubits = n;
  SpanTracker tracker;
  std::deque<std::pair<int, int>> pending;

  const auto append = [&](const PauliSum& elem, Coords residual,
                          std::string prov) {
    if (s.basis.size() >= max_dim) {
      throw dimension_cap_error(
          "closure exceeded max_dim = " + std::to_string(max_dim) +
          " (exponential growth?)");
    }
    const int idx = static_cast<int>(s.basis.size());
    s.basis.push_back(normalized(elem));
    s.provenance.push_back(std::move(prov));
    tracker.add_residual(std::move(residual));
    for (int k = 0; k < idx; ++k) pending.emplace_back(k, idx);
  };

  for (std::size_t g = 0; g < generators.size(); ++g) {
    check_antihermitian(generators[g], "close");
    if (generators[g].n_qubits() != n) {
      throw std::invalid_argument("close: generator qubit counts differ");
    }
    const PauliSum gen = generators[g].canonicalized();
    if (gen.coord_norm() <= kCoeffEps) continue;  // zero contributes no rank
    const PauliSum unit = normalized(gen);
    Coords r = tracker.residual_of(coords_of(unit));
    if (coords_norm(r) > kSpanEps) {
      append(unit, std::move(r), "generator[" + std::to_string(g) + "]");
    }
  }

  while (!pending.empty()) {
    const auto [i, j] = pending.front();
    pending.pop_front();
    const PauliSum comm = commutator(s.basis[i], s.basis[j]);
    if (comm.coord_norm() <= kSpanEps) continue;
    const PauliSum unit = normalized(comm);
    Coords r = tracker.residual_of(coords_of(unit));
    if (coords_norm(r) > kSpanEps) {
      append(unit, std::move(r),
             "[b" + std::to_string(i) + ",b" + std::to_string(j) + "]");
    }
  }

  s.structure = structure_constants(s);
  return s;
}

namespace {

// Dense coordinate matrix of the basis over an explicit key order.
Eigen::MatrixXd basis_matrix(const std::vector<PauliSum>& basis,
                             const std::vector<PauliKey>& keys) {
  Eigen::MatrixXd B(keys.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t r = 0; r < keys.size(); ++r) {
      B(r, j) = basis[j].coeff(keys[r]).imag();
    }
  }
  return B;
}

}  // namespace

std::vector<StructureTriple> structure_constants(const Subalgebra& s) {
  const std::size_t dim = s.basis.size();
  std::vector<StructureTriple> out;
  if (dim < 2) return out;

  // Commutators first so the key union covers their support too.
  std::vector<std::vector<PauliSum>> comms(dim);
  std::vector<const PauliSum*> support;
  for (const PauliSum& b : s.basis) support.push_back(&b);
  for (std::size_t i = 0; i < dim; ++i) {
    comms[i].reserve(dim - i - 1);
    for (std::size_t j = i + 1; j < dim; ++j) {
      comms[i].push_back(commutator(s.basis[i], s.basis[j]));
      support.push_back(&comms[i].back());
    }
  }
  const std::vector<PauliKey> keys = key_union(support);

  const Eigen::MatrixXd B = basis_matrix(s.basis, keys);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(B);

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const PauliSum& c = comms[i][j - i - 1];
      Eigen::VectorXd rhs(keys.size());
      for (std::size_t r = 0; r < keys.size(); ++r) {
        rhs(r) = c.coeff(keys[r]).imag();
      }
      const Eigen::VectorXd x = qr.solve(rhs);
      const double residual = (B * x - rhs).norm();
      if (residual > kSpanEps) {
        throw std::runtime_error(
            "structure_constants: commutator [, ] leaves the span "
            "(residual " +
            std::to_string(residual) + " at pair " + std::to_string(i) + "," +
            std::to_string(j) + ")");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        if (std::abs(x(k)) <= kSpanEps) continue;
        out.push_back({static_cast<int>(i), static_cast<int>(j),
                       static_cast<int>(k), x(k)});
        out.push_back({static_cast<int>(j), static_cast<int>(i),
                       static_cast<int>(k), -x(k)});
      }
    }
  }
  return out;
}

namespace {

// Right-nullspace columns of M (singular values <= tol), via full SVD.
std::vector<Eigen::VectorXd> nullspace(const Eigen::MatrixXd& M, double tol) {
  std::vector<Eigen::VectorXd> out;
  if (M.rows() == 0) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(M.cols());
      e(j) = 1.0;
      out.push_back(std::move(e));
    }
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const Eigen::Index rank_max = std::min<Eigen::Index>(M.rows(), M.cols());
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    const double sigma = j < rank_max ? sv(j) : 0.0;
    if (sigma <= tol) out.push_back(svd.matrixV().col(j));
  }
  return out;
}

Subalgebra combos_to_subalgebra(const Subalgebra& parent,
                                const std::vector<Eigen::VectorXd>& ys,
                                const std::string& tag) {
  Subalgebra out;
  out.n_qubits = parent.n_qubits;
  for (std::size_t t = 0; t < ys.size(); ++t) {
    PauliSum elem(parent.n_qubits);
    for (Eigen::Index j = 0; j < ys[t].size(); ++j) {
      if (ys[t](j) == 0.0) continue;
      elem += Complex{ys[t](j), 0.0} * parent.basis[j];
    }
    elem.canonicalize();
    out.basis.push_back(normalized(elem));
    out.provenance.push_back(tag + "[" + std::to_string(t) + "]");
  }
  return out;
}

}  // namespace

Subalgebra center(const Subalgebra& s) {
  const std::size_t dim = s.basis.size();
  Subalgebra out;
  out.n_qubits = s.n_qubits;
  if (dim == 0) return out;

  // All pairwise commutators; C(i,j) = -C(j,i), C(i,i) = 0.  Support pointers
  // are collected only once the vectors stop growing.
  std::vector<std::vector<PauliSum>> upper(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      upper[i].push_back(commutator(s.basis[i], s.basis[j]));
    }
  }
  std::vector<const PauliSum*> support;
  for (const auto& row : upper) {
    for (const PauliSum& c : row) support.push_back(&c);
  }
  const std::vector<PauliKey> keys = key_union(support);

  if (keys.empty()) {  // abelian: the whole algebra is its center
    out = s;
    out.provenance.assign(dim, "");
    for (std::size_t j = 0; j < dim; ++j) {
      out.provenance[j] = "center[" + std::to_string(j) + "]";
    }
    out.structure.clear();
    return out;
  }

  Eigen::MatrixXd M(dim * keys.size(), dim);
  M.setZero();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      const bool flip = i > j;
      const PauliSum& c = flip ? upper[j][i - j - 1] : upper[i][j - i - 1];
      const double sign = flip ? -1.0 : 1.0;
      for (std::size_t r = 0; r < keys.size(); ++r) {
        M(i * keys.size() + r, j) = sign * c.coeff(keys[r]).imag();
      }
    }
  }

  out = combos_to_subalgebra(s, nullspace(M, kSpanEps), "center");

  // A center element commutes with everything in span(s), so the center is
  // abelian; treat violations as numerical failure, not a soft miss.
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    for (std::size_t b = a + 1; b < out.basis.size(); ++b) {
      if (commutator(out.basis[a], out.basis[b]).coord_norm() >
          16.0 * kSpanEps) {
        throw std::runtime_error("center: extracted elements fail to commute");
      }
    }
  }
  return out;
}

Subalgebra symmetry_adapt(const Subalgebra& s,
                          const std::vector<PauliSum>& symmetries) {
  const std::size_t dim = s.basis.size();
  Subalgebra out;
  out.n_qubits = s.n_qubits;
  if (dim == 0) return out;

  for (const PauliSum& sym : symmetries) {
    if (!is_hermitian(sym)) {
      throw std::invalid_argument(
          "symmetry_adapt expects Hermitian symmetry operators");
    }
    if (sym.n_qubits() != s.n_qubits) {
      throw std::invalid_argument("symmetry operator qubit count differs");
    }
  }
  if (symmetries.empty()) {
    out = s;
    return out;
  }

  // Constraint blocks: coordinates of [S_k, b_j] stacked over all k.  The
  // commutator of Hermitian with anti-Hermitian is Hermitian, but both parts
  // are projected to stay robust for general input.
  std::vector<std::vector<PauliSum>> comms(symmetries.size());
  for (std::size_t k = 0; k < symmetries.size(); ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      comms[k].push_back(commutator(symmetries[k], s.basis[j]));
    }
  }
  std::set<PauliKey> keyset;
  for (const auto& row : comms) {
    for (const PauliSum& c : row) {
      for (const auto& [key, coeff] : c.terms()) keyset.insert(key);
    }
  }
  const std::vector<PauliKey> keys(keyset.begin(), keyset.end());

  Eigen::MatrixXd M(2 * keys.size() * symmetries.size(), dim);
  M.setZero();
  for (std::size_t k = 0; k < symmetries.size(); ++k) {
    const std::size_t row0 = 2 * keys.size() * k;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t r = 0; r < keys.size(); ++r) {
        const Complex c = comms[k][j].coeff(keys[r]);
        M(row0 + 2 * r, j) = c.real();
        M(row0 + 2 * r + 1, j) = c.imag();
      }
    }
  }

  out = combos_to_subalgebra(s, nullspace(M, kSpanEps), "adapted");

  // The nullspace of a commuting constraint set is automatically closed
  // (Jacobi); verify rather than assume.
  Subalgebra verified = out;
  verified.structure = structure_constants(verified);
  return verified;
}

Subalgebra anticommuting_subalgebra(const std::vector<PauliTerm>& paulis) {
  if (paulis.empty()) {
    throw std::invalid_argument(
        "anticommuting_subalgebra requires at least one term");
  }
  const int n = paulis.front().n_qubits;
  for (std::size_t i = 0; i < paulis.size(); ++i) {
    if (paulis[i].n_qubits != n) {
      throw std::invalid_argument("Pauli qubit counts differ");
    }
    if (std::abs(paulis[i].coeff.imag()) > 1e-12 ||
        std::abs(std::abs(paulis[i].coeff.real()) - 1.0) > 1e-12) {
      throw std::invalid_argument(
          "anticommuting_subalgebra expects coefficients +-1");
    }
    for (std::size_t j = i + 1; j < paulis.size(); ++j) {
      if (commutes(paulis[i], paulis[j])) {
        throw std::invalid_argument(
            "terms " + std::to_string(i) + " and " + std::to_string(j) +
            " commute; the set must be pairwise anticommuting");
      }
    }
  }

  Subalgebra s;
  s.n_qubits = n;
  const int K = static_cast<int>(paulis.size());
  for (int i = 0; i < K; ++i) {
    PauliTerm t = paulis[i];
    t.coeff *= Complex{0.0, 1.0};
    s.basis.push_back(PauliSum::from_term(t));
    s.provenance.push_back("iP[" + std::to_string(i) + "]");
  }
  for (int i = 0; i < K; ++i) {
    for (int j = i + 1; j < K; ++j) {
      s.basis.push_back(PauliSum::from_term(pauli_mul(paulis[i], paulis[j])));
      s.provenance.push_back("P[" + std::to_string(i) + "]P[" +
                             std::to_string(j) + "]");
    }
  }
  s.structure = structure_constants(s);
  return s;
}

bool verify_so_relations(const Subalgebra& s, int n_anticommuting) {
  const int K = n_anticommuting;
  if (K < 1) return false;
  if (s.basis.size() !=
      static_cast<std::size_t>(K) * (K + 1) / 2) {
    return false;
  }

  // S_ab for 0 <= a < b <= K under the canonical layout; scale = +-1/2.
  const auto pair_index = [K](int j, int k) {  // 1 <= j < k <= K
    return K + (j - 1) * K - (j - 1) * j / 2 + (k - j - 1);
  };
  const auto S = [&](int a, int b) -> PauliSum {
    double sign = 1.0;
    if (a == b) return PauliSum(s.n_qubits);
    if (a > b) {
      std::swap(a, b);
      sign = -1.0;
    }
    if (a == 0) {
      return Complex{-0.5 * sign, 0.0} * s.basis[b - 1];
    }
    return Complex{0.5 * sign, 0.0} * s.basis[pair_index(a, b)];
  };

  for (int a = 0; a <= K; ++a) {
    for (int b = a + 1; b <= K; ++b) {
      for (int c = 0; c <= K; ++c) {
        for (int d = c + 1; d <= K; ++d) {
          PauliSum expect(s.n_qubits);
          if (b == c) expect += S(a, d);
          if (a == d) expect += S(b, c);
          if (a == c) expect -= S(b, d);
          if (b == d) expect -= S(a, c);
          const PauliSum lhs = commutator(S(a, b), S(c, d));
          if ((lhs - expect).coord_norm() > kSpanEps) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace liepool
