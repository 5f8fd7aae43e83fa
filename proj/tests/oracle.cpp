// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace oracle {

using liepool::Complex;
using liepool::PauliKey;
using liepool::PauliSum;
using liepool::PauliTerm;
using liepool::StateVector;

Eigen::MatrixXcd dense_term(int n_qubits, PauliKey key) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Complex scale{1.0, 0.0};
  for (int k = 0; k < (std::popcount(key.x & key.z) & 3); ++k) {
    scale *= Complex{0.0, 1.0};
  }
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto n = static_cast<std::uint64_t>(col);
    const double sign = (std::popcount(key.z & n) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(n ^ key.x), col) = scale * sign;
  }
  return m;
}

Eigen::MatrixXcd dense(const PauliSum& s) {
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, coeff] : s.terms()) {
    m += coeff * dense_term(s.n_qubits(), key);
  }
  return m;
}

Eigen::VectorXcd dense_state(const StateVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.dim()));
  for (std::uint64_t i = 0; i < v.dim(); ++i) {
    out(static_cast<Eigen::Index>(i)) = v[i];
  }
  return out;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) { return m.exp(); }

double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

double fd_gradient(const PauliSum& h, const PauliTerm& p,
                   const StateVector& ref, double step) {
  const Eigen::MatrixXcd hm = dense(h);
  Eigen::MatrixXcd pm = dense_term(p.n_qubits, p.key());
  pm *= p.coeff;
  const Eigen::VectorXcd psi = dense_state(ref);

  const auto energy = [&](double tau) {
    const Eigen::MatrixXcd u = expm(Complex{0.0, tau} * pm);
    const Eigen::VectorXcd rotated = u * psi;
    return (rotated.adjoint() * hm * rotated)(0, 0).real();
  };
  return (energy(step) - energy(-step)) / (2.0 * step);
}

std::vector<std::pair<PauliKey, double>> dense_dis(const PauliSum& h,
                                                   const StateVector& ref,
                                                   double threshold) {
  const int n = ref.n_qubits();
  const Eigen::MatrixXcd hm = dense(h);
  const Eigen::VectorXcd psi = dense_state(ref);
  const std::uint64_t dim = std::uint64_t{1} << n;

  std::vector<std::pair<PauliKey, double>> out;
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (std::uint64_t z = 0; z < dim; ++z) {
      if (x == 0 && z == 0) continue;
      const PauliKey key{x, z};
      const Eigen::MatrixXcd pm = dense_term(n, key);
      const Complex bracket =
          (psi.adjoint() * (hm * pm - pm * hm) * psi)(0, 0);
      const double grad = (Complex{0.0, 1.0} * bracket).real();
      if (std::abs(grad) > threshold) out.emplace_back(key, std::abs(grad));
    }
  }
  return out;
}

namespace {

struct ExpFactory {
  Eigen::MatrixXcd v;        // eigenvectors of iG
  Eigen::VectorXd lambda;    // eigenvalues of iG
  Eigen::MatrixXcd vh;

  explicit ExpFactory(const Eigen::MatrixXcd& g) {
    const Eigen::MatrixXcd herm = Complex{0.0, 1.0} * g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("oracle: eigendecomposition failed");
    }
    v = es.eigenvectors();
    lambda = es.eigenvalues();
    vh = v.adjoint();
  }

  // e^{t G} = V diag(e^{-i t lambda}) V^dagger.
  Eigen::MatrixXcd at(double t) const {
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
      phases(k) = std::exp(Complex{0.0, -t * lambda(k)});
    }
    return v * phases.asDiagonal() * vh;
  }
};

}  // namespace

double grid_max_fidelity(const std::vector<PauliSum>& generators,
                         const StateVector& ref, const StateVector& target,
                         int n_steps, double box) {
  if (generators.size() != 3) {
    throw std::invalid_argument("grid oracle is specialized to 3 factors");
  }
  const ExpFactory f0(dense(generators[0]));
  const ExpFactory f1(dense(generators[1]));
  const ExpFactory f2(dense(generators[2]));
  const Eigen::VectorXcd psi = dense_state(ref);
  const Eigen::VectorXcd tgt = dense_state(target);

  std::vector<double> ts(n_steps);
  for (int i = 0; i < n_steps; ++i) {
    ts[i] = -box + (2.0 * box * i) / n_steps;
  }

  // Leftmost factor folded into the target row once per t0.
  std::vector<Eigen::RowVectorXcd> rows(n_steps);
  for (int i = 0; i < n_steps; ++i) {
    rows[i] = tgt.adjoint() * f0.at(ts[i]);
  }

  double best = -1.0;
  double b0 = 0, b1 = 0, b2 = 0;
  for (int i2 = 0; i2 < n_steps; ++i2) {
    const Eigen::VectorXcd psi2 = f2.at(ts[i2]) * psi;
    for (int i1 = 0; i1 < n_steps; ++i1) {
      const Eigen::VectorXcd psi1 = f1.at(ts[i1]) * psi2;
      for (int i0 = 0; i0 < n_steps; ++i0) {
        const double fid = std::abs((rows[i0] * psi1).value());
        if (fid > best) {
          best = fid;
          b0 = ts[i0];
          b1 = ts[i1];
          b2 = ts[i2];
        }
      }
    }
  }

  // Local refinement: coordinate-descent golden-section-style polishing is
  // overkill; a compact Nelder-Mead on the 3-vector suffices.
  const auto loss = [&](const std::vector<double>& t) {
    const Eigen::VectorXcd s = f0.at(t[0]) * (f1.at(t[1]) * (f2.at(t[2]) * psi));
    return 1.0 - std::abs((tgt.adjoint() * s).value());
  };
  std::vector<std::vector<double>> simplex{{b0, b1, b2},
                                           {b0 + 0.05, b1, b2},
                                           {b0, b1 + 0.05, b2},
                                           {b0, b1, b2 + 0.05}};
  std::vector<double> fs(4);
  for (int i = 0; i < 4; ++i) fs[i] = loss(simplex[i]);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<int> ord{0, 1, 2, 3};
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    if (fs[ord[3]] - fs[ord[0]] < 1e-14) break;
    std::vector<double> centroid(3, 0.0);
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < 3; ++k) centroid[k] += simplex[ord[i]][k] / 3.0;
    }
    const int w = ord[3];
    std::vector<double> refl(3), contr(3);
    for (int k = 0; k < 3; ++k) {
      refl[k] = 2.0 * centroid[k] - simplex[w][k];
      contr[k] = 0.5 * (centroid[k] + simplex[w][k]);
    }
    const double fr = loss(refl);
    if (fr < fs[w]) {
      simplex[w] = refl;
      fs[w] = fr;
      continue;
    }
    const double fc = loss(contr);
    if (fc < fs[w]) {
      simplex[w] = contr;
      fs[w] = fc;
      continue;
    }
    for (int i = 1; i < 4; ++i) {
      for (int k = 0; k < 3; ++k) {
        simplex[ord[i]][k] =
            0.5 * (simplex[ord[0]][k] + simplex[ord[i]][k]);
      }
      fs[ord[i]] = loss(simplex[ord[i]]);
    }
  }
  double refined = 1.0 - *std::min_element(fs.begin(), fs.end());
  return std::max(best, refined);
}

}  // namespace oracle
