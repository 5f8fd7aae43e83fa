// Copyright 2026 The liepool Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense-matrix reference implementations, deliberately independent of the
// sparse production code paths they are used to check.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "liepool/pauli.hpp"
#include "liepool/statevector.hpp"

namespace oracle {

/// Dense 2^n x 2^n matrix of one Pauli product W(x, z).
Eigen::MatrixXcd dense_term(int n_qubits, liepool::PauliKey key);

/// Dense matrix of a PauliSum.
Eigen::MatrixXcd dense(const liepool::PauliSum& s);

Eigen::VectorXcd dense_state(const liepool::StateVector& v);

/// Matrix exponential (Pade, via Eigen's unsupported MatrixFunctions).
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

double max_abs(const Eigen::MatrixXcd& m);

/// Central finite difference of E(tau) = <ref| e^{-i tau P} H e^{i tau P} |ref>
/// at tau = 0, computed entirely with dense matrices.
double fd_gradient(const liepool::PauliSum& h, const liepool::PauliTerm& p,
                   const liepool::StateVector& ref, double step = 1e-5);

/// Exhaustive DIS reference: |gradient| for every one of the 4^N - 1 Pauli
/// products via dense commutators, returned as (key, magnitude) with
/// magnitude > threshold.
std::vector<std::pair<liepool::PauliKey, double>> dense_dis(
    const liepool::PauliSum& h, const liepool::StateVector& ref,
    double threshold);

/*
 * Best fidelity |<target| e^{t0 G0} e^{t1 G1} e^{t2 G2} |ref>| over a cubic
 * amplitude grid of n_steps points per axis spanning [-box, box), followed
 * by Nelder-Mead refinement from the best grid point.  Exponentials come
 * from dense eigendecompositions, independent of the sim module.
 */
double grid_max_fidelity(const std::vector<liepool::PauliSum>& generators,
                         const liepool::StateVector& ref,
                         const liepool::StateVector& target, int n_steps,
                         double box);

}  // namespace oracle
