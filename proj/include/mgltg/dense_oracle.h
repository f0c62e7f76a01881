// Copyright 2026 The matchgate-ltg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MGLTG_DENSE_ORACLE_H
#define MGLTG_DENSE_ORACLE_H

#include <Eigen/Dense>

#include "mgltg/boolean_function.h"
#include "mgltg/matchgate.h"

namespace mgltg {

/// Largest register the brute-force simulator accepts (2^14 amplitudes).
inline constexpr int kDenseMaxQubits = 14;

/// 2^m amplitudes, basis index with qubit 1 as the most significant bit.
struct StateVector {
    int num_qubits;
    Eigen::VectorXcd amplitudes;

    static StateVector basis(const BitString &x);
};

/// U|x> for the full circuit unitary, gate by gate in O(T 2^m).
StateVector apply_circuit(const MatchgateCircuit &circuit, const BitString &x);

/// Probability of reading 0 on qubit 1.
double measure_qubit1_prob0(const StateVector &psi);

/// <x|U^dag Z_1 U|x> = 2 p0 - 1.
double oracle_expectation_z1(const MatchgateCircuit &circuit, const BitString &x);

/// Probability that qubit 1 of U|x> reads `target`.
double oracle_success_probability(const MatchgateCircuit &circuit, const BitString &x, bool target);

// Heavier brute-force routes, used to cross-check the rotation picture.

/// Dense Jordan-Wigner operator c_mu (mu 1-based) on m qubits.
Eigen::MatrixXcd jordan_wigner_operator(int mu, int num_qubits);

/// The full 2^m x 2^m unitary of the circuit.
Eigen::MatrixXcd circuit_unitary(const MatchgateCircuit &circuit);

/// R(mu, nu) = Tr(c_nu U^dag c_mu U) / 2^m, computed densely. Not validated as
/// a rotation, so callers can inspect it even when something is off.
Eigen::MatrixXd oracle_rotation(const MatchgateCircuit &circuit);

}  // namespace mgltg

#endif
