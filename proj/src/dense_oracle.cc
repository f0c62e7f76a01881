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

#include "mgltg/dense_oracle.h"

#include <string>

#include "mgltg/errors.h"

using namespace mgltg;
using cd = std::complex<double>;

namespace {

void check_capacity(int num_qubits, int limit = kDenseMaxQubits) {
    if (num_qubits > limit) {
        throw CapacityError("dense simulation is limited to " + std::to_string(limit) + " qubits, got " +
                            std::to_string(num_qubits));
    }
}

// Bit mask of qubit q (1-based) in the MSB-first basis index.
size_t qubit_mask(int q, int num_qubits) {
    return size_t{1} << (num_qubits - q);
}

}  // namespace

StateVector StateVector::basis(const BitString &x) {
    int m = static_cast<int>(x.size());
    check_capacity(m);
    StateVector out{m, Eigen::VectorXcd::Zero(Eigen::Index{1} << m)};
    out.amplitudes[static_cast<Eigen::Index>(x.index())] = 1;
    return out;
}

StateVector mgltg::apply_circuit(const MatchgateCircuit &circuit, const BitString &x) {
    int m = circuit.num_qubits();
    check_capacity(m);
    if (static_cast<int>(x.size()) != m) {
        throw InvalidInput("input length " + std::to_string(x.size()) + " does not match register size " +
                           std::to_string(m));
    }
    StateVector psi = StateVector::basis(x);
    auto &amp = psi.amplitudes;
    for (const auto &gate : circuit.gates()) {
        Eigen::Matrix4cd g = gate.matrix();
        size_t hi = qubit_mask(gate.qubit, m);
        size_t lo = qubit_mask(gate.qubit + 1, m);
        for (size_t base = 0; base < (size_t{1} << m); base++) {
            if (base & (hi | lo)) {
                continue;
            }
            Eigen::Vector4cd v(amp[base], amp[base | lo], amp[base | hi], amp[base | hi | lo]);
            Eigen::Vector4cd w = g * v;
            amp[base] = w[0];
            amp[base | lo] = w[1];
            amp[base | hi] = w[2];
            amp[base | hi | lo] = w[3];
        }
    }
    return psi;
}

double mgltg::measure_qubit1_prob0(const StateVector &psi) {
    // Qubit 1 is the most significant bit, so the first half of the amplitudes.
    Eigen::Index half = psi.amplitudes.size() / 2;
    return psi.amplitudes.head(half).squaredNorm();
}

double mgltg::oracle_expectation_z1(const MatchgateCircuit &circuit, const BitString &x) {
    return 2 * measure_qubit1_prob0(apply_circuit(circuit, x)) - 1;
}

double mgltg::oracle_success_probability(const MatchgateCircuit &circuit, const BitString &x, bool target) {
    double p0 = measure_qubit1_prob0(apply_circuit(circuit, x));
    return target ? 1 - p0 : p0;
}

Eigen::MatrixXcd mgltg::jordan_wigner_operator(int mu, int num_qubits) {
    check_capacity(num_qubits, 10);
    if (mu < 1 || mu > 2 * num_qubits) {
        throw InvalidInput("mode index out of range");
    }
    int k = (mu + 1) / 2;
    bool is_y = mu % 2 == 0;
    Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    size_t mask = qubit_mask(k, num_qubits);
    for (size_t col = 0; col < static_cast<size_t>(dim); col++) {
        // Z string on qubits 1..k-1.
        int parity = 0;
        for (int q = 1; q < k; q++) {
            parity ^= (col & qubit_mask(q, num_qubits)) ? 1 : 0;
        }
        cd phase = parity ? -1.0 : 1.0;
        bool bit = (col & mask) != 0;
        if (is_y) {
            // Y|0> = i|1>, Y|1> = -i|0>.
            phase *= bit ? cd(0, -1) : cd(0, 1);
        }
        op(static_cast<Eigen::Index>(col ^ mask), static_cast<Eigen::Index>(col)) = phase;
    }
    return op;
}

Eigen::MatrixXcd mgltg::circuit_unitary(const MatchgateCircuit &circuit) {
    int m = circuit.num_qubits();
    check_capacity(m, 10);
    Eigen::Index dim = Eigen::Index{1} << m;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index col = 0; col < dim; col++) {
        u.col(col) = apply_circuit(circuit, BitString::from_index(static_cast<uint64_t>(col), m)).amplitudes;
    }
    return u;
}

Eigen::MatrixXd mgltg::oracle_rotation(const MatchgateCircuit &circuit) {
    int m = circuit.num_qubits();
    Eigen::MatrixXcd u = circuit_unitary(circuit);
    double dim = static_cast<double>(Eigen::Index{1} << m);
    std::vector<Eigen::MatrixXcd> modes;
    for (int mu = 1; mu <= 2 * m; mu++) {
        modes.push_back(jordan_wigner_operator(mu, m));
    }
    Eigen::MatrixXd r(2 * m, 2 * m);
    for (int mu = 0; mu < 2 * m; mu++) {
        Eigen::MatrixXcd conj = u.adjoint() * modes[mu] * u;
        for (int nu = 0; nu < 2 * m; nu++) {
            r(mu, nu) = ((modes[nu] * conj).trace() / dim).real();
        }
    }
    return r;
}
