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

#include "mgltg/matchgate.h"

#include <array>
#include <cmath>
#include <numbers>

using namespace mgltg;
using cd = std::complex<double>;

namespace {

constexpr cd kI{0, 1};

Eigen::Matrix2cd pauli(int which) {
    Eigen::Matrix2cd p;
    switch (which) {
        case 0:
            p << 1, 0, 0, 1;
            break;
        case 1:
            p << 0, 1, 1, 0;
            break;
        case 2:
            p << 0, -kI, kI, 0;
            break;
        default:
            p << 1, 0, 0, -1;
            break;
    }
    return p;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

// Pauli index pairs (first line, second line) of the restricted Jordan-Wigner
// operators X I, Y I, Z X, Z Y.
constexpr std::array<std::array<int, 2>, 4> kModeOperators{{{1, 0}, {2, 0}, {3, 1}, {3, 2}}};

void check_line(int qubit, int num_qubits) {
    if (qubit < 1 || qubit > num_qubits - 1) {
        throw InvalidInput("gate on lines (" + std::to_string(qubit) + ", " + std::to_string(qubit + 1) +
                           ") does not fit a register of " + std::to_string(num_qubits) + " qubits");
    }
}

}  // namespace

Matchgate Matchgate::from_blocks(const Eigen::Matrix2cd &outer, const Eigen::Matrix2cd &inner, int qubit) {
    Matchgate g;
    g.outer = outer;
    g.inner = inner;
    g.qubit = qubit;
    return g;
}

Matchgate Matchgate::fswap(int qubit) {
    Eigen::Matrix2cd a;
    a << kI, 0, 0, -kI;
    Eigen::Matrix2cd b;
    b << 0, kI, kI, 0;
    Matchgate g = from_blocks(a, b, qubit);
    g.kind = GateKind::kFswap;
    return g;
}

Matchgate Matchgate::z_rotation(int target, double angle, int num_qubits) {
    if (num_qubits < 2) {
        throw InvalidInput("a Z rotation needs a register of at least two qubits");
    }
    if (target < 1 || target > num_qubits) {
        throw InvalidInput("Z rotation target out of range");
    }
    cd plus = std::exp(kI * angle);
    cd minus = std::exp(-kI * angle);
    Eigen::Matrix2cd a;
    Eigen::Matrix2cd b;
    int line;
    if (target < num_qubits) {
        // exp(i angle Z) (x) I: |00>,|01> pick up +angle, |10>,|11> pick up -angle.
        line = target;
        a << plus, 0, 0, minus;
        b << plus, 0, 0, minus;
    } else {
        // I (x) exp(i angle Z).
        line = target - 1;
        a << plus, 0, 0, minus;
        b << minus, 0, 0, plus;
    }
    Matchgate g = from_blocks(a, b, line);
    g.kind = GateKind::kZRotation;
    g.angle = angle;
    g.target = target;
    return g;
}

Matchgate Matchgate::xx_rotation(int qubit, double angle) {
    cd c = std::cos(angle);
    cd s = kI * std::sin(angle);
    Eigen::Matrix2cd a;
    a << c, s, s, c;
    Matchgate g = from_blocks(a, a, qubit);
    g.kind = GateKind::kXXRotation;
    g.angle = angle;
    return g;
}

Eigen::Matrix4cd Matchgate::matrix() const {
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    g(0, 0) = outer(0, 0);
    g(0, 3) = outer(0, 1);
    g(3, 0) = outer(1, 0);
    g(3, 3) = outer(1, 1);
    g(1, 1) = inner(0, 0);
    g(1, 2) = inner(0, 1);
    g(2, 1) = inner(1, 0);
    g(2, 2) = inner(1, 1);
    return g;
}

MatchgateValidation mgltg::validate_matchgate(const Matchgate &gate, double tolerance) {
    auto check = [&](const Eigen::Matrix2cd &block, const char *name) -> std::string {
        if (!block.allFinite()) {
            return std::string(name) + " block has non-finite entries";
        }
        double unit_err = (block.adjoint() * block - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
        if (unit_err > tolerance) {
            return std::string(name) + " block is not unitary (max |B^dag B - I| = " + std::to_string(unit_err) + ")";
        }
        double det_err = std::abs(block.determinant() - cd(1));
        if (det_err > tolerance) {
            auto det = block.determinant();
            return std::string(name) + " block has determinant " + std::to_string(det.real()) + "+" +
                   std::to_string(det.imag()) + "i, not 1";
        }
        return {};
    };
    std::string diag = check(gate.outer, "outer (A)");
    std::string inner_diag = check(gate.inner, "inner (B)");
    if (!inner_diag.empty()) {
        diag = diag.empty() ? inner_diag : diag + "; " + inner_diag;
    }
    return {diag.empty(), diag};
}

MatchgateCircuit::MatchgateCircuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw InvalidInput("a circuit needs at least one qubit");
    }
}

MatchgateCircuit::MatchgateCircuit(int num_qubits, std::vector<Matchgate> gates) : MatchgateCircuit(num_qubits) {
    for (auto &g : gates) {
        append(std::move(g));
    }
}

void MatchgateCircuit::append(Matchgate gate) {
    check_line(gate.qubit, num_qubits_);
    gates_.push_back(std::move(gate));
}

MatchgateCircuit MatchgateCircuit::then(const MatchgateCircuit &later) const {
    if (later.num_qubits_ != num_qubits_) {
        throw InvalidInput("cannot concatenate circuits on different register sizes");
    }
    MatchgateCircuit out = *this;
    for (const auto &g : later.gates_) {
        out.gates_.push_back(g);
    }
    return out;
}

Eigen::Matrix4d mgltg::gate_rotation_block(const Matchgate &gate, double tolerance) {
    auto validation = validate_matchgate(gate, tolerance);
    if (!validation.ok) {
        throw InvalidInput("not a matchgate: " + validation.diagnostic);
    }
    Eigen::Matrix4cd g = gate.matrix();
    Eigen::Matrix4d block;
    for (int mu = 0; mu < 4; mu++) {
        const auto &op = kModeOperators[mu];
        Eigen::Matrix4cd conj = g.adjoint() * kron(pauli(op[0]), pauli(op[1])) * g;
        for (int p = 0; p < 4; p++) {
            for (int q = 0; q < 4; q++) {
                cd coeff = (kron(pauli(p), pauli(q)) * conj).trace() / 4.0;
                int nu = -1;
                for (int k = 0; k < 4; k++) {
                    if (kModeOperators[k][0] == p && kModeOperators[k][1] == q) {
                        nu = k;
                    }
                }
                if (nu < 0) {
                    if (std::abs(coeff) > tolerance) {
                        throw VerificationError("conjugated mode operator leaves the span of c_1..c_4");
                    }
                    continue;
                }
                if (std::abs(coeff.imag()) > tolerance) {
                    throw VerificationError("conjugated mode operator has a complex coefficient");
                }
                block(mu, nu) = coeff.real();
            }
        }
    }
    return block;
}

Rotationd mgltg::gate_to_rotation(const Matchgate &gate, int num_qubits) {
    check_line(gate.qubit, num_qubits);
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(2 * num_qubits, 2 * num_qubits);
    r.block<4, 4>(2 * (gate.qubit - 1), 2 * (gate.qubit - 1)) = gate_rotation_block(gate);
    return Rotationd(std::move(r));
}

Rotationd mgltg::compile_circuit(const MatchgateCircuit &circuit) {
    int m = circuit.num_qubits();
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(2 * m, 2 * m);
    const auto &gates = circuit.gates();
    for (size_t t = 0; t < gates.size(); t++) {
        Eigen::Matrix4d block;
        try {
            block = gate_rotation_block(gates[t]);
        } catch (const InvalidInput &e) {
            throw InvalidInput("gate " + std::to_string(t) + ": " + e.what());
        }
        Eigen::Index offset = 2 * (gates[t].qubit - 1);
        r.middleRows(offset, 4) = (block * r.middleRows(offset, 4)).eval();
    }
    return Rotationd(std::move(r));
}

Eigen::Matrix2cd mgltg::random_su2(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Eigen::Vector4d q;
    do {
        for (int k = 0; k < 4; k++) {
            q[k] = normal(rng);
        }
    } while (q.norm() < 1e-12);
    q.normalize();
    cd alpha(q[0], q[1]);
    cd beta(q[2], q[3]);
    Eigen::Matrix2cd u;
    u << alpha, beta, -std::conj(beta), std::conj(alpha);
    return u;
}

Matchgate mgltg::random_matchgate(int num_qubits, std::mt19937_64 &rng) {
    if (num_qubits < 2) {
        throw InvalidInput("matchgates need at least two qubits");
    }
    std::uniform_int_distribution<int> line(1, num_qubits - 1);
    Eigen::Matrix2cd a = random_su2(rng);
    Eigen::Matrix2cd b = random_su2(rng);
    return Matchgate::from_blocks(a, b, line(rng));
}

MatchgateCircuit mgltg::random_circuit(int num_qubits, size_t num_gates, std::mt19937_64 &rng) {
    MatchgateCircuit c(num_qubits);
    for (size_t t = 0; t < num_gates; t++) {
        c.append(random_matchgate(num_qubits, rng));
    }
    return c;
}

Rotationd mgltg::random_rotation(int num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Eigen::Index d = 2 * num_qubits;
    Eigen::MatrixXd g(d, d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            g(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::VectorXd diag = qr.matrixQR().diagonal();
    for (Eigen::Index j = 0; j < d; j++) {
        if (diag[j] < 0) {
            q.col(j) *= -1;
        }
    }
    if (q.determinant() < 0) {
        q.col(0) *= -1;
    }
    return Rotationd(std::move(q));
}
