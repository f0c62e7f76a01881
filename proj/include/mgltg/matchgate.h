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

#ifndef MGLTG_MATCHGATE_H
#define MGLTG_MATCHGATE_H

#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mgltg/rotation.h"

namespace mgltg {

/// A gate exp(i*phi*H) with H = -i c_a c_b (a = b - 1 adjacent modes) rotates
/// the (a, b) coordinate plane of the associated rotation by this many times
/// phi, in the GivensFactor sign convention. Both the Z_k rotation
/// (H = Z_k = -i c_{2k-1} c_{2k}) and the XX rotation
/// (H = X_k X_{k+1} = -i c_{2k} c_{2k+1}) follow it.
inline constexpr double kRotationAnglePerGateAngle = 2.0;

enum class GateKind {
    kMatchgate,
    kFswap,
    kZRotation,
    kXXRotation,
};

/// Two-qubit gate G(A, B) on lines (qubit, qubit + 1), 1-based.
///
/// In the basis |00>, |01>, |10>, |11> (qubit `qubit` written first) A acts on
/// span{|00>, |11>} and B on span{|01>, |10>}. A genuine matchgate has A and B
/// in SU(2); arbitrary blocks can be stored so that they can be validated.
struct Matchgate {
    Eigen::Matrix2cd outer;
    Eigen::Matrix2cd inner;
    int qubit = 1;

    // Serialization metadata for the named constructors.
    GateKind kind = GateKind::kMatchgate;
    double angle = 0;
    int target = 0;

    static Matchgate from_blocks(const Eigen::Matrix2cd &outer, const Eigen::Matrix2cd &inner, int qubit);
    /// |ab> -> (-1)^{ab} |ba>, realized as i * fSWAP so that both blocks lie in SU(2).
    static Matchgate fswap(int qubit);
    /// exp(i * angle * Z_target). Placed on lines (target, target + 1), or on
    /// (target - 1, target) when target is the last qubit of the register.
    static Matchgate z_rotation(int target, double angle, int num_qubits);
    /// exp(i * angle * X_qubit X_{qubit+1}).
    static Matchgate xx_rotation(int qubit, double angle);

    /// The 4x4 unitary in the basis |00>, |01>, |10>, |11>.
    Eigen::Matrix4cd matrix() const;
};

struct MatchgateValidation {
    bool ok;
    std::string diagnostic;
};

/// Checks that both blocks are unitary with unit determinant.
MatchgateValidation validate_matchgate(const Matchgate &gate, double tolerance = kTolerance);

/// An ordered list of matchgates on nearest-neighbour lines, applied left to
/// right in time: U = G_T ... G_2 G_1.
class MatchgateCircuit {
   public:
    explicit MatchgateCircuit(int num_qubits);
    MatchgateCircuit(int num_qubits, std::vector<Matchgate> gates);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Matchgate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }

    void append(Matchgate gate);
    /// This circuit followed by `later`.
    MatchgateCircuit then(const MatchgateCircuit &later) const;

   private:
    int num_qubits_;
    std::vector<Matchgate> gates_;
};

/// The 4x4 block of the gate's rotation on coordinates {2k-1, ..., 2k+2}.
///
/// Each two-qubit restricted Jordan-Wigner operator (X I, Y I, Z X, Z Y) is
/// conjugated by the gate and expanded in the 16-element Pauli basis; all
/// weight must land, with real coefficients, on those same four operators.
Eigen::Matrix4d gate_rotation_block(const Matchgate &gate, double tolerance = kTolerance);

/// The full 2m x 2m rotation of a single gate in an m-qubit register.
Rotationd gate_to_rotation(const Matchgate &gate, int num_qubits);

/// Rotation of the whole circuit. Appending a gate multiplies its rotation on
/// the left: R(G_T ... G_1) = R_T ... R_1.
Rotationd compile_circuit(const MatchgateCircuit &circuit);

/// Haar-random SU(2) element.
Eigen::Matrix2cd random_su2(std::mt19937_64 &rng);
/// A matchgate with independent Haar-random blocks on random lines.
Matchgate random_matchgate(int num_qubits, std::mt19937_64 &rng);
MatchgateCircuit random_circuit(int num_qubits, size_t num_gates, std::mt19937_64 &rng);
/// Random element of SO(2m), from the QR factorization of a Gaussian matrix.
Rotationd random_rotation(int num_qubits, std::mt19937_64 &rng);

}  // namespace mgltg

#endif
