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

#include "mgltg/synthesis.h"

using namespace mgltg;

MatchgateCircuit mgltg::rotation_to_circuit(const Rotationd &r) {
    int m = static_cast<int>(r.num_qubits());
    MatchgateCircuit circuit(m);
    auto factors = adjacent_givens_factors(r);
    if (m == 1 && !factors.empty()) {
        throw InvalidInput("a one-qubit register has no matchgates; only the identity rotation is realizable");
    }
    // R = G_1 G_2 ... G_K and R(circuit) = R_T ... R_1, so time runs from G_K back to G_1.
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        double gate_angle = it->angle / kRotationAnglePerGateAngle;
        auto plane = static_cast<int>(it->plane);
        if (plane % 2 == 0) {
            circuit.append(Matchgate::z_rotation(plane / 2 + 1, gate_angle, m));
        } else {
            circuit.append(Matchgate::xx_rotation(plane / 2 + 1, gate_angle));
        }
    }
    return circuit;
}

SynthesisResult mgltg::synthesize_ltg_circuit(const LtgRepresentation<Rational> &rep) {
    if (rep.one_norm() != 1) {
        if (!rep.cast<double>().is_normalized()) {
            throw InvalidInput("representation is not normalized (||w||_1 + |theta| must be 1); normalize it first");
        }
    }
    size_t n = rep.num_inputs();
    if (n < 1) {
        throw InvalidInput("representation has no inputs");
    }
    auto margin = margin_of_representation(rep);
    if (margin.margin <= 0) {
        throw InvalidInput("representation has zero margin: some input lies on the separating hyperplane");
    }
    Eigen::VectorXd a(static_cast<Eigen::Index>(n + 1));
    for (size_t k = 0; k < n; k++) {
        a[static_cast<Eigen::Index>(k)] = to_double(rep.w[static_cast<Eigen::Index>(k)]);
    }
    a[static_cast<Eigen::Index>(n)] = to_double(rep.theta);
    // Rounding to double can push the 1-norm a hair above 1.
    double norm = a.cwiseAbs().sum();
    if (norm > 1) {
        a /= norm;
    }
    Rotationd rotation = build_rotation<double>(a);
    MatchgateCircuit circuit = rotation_to_circuit(rotation);
    double promised = (1 + to_double(margin.margin)) / 2;
    return SynthesisResult{std::move(circuit), std::move(rotation), rep, margin.margin, promised};
}
