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

#ifndef MGLTG_SYNTHESIS_H
#define MGLTG_SYNTHESIS_H

#include <Eigen/Core>

#include "mgltg/ltg.h"
#include "mgltg/matchgate.h"

namespace mgltg {

/// a = u .* v with ||u||_2 = 1 and ||v||_2 = ||a||_1.
template <typename Scalar>
struct OneNormFactorization {
    VectorX<Scalar> u;
    VectorX<Scalar> v;
};

/// u_k = sqrt(|a_k| / ||a||_1), v_k = sign(a_k) sqrt(|a_k| ||a||_1).
/// For a = 0 returns u = e_1, v = 0.
template <typename Scalar>
OneNormFactorization<Scalar> factor_one_norm(const VectorX<Scalar> &a) {
    using std::abs;
    using std::sqrt;
    if (a.size() == 0) {
        throw InvalidInput("cannot factor an empty vector");
    }
    Scalar norm = a.cwiseAbs().sum();
    if (norm > Scalar(1 + kTolerance)) {
        throw InvalidInput("vector has 1-norm above 1");
    }
    OneNormFactorization<Scalar> out{VectorX<Scalar>::Zero(a.size()), VectorX<Scalar>::Zero(a.size())};
    if (norm == Scalar(0)) {
        out.u[0] = Scalar(1);
        return out;
    }
    for (Eigen::Index k = 0; k < a.size(); k++) {
        out.u[k] = sqrt(abs(a[k]) / norm);
        Scalar mag = sqrt(abs(a[k]) * norm);
        out.v[k] = a[k] < Scalar(0) ? -mag : mag;
    }
    return out;
}

/// A rotation in SO(2m) whose diag_coefficients equal a (||a||_1 <= 1, m >= 2).
///
/// The first two rows are rho = (u_1, 0, u_2, 0, ...) and
/// rho' = (w_1, v_1, w_2, v_2, ...), with w orthogonal to u and
/// ||w||_2^2 = 1 - ||v||_2^2; the rest is any orthonormal completion.
template <typename Scalar>
Rotation<Scalar> build_rotation(const VectorX<Scalar> &a) {
    using std::abs;
    using std::sqrt;
    Eigen::Index m = a.size();
    auto fac = factor_one_norm<Scalar>(a);
    Scalar w_norm_sq = Scalar(1) - fac.v.squaredNorm();
    if (w_norm_sq < Scalar(0)) {
        w_norm_sq = Scalar(0);
    }
    VectorX<Scalar> w = VectorX<Scalar>::Zero(m);
    if (w_norm_sq > Scalar(0)) {
        if (m < 2) {
            throw InvalidInput("a single qubit only realizes a = (1)");
        }
        // The basis direction least aligned with u is never parallel to it.
        Eigen::Index pick;
        fac.u.cwiseAbs().minCoeff(&pick);
        VectorX<Scalar> e = VectorX<Scalar>::Unit(m, pick);
        e -= fac.u * fac.u.dot(e);
        w = e.normalized() * sqrt(w_norm_sq);
    }
    MatrixX<Scalar> lead = MatrixX<Scalar>::Zero(2, 2 * m);
    for (Eigen::Index k = 0; k < m; k++) {
        lead(0, 2 * k) = fac.u[k];
        lead(1, 2 * k) = w[k];
        lead(1, 2 * k + 1) = fac.v[k];
    }
    if (m < 2) {
        // SO(2): the two rows are the whole matrix and must already have det +1.
        return Rotation<Scalar>(lead);
    }
    return Rotation<Scalar>(complete_special_orthogonal<Scalar>(lead));
}

/// Adjacent-Givens decomposition of R into zrot / xxrot gates. Plane
/// (2k-1, 2k) becomes a Z rotation on qubit k, plane (2k, 2k+1) an XX
/// rotation on qubits (k, k+1).
MatchgateCircuit rotation_to_circuit(const Rotationd &r);

struct SynthesisResult {
    MatchgateCircuit circuit;
    Rotationd rotation;
    LtgRepresentation<Rational> representation;
    Rational margin;
    double promised_probability;
};

/// (n+1)-qubit circuit for a normalized representation: on input (x, 0) the
/// first qubit reads f(x) with probability (1 + |w^T xhat + theta|)/2, so at
/// least (1 + margin)/2.
SynthesisResult synthesize_ltg_circuit(const LtgRepresentation<Rational> &rep);

}  // namespace mgltg

#endif
