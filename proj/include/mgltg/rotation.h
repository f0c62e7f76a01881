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

#ifndef MGLTG_ROTATION_H
#define MGLTG_ROTATION_H

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mgltg/boolean_function.h"
#include "mgltg/errors.h"

namespace mgltg {

/// Shared numerical tolerance for unitarity, orthogonality and 1-norm checks.
inline constexpr double kTolerance = 1e-9;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// max |(R^T R - I)_{ij}|.
template <typename Derived>
typename Derived::Scalar orthogonality_error(const Eigen::MatrixBase<Derived> &r) {
    using Scalar = typename Derived::Scalar;
    if (r.rows() != r.cols()) {
        return Scalar(INFINITY);
    }
    return (r.transpose() * r - MatrixX<Scalar>::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_special_orthogonal(const Eigen::MatrixBase<Derived> &r, double tolerance = kTolerance) {
    using std::abs;
    using Scalar = typename Derived::Scalar;
    if (r.rows() != r.cols() || r.rows() == 0) {
        return false;
    }
    if (orthogonality_error(r) > Scalar(tolerance)) {
        return false;
    }
    return abs(r.determinant() - Scalar(1)) <= Scalar(tolerance);
}

/// An element of SO(2m) describing how a matchgate circuit U acts on the
/// Jordan-Wigner operators: U^dag c_mu U = sum_nu R(mu, nu) c_nu.
///
/// Coordinates are 0-based here: mode operators c_{2k-1}, c_{2k} of qubit k
/// (1-based) live at rows 2k-2 and 2k-1.
template <typename Scalar>
class Rotation {
   public:
    using Matrix = MatrixX<Scalar>;

    explicit Rotation(Matrix matrix, double tolerance = kTolerance) : matrix_(std::move(matrix)) {
        if (matrix_.rows() == 0 || matrix_.rows() % 2 != 0 || matrix_.rows() != matrix_.cols()) {
            throw InvalidInput("a rotation must be a non-empty square matrix of even dimension");
        }
        using std::abs;
        if (orthogonality_error(matrix_) > Scalar(tolerance)) {
            throw InvalidInput("rotation is not orthogonal (R^T R != I)");
        }
        if (abs(matrix_.determinant() - Scalar(1)) > Scalar(tolerance)) {
            throw InvalidInput("rotation does not have determinant +1");
        }
    }

    static Rotation identity(Eigen::Index num_qubits) {
        if (num_qubits < 1) {
            throw InvalidInput("a register needs at least one qubit");
        }
        return Rotation(Matrix::Identity(2 * num_qubits, 2 * num_qubits));
    }

    const Matrix &matrix() const {
        return matrix_;
    }
    Eigen::Index dim() const {
        return matrix_.rows();
    }
    Eigen::Index num_qubits() const {
        return matrix_.rows() / 2;
    }
    Scalar operator()(Eigen::Index row, Eigen::Index col) const {
        return matrix_(row, col);
    }

   private:
    Matrix matrix_;
};

using Rotationd = Rotation<double>;

/// Coefficients a with diag(U^dag Z_1 U) = sum_k a_k Z_k, read off the first
/// two rows of R: a_k = R(0, 2k-2) R(1, 2k-1) - R(0, 2k-1) R(1, 2k-2).
template <typename Derived>
VectorX<typename Derived::Scalar> diag_coefficients(const Eigen::MatrixBase<Derived> &r) {
    using Scalar = typename Derived::Scalar;
    Eigen::Index m = r.rows() / 2;
    VectorX<Scalar> a(m);
    for (Eigen::Index k = 0; k < m; k++) {
        a[k] = r(0, 2 * k) * r(1, 2 * k + 1) - r(0, 2 * k + 1) * r(1, 2 * k);
    }
    return a;
}

template <typename Scalar>
VectorX<Scalar> diag_coefficients(const Rotation<Scalar> &r) {
    using std::abs;
    VectorX<Scalar> a = diag_coefficients(r.matrix());
    if (a.cwiseAbs().sum() > Scalar(1 + kTolerance)) {
        throw VerificationError("diagonal coefficients exceed unit 1-norm");
    }
    return a;
}

/// <x| U^dag Z_1 U |x> = a^T xhat.
template <typename Scalar>
Scalar expectation_z1(const Rotation<Scalar> &r, const BitString &x) {
    if (static_cast<Eigen::Index>(x.size()) != r.num_qubits()) {
        throw InvalidInput("input length " + std::to_string(x.size()) + " does not match register size " +
                           std::to_string(r.num_qubits()));
    }
    return diag_coefficients(r).dot(x.signs<Scalar>());
}

/// Probability that measuring qubit 1 of U|x> yields `target`.
template <typename Scalar>
Scalar success_probability(const Rotation<Scalar> &r, const BitString &x, bool target) {
    Scalar z = expectation_z1(r, x);
    return target ? (Scalar(1) - z) / Scalar(2) : (Scalar(1) + z) / Scalar(2);
}

/// min over n-bit x of the probability that U|x,0...0> reads out f(x) on qubit 1.
template <typename Scalar>
Scalar computes_function(const Rotation<Scalar> &r, const BooleanFunction &f) {
    auto m = static_cast<size_t>(r.num_qubits());
    size_t n = f.num_inputs();
    if (m < n) {
        throw InvalidInput("register of " + std::to_string(m) + " qubits is too small for a " + std::to_string(n) +
                           "-bit function");
    }
    VectorX<Scalar> a = diag_coefficients(r);
    // Zero ancillas contribute +a_k each.
    Scalar offset = a.tail(static_cast<Eigen::Index>(m - n)).sum();
    Scalar worst = Scalar(1);
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        BitString x = BitString::from_index(row, n);
        Scalar z = a.head(static_cast<Eigen::Index>(n)).dot(x.signs<Scalar>()) + offset;
        Scalar p = f.value(row) ? (Scalar(1) - z) / Scalar(2) : (Scalar(1) + z) / Scalar(2);
        if (p < worst) {
            worst = p;
        }
    }
    return worst;
}

/// A rotation by `angle` in the coordinate plane (plane, plane+1), 0-based,
/// with block [[cos, sin], [-sin, cos]].
struct GivensFactor {
    Eigen::Index plane;
    double angle;
};

template <typename Scalar>
MatrixX<Scalar> givens_matrix(Eigen::Index dim, const GivensFactor &g) {
    using std::cos;
    using std::sin;
    MatrixX<Scalar> out = MatrixX<Scalar>::Identity(dim, dim);
    Scalar c = cos(Scalar(g.angle));
    Scalar s = sin(Scalar(g.angle));
    out(g.plane, g.plane) = c;
    out(g.plane, g.plane + 1) = s;
    out(g.plane + 1, g.plane) = -s;
    out(g.plane + 1, g.plane + 1) = c;
    return out;
}

/// Factor R = G_1 G_2 ... G_K into adjacent-plane Givens rotations.
///
/// Sub-diagonal entries are zeroed column by column, bottom to top, each with a
/// rotation in the plane directly above it. Rotations are chosen so that every
/// diagonal pivot comes out positive; since det R = +1 the reduced matrix is
/// then exactly the identity. Entries already within `skip` of their target
/// emit no factor.
template <typename Scalar>
std::vector<GivensFactor> adjacent_givens_factors(const Rotation<Scalar> &r, double skip = 1e-14) {
    using std::atan2;
    using std::abs;
    MatrixX<Scalar> work = r.matrix();
    Eigen::Index dim = work.rows();
    std::vector<GivensFactor> eliminations;
    for (Eigen::Index col = 0; col + 1 < dim; col++) {
        for (Eigen::Index row = dim - 1; row > col; row--) {
            Scalar x = work(row - 1, col);
            Scalar y = work(row, col);
            if (abs(y) <= Scalar(skip) && (x > Scalar(0) || row - 1 > col)) {
                continue;
            }
            double angle = static_cast<double>(atan2(y, x));
            GivensFactor g{row - 1, angle};
            Scalar c = std::cos(Scalar(angle));
            Scalar s = std::sin(Scalar(angle));
            auto upper = work.row(row - 1).eval();
            auto lower = work.row(row).eval();
            work.row(row - 1) = c * upper + s * lower;
            work.row(row) = -s * upper + c * lower;
            eliminations.push_back(g);
        }
    }
    // Q_K ... Q_1 R = I, so R = Q_1^T ... Q_K^T.
    std::vector<GivensFactor> factors;
    factors.reserve(eliminations.size());
    for (const auto &g : eliminations) {
        factors.push_back(GivensFactor{g.plane, -g.angle});
    }
    return factors;
}

/// Extend orthonormal rows to a full SO(d) matrix by Gram-Schmidt over the
/// standard basis. Candidates with residual norm below `drop` are skipped; the
/// last row is negated if the determinant comes out -1.
template <typename Scalar>
MatrixX<Scalar> complete_special_orthogonal(const MatrixX<Scalar> &leading_rows, double drop = 1e-8) {
    using std::sqrt;
    Eigen::Index d = leading_rows.cols();
    Eigen::Index k = leading_rows.rows();
    if (k > d) {
        throw InvalidInput("more leading rows than columns");
    }
    MatrixX<Scalar> out(d, d);
    out.topRows(k) = leading_rows;
    Eigen::Index filled = k;
    for (Eigen::Index e = 0; e < d && filled < d; e++) {
        VectorX<Scalar> v = VectorX<Scalar>::Unit(d, e);
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; pass++) {
            for (Eigen::Index i = 0; i < filled; i++) {
                v -= out.row(i).transpose() * out.row(i).dot(v.transpose());
            }
        }
        Scalar norm = v.norm();
        if (norm < Scalar(drop)) {
            continue;
        }
        out.row(filled++) = (v / norm).transpose();
    }
    if (filled != d) {
        throw VerificationError("orthogonal completion ran out of candidate vectors");
    }
    if (out.determinant() < Scalar(0)) {
        if (k == d) {
            throw InvalidInput("leading rows already form a full matrix with determinant -1");
        }
        out.row(d - 1) *= Scalar(-1);
    }
    return out;
}

}  // namespace mgltg

#endif
