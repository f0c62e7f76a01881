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

#ifndef MGLTG_LTG_H
#define MGLTG_LTG_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mgltg/boolean_function.h"
#include "mgltg/rational.h"
#include "mgltg/rotation.h"

namespace mgltg {

/// Largest n for anything that enumerates all 2^n inputs of one function.
inline constexpr size_t kMaxEnumerationInputs = 20;
/// Largest n for the whole-function census (2^(2^n) functions).
inline constexpr size_t kMaxCensusInputs = 4;
/// The margin LP runs in exact rational arithmetic up to this n ...
inline constexpr size_t kMaxExactLpInputs = 12;
/// ... and in double precision (tolerance 1e-9) up to this one.
inline constexpr size_t kMaxLpInputs = 16;

/// (w, theta) with (-1)^{f(x)} = sign(w^T xhat + theta).
template <typename Scalar>
struct LtgRepresentation {
    VectorX<Scalar> w;
    Scalar theta{};

    size_t num_inputs() const {
        return static_cast<size_t>(w.size());
    }

    Scalar one_norm() const {
        using std::abs;
        Scalar total = abs(theta);
        for (Eigen::Index k = 0; k < w.size(); k++) {
            total += abs(w[k]);
        }
        return total;
    }

    bool is_normalized(double tolerance = kTolerance) const {
        using std::abs;
        return abs(one_norm() - Scalar(1)) <= Scalar(tolerance);
    }

    /// Rescaled to unit 1-norm. Positive rescaling never changes the function.
    LtgRepresentation normalized() const {
        Scalar norm = one_norm();
        if (norm == Scalar(0)) {
            throw InvalidInput("the zero representation cannot be normalized");
        }
        return LtgRepresentation{w / norm, theta / norm};
    }

    template <typename To>
    LtgRepresentation<To> cast() const {
        LtgRepresentation<To> out;
        out.w.resize(w.size());
        for (Eigen::Index k = 0; k < w.size(); k++) {
            out.w[k] = static_cast<To>(w[k]);
        }
        out.theta = static_cast<To>(theta);
        return out;
    }
};

template <typename Scalar>
Scalar affine_value(const LtgRepresentation<Scalar> &rep, const BitString &x) {
    if (x.size() != rep.num_inputs()) {
        throw InvalidInput("input length " + std::to_string(x.size()) + " does not match representation size " +
                           std::to_string(rep.num_inputs()));
    }
    return rep.w.dot(x.template signs<Scalar>()) + rep.theta;
}

/// 0 iff w^T xhat + theta is strictly positive; a value of exactly 0 gives 1.
template <typename Scalar>
bool eval_ltg(const LtgRepresentation<Scalar> &rep, const BitString &x) {
    return !(affine_value(rep, x) > Scalar(0));
}

template <typename Scalar>
struct RepresentationMargin {
    Scalar margin;
    BitString witness;
};

/// min over all x of |w^T xhat + theta|, with a minimizing input. Raw: the
/// representation is not normalized first.
template <typename Scalar>
RepresentationMargin<Scalar> margin_of_representation(const LtgRepresentation<Scalar> &rep) {
    using std::abs;
    size_t n = rep.num_inputs();
    if (n > kMaxEnumerationInputs) {
        throw CapacityError("margin enumeration is limited to n <= " + std::to_string(kMaxEnumerationInputs));
    }
    RepresentationMargin<Scalar> best{Scalar(0), BitString(n)};
    for (uint64_t row = 0; row < (uint64_t{1} << n); row++) {
        BitString x = BitString::from_index(row, n);
        Scalar v = abs(affine_value(rep, x));
        if (row == 0 || v < best.margin) {
            best = {v, x};
        }
    }
    return best;
}

/// True iff eval_ltg agrees with f on every input.
template <typename Scalar>
bool represents(const LtgRepresentation<Scalar> &rep, const BooleanFunction &f) {
    if (rep.num_inputs() != f.num_inputs()) {
        return false;
    }
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        if (eval_ltg(rep, BitString::from_index(row, f.num_inputs())) != f.value(row)) {
            return false;
        }
    }
    return true;
}

/// Optimal margin with a normalized representation that attains it.
struct MarginCertificate {
    Rational epsilon;
    LtgRepresentation<Rational> rep;
    BitString witness;
    /// False when the double-precision LP fallback produced the representation;
    /// epsilon is then the exact margin of `rep`, optimal only up to 1e-9.
    bool exact = true;
};

/// Weights y over the input rows with y >= 0, sum y = 1 and
/// sum_x y_x (-1)^{f(x)} (xhat, 1) = 0: no (w, theta) can separate f with a
/// positive margin.
struct InfeasibilityCertificate {
    std::vector<Rational> weights;
    bool exact = true;
};

struct MarginResult {
    std::optional<MarginCertificate> certificate;
    std::optional<InfeasibilityCertificate> infeasibility;
    size_t lp_pivots = 0;

    bool is_ltg() const {
        return certificate.has_value();
    }
};

/// Solves  max eps  s.t.  (-1)^{f(x)} (w^T xhat + theta) >= eps for all x,
/// ||w||_1 + |theta| <= 1, with the 1-norm split into nonnegative parts.
MarginResult optimal_margin(const BooleanFunction &f);
bool is_ltg(const BooleanFunction &f);

/// Direct enumeration: every input clears epsilon, the representation has unit
/// 1-norm and the witness attains the margin.
bool check_margin_certificate(const BooleanFunction &f, const MarginCertificate &cert);
bool check_infeasibility_certificate(const BooleanFunction &f, const InfeasibilityCertificate &cert);

/// 1-based indices k with f(x) != f(x with bit k flipped) for some x.
std::vector<size_t> dependent_variables(const BooleanFunction &f);

struct IntegerRepresentation {
    std::vector<int64_t> v;
    int64_t phi = 0;

    int64_t weight() const;
    LtgRepresentation<Rational> as_rational() const;
};

/// Smallest d >= 1 with (n + 1) 2^-d < epsilon.
int truncation_bits(size_t num_inputs, const Rational &epsilon);

/// Truncates each |w_k| and |theta| after d binary digits (keeping signs) and
/// scales by 2^d. The result is checked to represent the same function on all
/// inputs; its weight is at most 2^d <= 2 (n + 1) / epsilon.
IntegerRepresentation truncate_to_integer(const LtgRepresentation<Rational> &rep, const Rational &epsilon);

struct IntegerWeightBounds {
    Rational lower;
    Rational upper;
    IntegerRepresentation achieved;
    MarginCertificate margin;
};

/// 1/eps <= omega <= 2 (n + 1)/eps, plus the truncation-achieved representation.
IntegerWeightBounds integer_weight_bounds(const BooleanFunction &f);

struct CensusEntry {
    BooleanFunction function;
    std::optional<MarginCertificate> certificate;
    std::vector<size_t> dependent;
};

/// Every n-bit function, ordered by BooleanFunction::from_code.
std::vector<CensusEntry> exhaustive_ltg_census(size_t num_inputs);

}  // namespace mgltg

#endif
