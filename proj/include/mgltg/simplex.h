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

#ifndef MGLTG_SIMPLEX_H
#define MGLTG_SIMPLEX_H

#include <cmath>
#include <utility>
#include <vector>

#include "mgltg/errors.h"

namespace mgltg {

/// Sign tests used by the simplex. Exact types compare against zero; floating
/// point compares against a fixed tolerance.
template <typename Scalar>
struct SimplexTraits {
    static constexpr bool exact = true;
    static bool positive(const Scalar &x) {
        return x > 0;
    }
    static bool negative(const Scalar &x) {
        return x < 0;
    }
};

template <>
struct SimplexTraits<double> {
    static constexpr bool exact = false;
    static constexpr double eps = 1e-9;
    static bool positive(double x) {
        return x > eps;
    }
    static bool negative(double x) {
        return x < -eps;
    }
};

enum class LpStatus {
    kOptimal,
    kInfeasible,
    kUnbounded,
};

template <typename Scalar>
struct LpSolution {
    LpStatus status;
    Scalar value;
    std::vector<Scalar> primal;
    /// One multiplier per constraint row; y >= 0, A^T y >= c and b^T y = value at optimum.
    std::vector<Scalar> dual;
};

/// maximize c^T x  subject to  A x <= b, x >= 0.
///
/// Dictionary simplex in the style of the KACTL codebook, with Bland's
/// smallest-index rule for both entering and leaving variables so that it
/// terminates on the heavily degenerate programs produced by margin problems.
/// An auxiliary phase runs only when some b_i < 0.
template <typename Scalar>
class Simplex {
   public:
    using Traits = SimplexTraits<Scalar>;

    Simplex(const std::vector<std::vector<Scalar>> &a, const std::vector<Scalar> &b, const std::vector<Scalar> &c)
        : rows_(static_cast<int>(b.size())),
          cols_(static_cast<int>(c.size())),
          nonbasic_(cols_ + 1),
          basic_(rows_),
          dict_(rows_ + 2, std::vector<Scalar>(cols_ + 2, Scalar(0))) {
        if (a.size() != b.size()) {
            throw InvalidInput("constraint matrix and bound vector disagree on row count");
        }
        for (int i = 0; i < rows_; i++) {
            if (static_cast<int>(a[i].size()) != cols_) {
                throw InvalidInput("constraint row has the wrong number of columns");
            }
            for (int j = 0; j < cols_; j++) {
                dict_[i][j] = a[i][j];
            }
            basic_[i] = cols_ + i;
            dict_[i][cols_] = Scalar(-1);
            dict_[i][cols_ + 1] = b[i];
        }
        for (int j = 0; j < cols_; j++) {
            nonbasic_[j] = j;
            dict_[rows_][j] = -c[j];
        }
        nonbasic_[cols_] = -1;
        dict_[rows_ + 1][cols_] = Scalar(1);
    }

    LpSolution<Scalar> solve() {
        LpSolution<Scalar> out;
        int r = 0;
        for (int i = 1; i < rows_; i++) {
            if (dict_[i][cols_ + 1] < dict_[r][cols_ + 1]) {
                r = i;
            }
        }
        if (rows_ > 0 && Traits::negative(dict_[r][cols_ + 1])) {
            pivot(r, cols_);
            if (!run(2) || Traits::negative(dict_[rows_ + 1][cols_ + 1])) {
                out.status = LpStatus::kInfeasible;
                return out;
            }
            for (int i = 0; i < rows_; i++) {
                if (basic_[i] == -1) {
                    int s = 0;
                    for (int j = 1; j <= cols_; j++) {
                        if (s == -1 || std::make_pair(dict_[i][j], nonbasic_[j]) <
                                            std::make_pair(dict_[i][s], nonbasic_[s])) {
                            s = j;
                        }
                    }
                    pivot(i, s);
                }
            }
        }
        if (!run(1)) {
            out.status = LpStatus::kUnbounded;
            return out;
        }
        out.status = LpStatus::kOptimal;
        out.value = dict_[rows_][cols_ + 1];
        out.primal.assign(cols_, Scalar(0));
        for (int i = 0; i < rows_; i++) {
            if (basic_[i] >= 0 && basic_[i] < cols_) {
                out.primal[basic_[i]] = dict_[i][cols_ + 1];
            }
        }
        out.dual.assign(rows_, Scalar(0));
        for (int j = 0; j <= cols_; j++) {
            if (nonbasic_[j] >= cols_) {
                out.dual[nonbasic_[j] - cols_] = dict_[rows_][j];
            }
        }
        return out;
    }

    size_t pivot_count() const {
        return pivots_;
    }

   private:
    void pivot(int r, int s) {
        pivots_++;
        std::vector<Scalar> &pivot_row = dict_[r];
        Scalar inv = Scalar(1) / pivot_row[s];
        for (int i = 0; i < rows_ + 2; i++) {
            if (i == r || is_zero(dict_[i][s])) {
                continue;
            }
            std::vector<Scalar> &row = dict_[i];
            Scalar factor = row[s] * inv;
            for (int j = 0; j < cols_ + 2; j++) {
                if (!is_zero(pivot_row[j])) {
                    row[j] -= pivot_row[j] * factor;
                }
            }
            row[s] = pivot_row[s] * factor;
        }
        for (int j = 0; j < cols_ + 2; j++) {
            if (j != s) {
                pivot_row[j] *= inv;
            }
        }
        for (int i = 0; i < rows_ + 2; i++) {
            if (i != r) {
                dict_[i][s] *= -inv;
            }
        }
        pivot_row[s] = inv;
        std::swap(basic_[r], nonbasic_[s]);
    }

    // Bland's rule on objective row rows_ + phase - 1.
    bool run(int phase) {
        int obj = rows_ + phase - 1;
        for (;;) {
            int s = -1;
            for (int j = 0; j <= cols_; j++) {
                if (nonbasic_[j] == -phase) {
                    continue;
                }
                if (Traits::negative(dict_[obj][j]) && (s == -1 || nonbasic_[j] < nonbasic_[s])) {
                    s = j;
                }
            }
            if (s == -1) {
                return true;
            }
            int r = -1;
            Scalar best_ratio{};
            for (int i = 0; i < rows_; i++) {
                if (!Traits::positive(dict_[i][s])) {
                    continue;
                }
                Scalar ratio = dict_[i][cols_ + 1] / dict_[i][s];
                if (r == -1 || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[r])) {
                    r = i;
                    best_ratio = ratio;
                }
            }
            if (r == -1) {
                return false;
            }
            pivot(r, s);
        }
    }

    static bool is_zero(const Scalar &x) {
        if constexpr (Traits::exact) {
            return x == 0;
        } else {
            return std::abs(x) <= Traits::eps * 1e-3;
        }
    }

    int rows_;
    int cols_;
    std::vector<int> nonbasic_;
    std::vector<int> basic_;
    std::vector<std::vector<Scalar>> dict_;
    size_t pivots_ = 0;
};

}  // namespace mgltg

#endif
