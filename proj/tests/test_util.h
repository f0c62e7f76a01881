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

// Brute-force reference implementations shared by the tests. None of them
// call into the library code they are used to check.

#ifndef MGLTG_TESTS_TEST_UTIL_H
#define MGLTG_TESTS_TEST_UTIL_H

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

#include "mgltg/boolean_function.h"

namespace mgltg::testing {

/// (-1)^{bit k of row}, with k = 0 the most significant of n bits.
inline int sign_of_bit(uint64_t row, size_t n, size_t k) {
    return ((row >> (n - 1 - k)) & 1) ? -1 : 1;
}

/// Calls visit(v, phi) for every integer vector in [-bound, bound]^{n+1}.
inline void for_each_integer_rep(size_t n, int bound, const std::function<void(const std::vector<int> &, int)> &visit) {
    std::vector<int> coeffs(n + 1, -bound);
    while (true) {
        std::vector<int> v(coeffs.begin(), coeffs.begin() + static_cast<long>(n));
        visit(v, coeffs[n]);
        size_t k = 0;
        while (k <= n && coeffs[k] == bound) {
            coeffs[k] = -bound;
            k++;
        }
        if (k > n) {
            return;
        }
        coeffs[k]++;
    }
}

/// min over x of (-1)^{f(x)} (v . xhat + phi), or nullopt if some input
/// disagrees or sits on the hyperplane.
inline std::optional<int> integer_slack(const BooleanFunction &f, const std::vector<int> &v, int phi) {
    size_t n = f.num_inputs();
    std::optional<int> worst;
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        int s = phi;
        for (size_t k = 0; k < n; k++) {
            s += v[k] * sign_of_bit(row, n, k);
        }
        int signed_s = f.value(row) ? -s : s;
        if (signed_s <= 0) {
            return std::nullopt;
        }
        if (!worst || signed_s < *worst) {
            worst = signed_s;
        }
    }
    return worst;
}

/// Smallest ||v||_1 + |phi| over integer representations of f with entries
/// bounded by `bound`, or nullopt if none exists in the box.
inline std::optional<int> brute_force_min_weight(const BooleanFunction &f, int bound) {
    std::optional<int> best;
    for_each_integer_rep(f.num_inputs(), bound, [&](const std::vector<int> &v, int phi) {
        if (!integer_slack(f, v, phi)) {
            return;
        }
        int weight = std::abs(phi);
        for (int x : v) {
            weight += std::abs(x);
        }
        if (!best || weight < *best) {
            best = weight;
        }
    });
    return best;
}

/// Largest normalized margin slack / (||v||_1 + |phi|) over the integer box.
inline double brute_force_margin_lower_bound(const BooleanFunction &f, int bound) {
    double best = 0;
    for_each_integer_rep(f.num_inputs(), bound, [&](const std::vector<int> &v, int phi) {
        auto slack = integer_slack(f, v, phi);
        if (!slack) {
            return;
        }
        int weight = std::abs(phi);
        for (int x : v) {
            weight += std::abs(x);
        }
        best = std::max(best, static_cast<double>(*slack) / weight);
    });
    return best;
}

}  // namespace mgltg::testing

#endif
