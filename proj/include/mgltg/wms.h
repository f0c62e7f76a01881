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

#ifndef MGLTG_WMS_H
#define MGLTG_WMS_H

#include <cstdint>
#include <random>
#include <vector>

#include "mgltg/boolean_function.h"
#include "mgltg/ltg.h"

namespace mgltg {

/// Weighted majority sampling: draw k ~ pi on {1, ..., n+1}; output
/// x_k XOR c_k for k <= n, or c_{n+1} for k = n+1.
struct WmsProgram {
    std::vector<Rational> pi;
    BitString c;

    WmsProgram(std::vector<Rational> pi, BitString c);

    size_t num_inputs() const {
        return pi.size() - 1;
    }
};

/// pi_k = |w_k|, pi_{n+1} = |theta|, c_k = 1 iff the weight is negative.
/// Zero weights get c_k = 0.
WmsProgram from_representation(const LtgRepresentation<Rational> &rep);

/// Inverse map: w_k = (-1)^{c_k} pi_k, theta = (-1)^{c_{n+1}} pi_{n+1}.
LtgRepresentation<Rational> to_representation(const WmsProgram &prog);

/// Expected value of (-1)^{z_out} on input x.
Rational exact_output_expectation(const WmsProgram &prog, const BitString &x);

/// Probability that the procedure outputs f(x).
Rational exact_success_probability(const WmsProgram &prog, const BooleanFunction &f, const BitString &x);

/// One draw of the procedure.
///
/// Randomness is std::mt19937_64 seeded with `seed`: each draw takes one 64-bit
/// output, keeps its top 53 bits as u in [0, 1), and returns the first index k
/// whose cumulative probability exceeds u.
class WmsSampler {
   public:
    WmsSampler(const WmsProgram &prog, uint64_t seed);

    bool draw(const BitString &x);
    /// Number of zero outputs among `samples` draws.
    uint64_t count_zeros(const BitString &x, uint64_t samples);

   private:
    WmsProgram prog_;
    std::vector<double> cumulative_;
    std::mt19937_64 rng_;
};

bool sample(const WmsProgram &prog, const BitString &x, uint64_t seed);

struct EquivalenceRow {
    BitString input;
    double wms_probability;
    double circuit_probability;
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    double max_discrepancy = 0;
    bool passed = false;
};

/// Builds the WMS program and the synthesized circuit from the same optimal
/// representation of f and compares their success probabilities input by
/// input; the circuit side runs on the dense simulator (n <= 13).
EquivalenceReport equivalence_check(const BooleanFunction &f, double tolerance = 1e-8);

}  // namespace mgltg

#endif
