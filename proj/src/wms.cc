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

#include "mgltg/wms.h"

#include <algorithm>
#include <cmath>

#include "mgltg/dense_oracle.h"
#include "mgltg/synthesis.h"

using namespace mgltg;

WmsProgram::WmsProgram(std::vector<Rational> pi_in, BitString c_in) : pi(std::move(pi_in)), c(std::move(c_in)) {
    if (pi.empty()) {
        throw InvalidInput("a WMS distribution needs at least one entry");
    }
    if (pi.size() != c.size()) {
        throw InvalidInput("pi and c must both have length n + 1");
    }
    Rational total = 0;
    for (const auto &p : pi) {
        if (p < 0) {
            throw InvalidInput("WMS probabilities must be nonnegative");
        }
        total += p;
    }
    if (abs(total - 1) > Rational(kTolerance)) {
        throw InvalidInput("WMS probabilities must sum to 1");
    }
}

WmsProgram mgltg::from_representation(const LtgRepresentation<Rational> &rep) {
    if (abs(rep.one_norm() - 1) > Rational(kTolerance)) {
        throw InvalidInput("representation is not normalized (||w||_1 + |theta| must be 1)");
    }
    size_t n = rep.num_inputs();
    std::vector<Rational> pi;
    BitString c(n + 1);
    for (size_t k = 0; k < n; k++) {
        const Rational &wk = rep.w[static_cast<Eigen::Index>(k)];
        pi.push_back(abs(wk));
        c.set(k, wk < 0);
    }
    pi.push_back(abs(rep.theta));
    c.set(n, rep.theta < 0);
    return WmsProgram(std::move(pi), std::move(c));
}

LtgRepresentation<Rational> mgltg::to_representation(const WmsProgram &prog) {
    size_t n = prog.num_inputs();
    LtgRepresentation<Rational> rep;
    rep.w.resize(static_cast<Eigen::Index>(n));
    for (size_t k = 0; k < n; k++) {
        rep.w[static_cast<Eigen::Index>(k)] = prog.c[k] ? Rational(-prog.pi[k]) : prog.pi[k];
    }
    rep.theta = prog.c[n] ? Rational(-prog.pi[n]) : prog.pi[n];
    return rep;
}

Rational mgltg::exact_output_expectation(const WmsProgram &prog, const BitString &x) {
    size_t n = prog.num_inputs();
    if (x.size() != n) {
        throw InvalidInput("input length " + std::to_string(x.size()) + " does not match program size " +
                           std::to_string(n));
    }
    Rational total = 0;
    for (size_t k = 0; k < n; k++) {
        total += (x[k] ^ prog.c[k]) ? Rational(-prog.pi[k]) : prog.pi[k];
    }
    total += prog.c[n] ? Rational(-prog.pi[n]) : prog.pi[n];
    return total;
}

Rational mgltg::exact_success_probability(const WmsProgram &prog, const BooleanFunction &f, const BitString &x) {
    if (f.num_inputs() != prog.num_inputs()) {
        throw InvalidInput("function and program disagree on the number of inputs");
    }
    Rational z = exact_output_expectation(prog, x);
    return f(x) ? (1 - z) / 2 : (1 + z) / 2;
}

WmsSampler::WmsSampler(const WmsProgram &prog, uint64_t seed) : prog_(prog), rng_(seed) {
    double acc = 0;
    for (const auto &p : prog.pi) {
        acc += to_double(p);
        cumulative_.push_back(acc);
    }
}

bool WmsSampler::draw(const BitString &x) {
    size_t n = prog_.num_inputs();
    if (x.size() != n) {
        throw InvalidInput("input length does not match program size");
    }
    double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    size_t k = static_cast<size_t>(it - cumulative_.begin());
    if (k > n) {
        // Only reachable when rounding leaves the total just below u; take the
        // last index that has positive mass.
        k = n;
        while (k > 0 && prog_.pi[k] == 0) {
            k--;
        }
    }
    if (k == n) {
        return prog_.c[n] != 0;
    }
    return (x[k] ^ prog_.c[k]) != 0;
}

uint64_t WmsSampler::count_zeros(const BitString &x, uint64_t samples) {
    uint64_t zeros = 0;
    for (uint64_t s = 0; s < samples; s++) {
        zeros += draw(x) ? 0 : 1;
    }
    return zeros;
}

bool mgltg::sample(const WmsProgram &prog, const BitString &x, uint64_t seed) {
    WmsSampler sampler(prog, seed);
    return sampler.draw(x);
}

EquivalenceReport mgltg::equivalence_check(const BooleanFunction &f, double tolerance) {
    auto margin = optimal_margin(f);
    if (!margin.is_ltg()) {
        throw InvalidInput("function " + f.str() + " is not a linear threshold gate");
    }
    const auto &rep = margin.certificate->rep;
    WmsProgram prog = from_representation(rep);
    SynthesisResult synth = synthesize_ltg_circuit(rep);
    size_t n = f.num_inputs();
    EquivalenceReport report;
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        BitString x = BitString::from_index(row, n);
        double wms_p = to_double(exact_success_probability(prog, f, x));
        double circuit_p = oracle_success_probability(synth.circuit, x.padded(n + 1), f.value(row));
        report.max_discrepancy = std::max(report.max_discrepancy, std::abs(wms_p - circuit_p));
        report.rows.push_back({x, wms_p, circuit_p});
    }
    report.passed = report.max_discrepancy <= tolerance;
    return report;
}
