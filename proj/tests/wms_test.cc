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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

using namespace mgltg;

namespace {

using Q = Rational;

LtgRepresentation<Q> make_rep(std::vector<Q> w, Q theta) {
    LtgRepresentation<Q> rep;
    rep.w.resize(static_cast<Eigen::Index>(w.size()));
    for (size_t k = 0; k < w.size(); k++) {
        rep.w[static_cast<Eigen::Index>(k)] = w[k];
    }
    rep.theta = theta;
    return rep;
}

WmsProgram majority_program() {
    return from_representation(make_rep({Q(1, 3), Q(1, 3), Q(1, 3)}, 0));
}

}  // namespace

TEST(wms, program_of_majority) {
    auto prog = majority_program();
    EXPECT_EQ(prog.pi, (std::vector<Q>{Q(1, 3), Q(1, 3), Q(1, 3), Q(0)}));
    EXPECT_EQ(prog.c.str(), "0000");
    EXPECT_EQ(prog.num_inputs(), 3u);
}

TEST(wms, program_of_negation_and_constant) {
    auto neg = from_representation(make_rep({-1}, 0));
    EXPECT_EQ(neg.pi, (std::vector<Q>{Q(1), Q(0)}));
    EXPECT_EQ(neg.c.str(), "10");
    auto zero = from_representation(make_rep({0, 0}, 1));
    EXPECT_EQ(zero.pi, (std::vector<Q>{Q(0), Q(0), Q(1)}));
    EXPECT_EQ(zero.c.str(), "000");
}

TEST(wms, representation_round_trip) {
    auto rep = make_rep({Q(-1, 4), Q(1, 2)}, Q(-1, 4));
    auto prog = from_representation(rep);
    EXPECT_EQ(prog.c.str(), "101");
    auto back = to_representation(prog);
    EXPECT_EQ(back.w, rep.w);
    EXPECT_EQ(back.theta, rep.theta);
}

TEST(wms, program_validation) {
    EXPECT_THROW(WmsProgram({Q(1, 2), Q(1, 4)}, BitString::parse("00")), InvalidInput);
    EXPECT_THROW(WmsProgram({Q(3, 2), Q(-1, 2)}, BitString::parse("00")), InvalidInput);
    EXPECT_THROW(WmsProgram({Q(1)}, BitString::parse("00")), InvalidInput);
    EXPECT_THROW(from_representation(make_rep({1, 1}, 0)), InvalidInput);
}

TEST(wms, exact_expectations) {
    auto prog = majority_program();
    EXPECT_EQ(exact_output_expectation(prog, BitString::parse("001")), Q(1, 3));
    auto zero = from_representation(make_rep({0, 0, 0}, 1));
    for (uint64_t row = 0; row < 8; row++) {
        EXPECT_EQ(exact_output_expectation(zero, BitString::from_index(row, 3)), 1);
    }
    EXPECT_THROW(exact_output_expectation(prog, BitString::parse("01")), InvalidInput);
}

TEST(wms, complementing_c_negates_the_expectation) {
    auto prog = from_representation(make_rep({Q(1, 5), Q(-2, 5)}, Q(2, 5)));
    BitString flipped(prog.c.size());
    for (size_t k = 0; k < prog.c.size(); k++) {
        flipped.set(k, !prog.c[k]);
    }
    WmsProgram complement(prog.pi, flipped);
    for (uint64_t row = 0; row < 4; row++) {
        auto x = BitString::from_index(row, 2);
        EXPECT_EQ(exact_output_expectation(complement, x), -exact_output_expectation(prog, x));
    }
}

TEST(wms, expectation_equals_affine_value_exactly) {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + trial % 10;
        LtgRepresentation<Q> rep;
        rep.w.resize(static_cast<Eigen::Index>(n));
        do {
            for (size_t k = 0; k < n; k++) {
                rep.w[static_cast<Eigen::Index>(k)] = coeff(rng);
            }
            rep.theta = coeff(rng);
        } while (rep.one_norm() == 0);
        rep = rep.normalized();
        auto prog = from_representation(rep);
        for (int s = 0; s < 16; s++) {
            auto x = BitString::from_index(rng() % (uint64_t{1} << n), n);
            EXPECT_EQ(exact_output_expectation(prog, x), affine_value(rep, x));
        }
    }
}

TEST(wms, success_probabilities) {
    auto prog = majority_program();
    auto f = BooleanFunction::majority(3);
    EXPECT_EQ(exact_success_probability(prog, f, BitString::parse("001")), Q(2, 3));
    EXPECT_EQ(exact_success_probability(prog, f, BitString::parse("000")), 1);
    auto zero = from_representation(make_rep({0, 0}, 1));
    auto constant = BooleanFunction::constant(2, false);
    for (uint64_t row = 0; row < 4; row++) {
        EXPECT_EQ(exact_success_probability(zero, constant, BitString::from_index(row, 2)), 1);
    }
}

TEST(wms, degenerate_distributions_are_deterministic) {
    WmsProgram second({Q(0), Q(1), Q(0), Q(0)}, BitString::parse("0000"));
    WmsProgram last({Q(0), Q(0), Q(0), Q(1)}, BitString::parse("0001"));
    WmsSampler s2(second, 3);
    WmsSampler s3(last, 3);
    for (uint64_t row = 0; row < 8; row++) {
        auto x = BitString::from_index(row, 3);
        for (int k = 0; k < 20; k++) {
            EXPECT_EQ(s2.draw(x), x[1] != 0);
            EXPECT_TRUE(s3.draw(x));
        }
    }
}

TEST(wms, sampling_is_seed_deterministic) {
    auto prog = majority_program();
    auto x = BitString::parse("001");
    WmsSampler a(prog, 99);
    WmsSampler b(prog, 99);
    for (int k = 0; k < 100; k++) {
        EXPECT_EQ(a.draw(x), b.draw(x));
    }
    EXPECT_EQ(sample(prog, x, 5), sample(prog, x, 5));
}

TEST(wms, majority_samples_within_three_sigma) {
    uint64_t samples = 100000;
    WmsSampler sampler(majority_program(), 20261018);
    uint64_t zeros = sampler.count_zeros(BitString::parse("001"), samples);
    double p = 2.0 / 3;
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    EXPECT_LT(std::abs(static_cast<double>(zeros) / static_cast<double>(samples) - p), 3 * sigma);
}

TEST(wms, output_frequencies_pass_chi_squared) {
    std::vector<WmsProgram> programs{
        majority_program(),
        from_representation(make_rep({Q(1, 5), Q(-2, 5)}, Q(2, 5))),
        from_representation(make_rep({Q(1, 8), Q(1, 8), Q(-1, 8), Q(1, 8)}, Q(1, 2))),
    };
    uint64_t samples = 50000;
    uint64_t seed = 7;
    for (const auto &prog : programs) {
        size_t n = prog.num_inputs();
        for (uint64_t row = 0; row < (uint64_t{1} << n); row++) {
            auto x = BitString::from_index(row, n);
            double p0 = to_double((1 + exact_output_expectation(prog, x)) / 2);
            if (p0 == 0 || p0 == 1) {
                continue;
            }
            WmsSampler sampler(prog, seed++);
            double zeros = static_cast<double>(sampler.count_zeros(x, samples));
            double ones = static_cast<double>(samples) - zeros;
            double e0 = p0 * static_cast<double>(samples);
            double e1 = (1 - p0) * static_cast<double>(samples);
            double chi2 = (zeros - e0) * (zeros - e0) / e0 + (ones - e1) * (ones - e1) / e1;
            EXPECT_LT(chi2, 10.828) << x.str();
        }
    }
}

TEST(wms, equivalence_with_synthesized_circuits) {
    for (const auto &f : {BooleanFunction::majority(3), BooleanFunction::dictator(3, 1),
                          BooleanFunction::constant(2, true), BooleanFunction::conjunction(3)}) {
        auto report = equivalence_check(f);
        EXPECT_TRUE(report.passed) << f.str();
        EXPECT_EQ(report.rows.size(), f.num_rows());
        EXPECT_LT(report.max_discrepancy, 1e-8);
    }
    auto maj = equivalence_check(BooleanFunction::majority(3));
    EXPECT_NEAR(maj.rows[1].wms_probability, 2.0 / 3, 1e-12);
    EXPECT_NEAR(maj.rows[0].wms_probability, 1, 1e-12);
    EXPECT_THROW(equivalence_check(BooleanFunction::parity(2)), InvalidInput);
}
