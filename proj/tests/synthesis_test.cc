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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "mgltg/dense_oracle.h"

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

Eigen::VectorXd random_subunit_vector(std::mt19937_64 &rng, Eigen::Index size) {
    std::uniform_real_distribution<double> unit(-1, 1);
    std::uniform_real_distribution<double> scale(0, 1);
    Eigen::VectorXd a(size);
    for (Eigen::Index k = 0; k < size; k++) {
        a[k] = unit(rng);
    }
    return a * (scale(rng) / a.cwiseAbs().sum());
}

double dense_min_success(const MatchgateCircuit &c, const BooleanFunction &f) {
    size_t n = f.num_inputs();
    double worst = 1;
    for (uint64_t row = 0; row < f.num_rows(); row++) {
        auto x = BitString::from_index(row, n).padded(static_cast<size_t>(c.num_qubits()));
        worst = std::min(worst, oracle_success_probability(c, x, f.value(row)));
    }
    return worst;
}

}  // namespace

TEST(synthesis, factorization_examples) {
    auto f1 = factor_one_norm<double>(Eigen::Vector3d(1, 0, 0));
    EXPECT_EQ(f1.u, Eigen::Vector3d(1, 0, 0));
    EXPECT_EQ(f1.v, Eigen::Vector3d(1, 0, 0));
    auto f2 = factor_one_norm<double>(Eigen::Vector2d(0.5, 0.5));
    EXPECT_NEAR(f2.u[0], std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(f2.v[1], std::sqrt(0.5), 1e-15);
    auto f3 = factor_one_norm<double>(Eigen::Vector2d(0.5, -0.25));
    EXPECT_NEAR(f3.u[0], std::sqrt(2.0 / 3), 1e-15);
    EXPECT_NEAR(f3.u[1], std::sqrt(1.0 / 3), 1e-15);
    EXPECT_NEAR(f3.v[0], std::sqrt(3.0 / 8), 1e-15);
    EXPECT_NEAR(f3.v[1], -std::sqrt(3.0 / 16), 1e-15);
    EXPECT_NEAR(f3.v.norm(), 0.75, 1e-15);
}

TEST(synthesis, factorization_of_zero) {
    auto f = factor_one_norm<double>(Eigen::Vector3d::Zero());
    EXPECT_EQ(f.u, Eigen::Vector3d(1, 0, 0));
    EXPECT_EQ(f.v, Eigen::Vector3d::Zero());
    EXPECT_THROW(factor_one_norm<double>(Eigen::Vector2d(1, 1)), InvalidInput);
}

TEST(synthesis, factorization_identities_hold_on_random_vectors) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; trial++) {
        auto a = random_subunit_vector(rng, 1 + trial % 7);
        auto f = factor_one_norm<double>(a);
        EXPECT_LT((f.u.cwiseProduct(f.v) - a).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(f.u.norm(), 1, 1e-12);
        EXPECT_NEAR(f.v.norm(), a.cwiseAbs().sum(), 1e-12);
    }
}

TEST(synthesis, build_rotation_examples) {
    auto r1 = build_rotation<double>(Eigen::Vector3d(1, 0, 0));
    EXPECT_LT((diag_coefficients(r1) - Eigen::Vector3d(1, 0, 0)).cwiseAbs().maxCoeff(), 1e-12);
    Eigen::Vector4d maj(1.0 / 3, 1.0 / 3, 1.0 / 3, 0);
    EXPECT_LT((diag_coefficients(build_rotation<double>(maj)) - maj).cwiseAbs().maxCoeff(), 1e-9);
    auto r0 = build_rotation<double>(Eigen::Vector3d::Zero());
    EXPECT_LT(diag_coefficients(r0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(synthesis, build_rotation_round_trip) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 1000; trial++) {
        auto a = random_subunit_vector(rng, 2 + trial % 8);
        auto r = build_rotation<double>(a);
        EXPECT_LT((diag_coefficients(r) - a).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(synthesis, identity_rotation_gives_empty_circuit) {
    EXPECT_EQ(rotation_to_circuit(Rotationd::identity(3)).size(), 0u);
    EXPECT_EQ(rotation_to_circuit(Rotationd::identity(1)).size(), 0u);
}

TEST(synthesis, single_givens_gives_single_z_rotation) {
    double alpha = 0.7;
    Rotationd r(givens_matrix<double>(4, GivensFactor{0, alpha}));
    auto c = rotation_to_circuit(r);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.gates()[0].kind, GateKind::kZRotation);
    EXPECT_EQ(c.gates()[0].target, 1);
    EXPECT_NEAR(c.gates()[0].angle, alpha / 2, 1e-15);
    EXPECT_LT((oracle_rotation(c) - r.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(synthesis, one_qubit_rotations_other_than_identity_are_rejected) {
    Rotationd r(givens_matrix<double>(2, GivensFactor{0, 0.4}));
    EXPECT_THROW(rotation_to_circuit(r), InvalidInput);
}

TEST(synthesis, recompilation_round_trip) {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; trial++) {
        int m = 2 + trial % 5;
        auto r = random_rotation(m, rng);
        auto c = rotation_to_circuit(r);
        EXPECT_LT((compile_circuit(c).matrix() - r.matrix()).cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(synthesis, majority_circuit) {
    auto result = synthesize_ltg_circuit(make_rep({Q(1, 3), Q(1, 3), Q(1, 3)}, 0));
    EXPECT_EQ(result.circuit.num_qubits(), 4);
    EXPECT_NEAR(result.promised_probability, 2.0 / 3, 1e-15);
    EXPECT_EQ(result.margin, Q(1, 3));
    EXPECT_LT((compile_circuit(result.circuit).matrix() - result.rotation.matrix()).cwiseAbs().maxCoeff(), 1e-8);
    auto f = BooleanFunction::majority(3);
    EXPECT_NEAR(dense_min_success(result.circuit, f), 2.0 / 3, 1e-9);
    EXPECT_NEAR(expectation_z1(result.rotation, BitString::parse("0010")), 1.0 / 3, 1e-12);
    EXPECT_NEAR(success_probability(result.rotation, BitString::parse("0010"), false), 2.0 / 3, 1e-12);
    EXPECT_NEAR(computes_function(result.rotation, f), 2.0 / 3, 1e-9);
}

TEST(synthesis, single_bit_circuits_are_deterministic) {
    for (size_t k = 1; k <= 3; k++) {
        for (bool negated : {false, true}) {
            std::vector<Q> w(3, Q(0));
            w[k - 1] = negated ? Q(-1) : Q(1);
            auto result = synthesize_ltg_circuit(make_rep(w, 0));
            EXPECT_EQ(result.promised_probability, 1);
            EXPECT_NEAR(dense_min_success(result.circuit, BooleanFunction::dictator(3, k, negated)), 1, 1e-9);
        }
    }
}

TEST(synthesis, constant_zero_reads_zero_everywhere) {
    auto result = synthesize_ltg_circuit(make_rep({0, 0}, 1));
    EXPECT_EQ(result.promised_probability, 1);
    for (uint64_t row = 0; row < 4; row++) {
        auto x = BitString::from_index(row, 2).padded(3);
        EXPECT_NEAR(measure_qubit1_prob0(apply_circuit(result.circuit, x)), 1, 1e-9);
    }
}

TEST(synthesis, rejects_unnormalized_and_degenerate_representations) {
    EXPECT_THROW(synthesize_ltg_circuit(make_rep({1, 1}, 1)), InvalidInput);
    EXPECT_THROW(synthesize_ltg_circuit(make_rep({Q(1, 2), Q(1, 2)}, 0)), InvalidInput);
}

TEST(synthesis, no_rotation_beats_the_optimal_margin) {
    std::mt19937_64 rng(73);
    for (size_t n = 1; n <= 3; n++) {
        for (const auto &e : exhaustive_ltg_census(n)) {
            if (!e.certificate) {
                continue;
            }
            double ceiling = (1 + to_double(e.certificate->epsilon)) / 2 + 1e-8;
            auto synth = synthesize_ltg_circuit(e.certificate->rep);
            EXPECT_LE(computes_function(synth.rotation, e.function), ceiling);
            for (int trial = 0; trial < 20; trial++) {
                auto r = random_rotation(static_cast<int>(n + 1), rng);
                EXPECT_LE(computes_function(r, e.function), ceiling) << e.function.str();
            }
        }
    }
}
