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

#include "mgltg/verify.h"

#include "gtest/gtest.h"

using namespace mgltg;

TEST(verify, fast_suite_passes) {
    VerifyOptions opt;
    opt.level = VerifyLevel::kFast;
    auto results = run_verification(opt);
    EXPECT_GE(results.size(), 5u);
    for (const auto &r : results) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    }
}

TEST(verify, census_check_catches_a_bad_certificate) {
    auto census = exhaustive_ltg_census(2);
    EXPECT_TRUE(check_census(census, 2).passed);
    for (auto &e : census) {
        if (e.certificate && e.certificate->epsilon < 1) {
            e.certificate->epsilon = 1;
            break;
        }
    }
    EXPECT_FALSE(check_census(census, 2).passed);
}

TEST(verify, oracle_check_reports_counts) {
    OracleCheckConfig config;
    config.num_circuits = 5;
    config.min_qubits = 7;
    config.max_qubits = 7;
    config.random_inputs = 4;
    auto r = check_oracle_equivalence(config);
    EXPECT_TRUE(r.passed);
    EXPECT_NE(r.detail.find("20 inputs"), std::string::npos);
}
