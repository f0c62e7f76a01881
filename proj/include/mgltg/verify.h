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

#ifndef MGLTG_VERIFY_H
#define MGLTG_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "mgltg/ltg.h"

namespace mgltg {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct OracleCheckConfig {
    size_t num_circuits = 50;
    int min_qubits = 2;
    int max_qubits = 6;
    size_t gates_per_circuit = 20;
    /// Registers up to this size are checked on every basis input.
    int exhaustive_max_qubits = 6;
    /// Random inputs per circuit on larger registers.
    size_t random_inputs = 64;
    uint64_t seed = 1;
    double tolerance = 1e-9;
};

/// Rotation-path <Z_1> against the dense state vector on random circuits.
CheckResult check_oracle_equivalence(const OracleCheckConfig &config);

/// Every certificate in the census is valid, margin > 1/2 implies constant or
/// single-bit, and each LTG has at most 1/eps dependent variables, each with
/// |w_k| >= eps.
CheckResult check_census(const std::vector<CensusEntry> &census, size_t num_inputs);

/// diag_coefficients(build_rotation(a)) == a and
/// compile_circuit(rotation_to_circuit(R)) == R on random samples.
CheckResult check_round_trips(size_t num_vectors, size_t num_rotations, int max_qubits, uint64_t seed);

/// For every LTG in the census, the synthesized circuit reaches (eps+1)/2 on all
/// inputs (dense simulation) with equality at the margin witness.
CheckResult check_synthesis(const std::vector<CensusEntry> &census, double tolerance = 1e-8);

/// For every LTG in the census, exact WMS probabilities equal the dense-simulated
/// circuit probabilities input by input.
CheckResult check_wms_equivalence(const std::vector<CensusEntry> &census, double tolerance = 1e-8);

/// Samples the WMS program of 3-bit majority on input 001 and checks that the
/// empirical success rate is within 3 sigma of 2/3.
CheckResult check_wms_sampling(uint64_t samples, uint64_t seed);

enum class VerifyLevel { kFast, kFull };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::kFast;
    uint64_t seed = 1;
    /// 0 selects the level default.
    uint64_t samples = 0;
    double tolerance = 1e-9;
};

/// fast: oracle runs on m <= 6, census n <= 2.
/// full: oracle runs on m <= 10, census n <= 4, 10^5 WMS samples.
std::vector<CheckResult> run_verification(const VerifyOptions &options);

}  // namespace mgltg

#endif
