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

#include <cmath>
#include <random>
#include <sstream>

#include "mgltg/dense_oracle.h"
#include "mgltg/matchgate.h"
#include "mgltg/synthesis.h"
#include "mgltg/wms.h"

using namespace mgltg;

namespace {

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

CheckResult fail(std::string name, std::string detail) {
    return CheckResult{std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult mgltg::check_oracle_equivalence(const OracleCheckConfig &config) {
    std::string name = "oracle_equivalence";
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> pick_m(config.min_qubits, config.max_qubits);
    double worst = 0;
    size_t evaluations = 0;
    for (size_t c = 0; c < config.num_circuits; c++) {
        int m = pick_m(rng);
        auto circuit = random_circuit(m, config.gates_per_circuit, rng);
        auto rotation = compile_circuit(circuit);
        auto one = [&](const BitString &x) {
            double fast = expectation_z1(rotation, x);
            double dense = oracle_expectation_z1(circuit, x);
            worst = std::max(worst, std::abs(fast - dense));
            evaluations++;
        };
        if (m <= config.exhaustive_max_qubits) {
            for (uint64_t row = 0; row < (uint64_t{1} << m); row++) {
                one(BitString::from_index(row, static_cast<size_t>(m)));
            }
        } else {
            std::uniform_int_distribution<uint64_t> pick_row(0, (uint64_t{1} << m) - 1);
            for (size_t s = 0; s < config.random_inputs; s++) {
                one(BitString::from_index(pick_row(rng), static_cast<size_t>(m)));
            }
        }
    }
    std::string detail = std::to_string(config.num_circuits) + " circuits, " + std::to_string(evaluations) +
                         " inputs, max |dZ| = " + fmt(worst);
    return CheckResult{name, worst <= config.tolerance, detail};
}

CheckResult mgltg::check_census(const std::vector<CensusEntry> &census, size_t num_inputs) {
    std::string name = "census_n" + std::to_string(num_inputs);
    size_t ltg_count = 0;
    for (const auto &e : census) {
        if (e.function.num_inputs() != num_inputs) {
            return fail(name, "census entry " + e.function.str() + " has the wrong arity");
        }
        if (!e.certificate) {
            continue;
        }
        ltg_count++;
        const auto &cert = *e.certificate;
        if (!check_margin_certificate(e.function, cert)) {
            return fail(name, "invalid margin certificate for " + e.function.str());
        }
        double eps = to_double(cert.epsilon);
        if (eps > 0.5 + 1e-6 && e.dependent.size() > 1) {
            return fail(name, e.function.str() + " has margin " + to_string(cert.epsilon) + " but depends on " +
                                  std::to_string(e.dependent.size()) + " variables");
        }
        if (static_cast<double>(e.dependent.size()) > 1 / eps + 1e-6) {
            return fail(name, e.function.str() + " has more than 1/eps dependent variables");
        }
        for (size_t k : e.dependent) {
            if (abs(cert.rep.w[static_cast<Eigen::Index>(k - 1)]) < cert.epsilon) {
                return fail(name, e.function.str() + ": dependent variable " + std::to_string(k) + " has |w| < eps");
            }
        }
    }
    return CheckResult{name, true, std::to_string(census.size()) + " functions, " + std::to_string(ltg_count) + " LTGs"};
}

CheckResult mgltg::check_round_trips(size_t num_vectors, size_t num_rotations, int max_qubits, uint64_t seed) {
    std::string name = "round_trips";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.0, 1.0);
    std::uniform_int_distribution<int> pick_len(2, max_qubits);
    double worst_a = 0;
    for (size_t s = 0; s < num_vectors; s++) {
        Eigen::VectorXd a(pick_len(rng));
        for (Eigen::Index k = 0; k < a.size(); k++) {
            a[k] = unit(rng);
        }
        a *= scale(rng) / a.cwiseAbs().sum();
        auto r = build_rotation<double>(a);
        worst_a = std::max(worst_a, (diag_coefficients(r) - a).cwiseAbs().maxCoeff());
    }
    double worst_r = 0;
    std::uniform_int_distribution<int> pick_m(1, max_qubits);
    for (size_t s = 0; s < num_rotations; s++) {
        int m = pick_m(rng);
        auto r = m == 1 ? Rotationd::identity(1) : random_rotation(m, rng);
        auto back = compile_circuit(rotation_to_circuit(r));
        worst_r = std::max(worst_r, (back.matrix() - r.matrix()).cwiseAbs().maxCoeff());
    }
    std::string detail = "max |da| = " + fmt(worst_a) + ", max |dR| = " + fmt(worst_r);
    return CheckResult{name, worst_a <= 1e-9 && worst_r <= 1e-8, detail};
}

CheckResult mgltg::check_synthesis(const std::vector<CensusEntry> &census, double tolerance) {
    std::string name = "synthesis";
    size_t count = 0;
    for (const auto &e : census) {
        if (!e.certificate) {
            continue;
        }
        const auto &cert = *e.certificate;
        auto synth = synthesize_ltg_circuit(cert.rep);
        size_t n = e.function.num_inputs();
        double promised = (1 + to_double(cert.epsilon)) / 2;
        double at_witness = 0;
        for (uint64_t row = 0; row < e.function.num_rows(); row++) {
            auto x = BitString::from_index(row, n);
            double p = oracle_success_probability(synth.circuit, x.padded(n + 1), e.function.value(row));
            if (p < promised - tolerance) {
                return fail(name, e.function.str() + " on input " + x.str() + ": p = " + std::to_string(p) +
                                      " < " + std::to_string(promised));
            }
            if (x.index() == cert.witness.index()) {
                at_witness = p;
            }
        }
        if (std::abs(at_witness - promised) > tolerance) {
            return fail(name, e.function.str() + ": witness input " + cert.witness.str() + " gives p = " +
                                  std::to_string(at_witness) + ", expected " + std::to_string(promised));
        }
        count++;
    }
    return CheckResult{name, true, std::to_string(count) + " LTG circuits"};
}

CheckResult mgltg::check_wms_equivalence(const std::vector<CensusEntry> &census, double tolerance) {
    std::string name = "wms_equivalence";
    double worst = 0;
    size_t count = 0;
    for (const auto &e : census) {
        if (!e.certificate) {
            continue;
        }
        const auto &rep = e.certificate->rep;
        auto prog = from_representation(rep);
        auto synth = synthesize_ltg_circuit(rep);
        size_t n = e.function.num_inputs();
        for (uint64_t row = 0; row < e.function.num_rows(); row++) {
            auto x = BitString::from_index(row, n);
            double wms_p = to_double(exact_success_probability(prog, e.function, x));
            double circuit_p = oracle_success_probability(synth.circuit, x.padded(n + 1), e.function.value(row));
            worst = std::max(worst, std::abs(wms_p - circuit_p));
        }
        count++;
    }
    return CheckResult{name, worst <= tolerance, std::to_string(count) + " LTGs, max |dp| = " + fmt(worst)};
}

CheckResult mgltg::check_wms_sampling(uint64_t samples, uint64_t seed) {
    std::string name = "wms_sampling";
    auto f = BooleanFunction::majority(3);
    auto cert = optimal_margin(f).certificate;
    auto prog = from_representation(cert->rep);
    auto x = BitString::parse("001");
    WmsSampler sampler(prog, seed);
    uint64_t zeros = sampler.count_zeros(x, samples);
    uint64_t successes = f(x) ? samples - zeros : zeros;
    double p = 2.0 / 3.0;
    double rate = static_cast<double>(successes) / static_cast<double>(samples);
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    double z = (rate - p) / sigma;
    std::ostringstream detail;
    detail << samples << " samples, rate " << rate << ", z = " << z;
    return CheckResult{name, std::abs(z) <= 3, detail.str()};
}

std::vector<CheckResult> mgltg::run_verification(const VerifyOptions &options) {
    bool full = options.level == VerifyLevel::kFull;
    std::vector<CheckResult> out;

    OracleCheckConfig oracle;
    oracle.num_circuits = full ? 200 : 50;
    oracle.max_qubits = full ? 10 : 6;
    oracle.seed = options.seed;
    oracle.tolerance = options.tolerance;
    out.push_back(check_oracle_equivalence(oracle));

    out.push_back(check_round_trips(full ? 1000 : 100, full ? 100 : 20, 6, options.seed));

    size_t max_census = full ? 4 : 2;
    for (size_t n = 2; n <= max_census; n++) {
        auto census = exhaustive_ltg_census(n);
        out.push_back(check_census(census, n));
        if (n <= 3) {
            auto synth = check_synthesis(census);
            synth.name += "_n" + std::to_string(n);
            out.push_back(synth);
            auto wms = check_wms_equivalence(census);
            wms.name += "_n" + std::to_string(n);
            out.push_back(wms);
        }
    }

    uint64_t samples = options.samples != 0 ? options.samples : (full ? 100000 : 10000);
    out.push_back(check_wms_sampling(samples, options.seed));
    return out;
}
