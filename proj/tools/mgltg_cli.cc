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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mgltg/dense_oracle.h"
#include "mgltg/json_io.h"
#include "mgltg/synthesis.h"
#include "mgltg/verify.h"
#include "mgltg/wms.h"

using namespace mgltg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerification = 4;

// Dense cross-checks of synthesized circuits are skipped above this many inputs.
constexpr size_t kDenseCheckMaxInputs = 8;

struct Options {
    std::string input;
    std::string output;
    std::string backend = "both";
    uint64_t seed = 1;
    uint64_t samples = 100000;
    double tolerance = kTolerance;
    std::string level = "fast";
    std::string circuit;
    std::string representation;
    std::string program;
    size_t census_n = 2;
};

void emit(const Options &opt, const std::string &text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) {
        throw InvalidInput("cannot write " + opt.output);
    }
    out << text;
}

void emit_json(const Options &opt, const Json &j) {
    emit(opt, j.dump(2) + "\n");
}

BooleanFunction require_table(const Options &opt) {
    if (opt.input.empty()) {
        throw InvalidInput("--input <truth table> is required");
    }
    return BooleanFunction::parse(opt.input);
}

int cmd_analyze(const Options &opt) {
    auto f = require_table(opt);
    Json report = analysis_report(f);
    emit_json(opt, report);
    std::string table = f.str();
    if (table.size() > 64) {
        table = table.substr(0, 61) + "...";
    }
    std::cerr << "n = " << f.num_inputs() << ", table " << table << ": ";
    if (report["is_ltg"].get<bool>()) {
        std::cerr << "LTG with margin " << report["margin"]["num"] << "/" << report["margin"]["den"]
                  << ", optimal success probability " << report["optimal_probability"]["value"] << "\n";
    } else {
        std::cerr << "not a linear threshold gate (LP infeasible)\n";
    }
    return kExitOk;
}

LtgRepresentation<Rational> synthesis_input(const Options &opt) {
    if (!opt.representation.empty()) {
        auto rep = representation_from_json(read_json_file(opt.representation));
        if (rep.one_norm() == 0) {
            throw InvalidInput("the zero representation defines no gate");
        }
        return rep.normalized();
    }
    auto f = require_table(opt);
    auto result = optimal_margin(f);
    if (!result.is_ltg()) {
        std::string weights;
        for (const auto &y : result.infeasibility->weights) {
            weights += (weights.empty() ? "" : ",") + to_string(y);
        }
        throw InvalidInput("function " + f.str() + " is not a linear threshold gate: the margin LP is infeasible "
                           "(dual certificate y = [" + weights + "])");
    }
    return result.certificate->rep;
}

void verify_synthesis(const SynthesisResult &result, double tolerance) {
    auto compiled = compile_circuit(result.circuit);
    double drift = (compiled.matrix() - result.rotation.matrix()).cwiseAbs().maxCoeff();
    if (drift > 1e-8) {
        throw VerificationError("compiled circuit differs from the target rotation by " + std::to_string(drift));
    }
    const auto &rep = result.representation;
    size_t n = rep.num_inputs();
    auto f = BooleanFunction::from_predicate(n, [&](const BitString &x) { return eval_ltg(rep, x); });
    double worst = computes_function(compiled, f);
    if (worst < result.promised_probability - tolerance) {
        throw VerificationError("circuit success probability " + std::to_string(worst) + " is below the promised " +
                                std::to_string(result.promised_probability));
    }
    if (n <= kDenseCheckMaxInputs) {
        for (uint64_t row = 0; row < f.num_rows(); row++) {
            auto x = BitString::from_index(row, n);
            double p = oracle_success_probability(result.circuit, x.padded(n + 1), f.value(row));
            if (p < result.promised_probability - tolerance) {
                throw VerificationError("dense simulation gives p = " + std::to_string(p) + " on input " + x.str());
            }
        }
    }
}

int cmd_synthesize(const Options &opt) {
    auto rep = synthesis_input(opt);
    auto result = synthesize_ltg_circuit(rep);
    verify_synthesis(result, std::max(opt.tolerance, 1e-8));
    emit_json(opt, synthesis_to_json(result));
    std::cerr << result.circuit.num_qubits() << "-qubit circuit with " << result.circuit.size()
              << " gates, promised success probability " << result.promised_probability << "\n";
    return kExitOk;
}

BitString circuit_input(const Options &opt, int num_qubits) {
    if (opt.input.empty()) {
        throw InvalidInput("--input <bits> is required");
    }
    auto x = BitString::parse(opt.input);
    if (x.size() > static_cast<size_t>(num_qubits)) {
        throw InvalidInput("input has " + std::to_string(x.size()) + " bits but the circuit has " +
                           std::to_string(num_qubits) + " qubits");
    }
    return x.padded(static_cast<size_t>(num_qubits));
}

int cmd_simulate(const Options &opt) {
    if (opt.circuit.empty()) {
        throw InvalidInput("--circuit <file> is required");
    }
    auto circuit = circuit_from_json(read_json_file(opt.circuit));
    auto x = circuit_input(opt, circuit.num_qubits());
    Json out;
    out["num_qubits"] = circuit.num_qubits();
    out["input"] = x.str();
    out["backend"] = opt.backend;
    double z_rot = 0, z_dense = 0;
    if (opt.backend == "rotation" || opt.backend == "both") {
        z_rot = expectation_z1(compile_circuit(circuit), x);
        out["rotation"] = Json{{"p0", (1 + z_rot) / 2}, {"z1", z_rot}};
    }
    if (opt.backend == "dense" || opt.backend == "both") {
        z_dense = oracle_expectation_z1(circuit, x);
        out["dense"] = Json{{"p0", (1 + z_dense) / 2}, {"z1", z_dense}};
    }
    if (opt.backend == "both") {
        double gap = std::abs(z_rot - z_dense);
        out["discrepancy"] = gap;
        emit_json(opt, out);
        if (gap > opt.tolerance) {
            std::cerr << "backends disagree: |dZ| = " << gap << "\n";
            return kExitVerification;
        }
        return kExitOk;
    }
    emit_json(opt, out);
    return kExitOk;
}

WmsProgram wms_program(const Options &opt) {
    if (!opt.program.empty()) {
        return program_from_json(read_json_file(opt.program));
    }
    if (!opt.representation.empty()) {
        auto rep = representation_from_json(read_json_file(opt.representation));
        return from_representation(rep.normalized());
    }
    throw InvalidInput("--program <file> or --representation <file> is required");
}

int cmd_wms_compile(const Options &opt) {
    emit_json(opt, program_to_json(wms_program(opt)));
    return kExitOk;
}

int cmd_wms_run(const Options &opt) {
    auto prog = wms_program(opt);
    if (opt.input.empty()) {
        throw InvalidInput("--input <bits> is required");
    }
    auto x = BitString::parse(opt.input);
    if (opt.samples == 0) {
        throw InvalidInput("--samples must be positive");
    }
    Rational z = exact_output_expectation(prog, x);
    WmsSampler sampler(prog, opt.seed);
    uint64_t zeros = sampler.count_zeros(x, opt.samples);
    Json out;
    out["input"] = x.str();
    out["exact_p0"] = rational_to_json((1 + z) / 2);
    out["exact_z"] = rational_to_json(z);
    out["samples"] = opt.samples;
    out["seed"] = opt.seed;
    out["zeros"] = zeros;
    out["empirical_p0"] = static_cast<double>(zeros) / static_cast<double>(opt.samples);
    emit_json(opt, out);
    return kExitOk;
}

int cmd_verify(const Options &opt) {
    VerifyOptions v;
    if (opt.level == "fast") {
        v.level = VerifyLevel::kFast;
    } else if (opt.level == "full") {
        v.level = VerifyLevel::kFull;
    } else {
        throw InvalidInput("--level must be fast or full");
    }
    v.seed = opt.seed;
    v.tolerance = opt.tolerance;
    bool all = true;
    std::string text;
    for (const auto &r : run_verification(v)) {
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
        all = all && r.passed;
    }
    emit(opt, text);
    return all ? kExitOk : kExitVerification;
}

int cmd_census(const Options &opt) {
    emit(opt, census_to_csv(exhaustive_ltg_census(opt.census_n)));
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Matchgate circuits for linear threshold gates"};
    app.require_subcommand(1);
    Options opt;

    auto *analyze = app.add_subcommand("analyze", "Margin, optimal probability and integer weights of a truth table");
    analyze->add_option("--input,-i", opt.input, "Truth table (binary, or hex with 0x prefix)")->required();
    analyze->add_option("--output,-o", opt.output, "Write the JSON report here instead of stdout");

    auto *synthesize = app.add_subcommand("synthesize", "Matchgate circuit for an LTG");
    synthesize->add_option("--input,-i", opt.input, "Truth table");
    synthesize->add_option("--representation,-r", opt.representation, "Representation JSON {\"w\": [...], \"theta\": t}");
    synthesize->add_option("--output,-o", opt.output, "Write the circuit JSON here instead of stdout");
    synthesize->add_option("--tolerance", opt.tolerance, "Verification tolerance");

    auto *simulate = app.add_subcommand("simulate", "p0 and <Z1> of a circuit on a basis input");
    simulate->add_option("--circuit,-c", opt.circuit, "Circuit JSON")->required();
    simulate->add_option("--input,-i", opt.input, "Input bits (zero-padded to the register size)")->required();
    simulate->add_option("--backend,-b", opt.backend, "rotation, dense or both")
        ->check(CLI::IsMember({"rotation", "dense", "both"}));
    simulate->add_option("--tolerance", opt.tolerance, "Allowed backend discrepancy");
    simulate->add_option("--output,-o", opt.output, "Write the JSON result here instead of stdout");

    auto *wms = app.add_subcommand("wms", "Weighted majority sampling");
    wms->require_subcommand(1);
    auto *wms_run = wms->add_subcommand("run", "Exact and sampled output distribution on one input");
    auto *wms_compile = wms->add_subcommand("compile", "WMS program of a representation");
    for (auto *sub : {wms_run, wms_compile}) {
        sub->add_option("--program,-p", opt.program, "Program JSON {\"pi\": [...], \"c\": \"bits\"}");
        sub->add_option("--representation,-r", opt.representation, "Representation JSON");
        sub->add_option("--output,-o", opt.output, "Write the JSON result here instead of stdout");
    }
    wms_run->add_option("--input,-i", opt.input, "Input bits")->required();
    wms_run->add_option("--samples,-s", opt.samples, "Number of samples");
    wms_run->add_option("--seed", opt.seed, "Sampler seed");

    auto *verify = app.add_subcommand("verify", "Run the self-check suite");
    verify->add_option("--level,-l", opt.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--seed", opt.seed, "Seed for random circuits and sampling");
    verify->add_option("--tolerance", opt.tolerance, "Oracle-equivalence tolerance");
    verify->add_option("--output,-o", opt.output, "Write the report here instead of stdout");

    auto *census = app.add_subcommand("census", "Classify every n-input function (CSV)");
    census->add_option("--n,-n", opt.census_n, "Number of inputs (1..4)")->required();
    census->add_option("--output,-o", opt.output, "Write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (*analyze) {
            return cmd_analyze(opt);
        }
        if (*synthesize) {
            return cmd_synthesize(opt);
        }
        if (*simulate) {
            return cmd_simulate(opt);
        }
        if (*wms_run) {
            return cmd_wms_run(opt);
        }
        if (*wms_compile) {
            return cmd_wms_compile(opt);
        }
        if (*verify) {
            return cmd_verify(opt);
        }
        if (*census) {
            return cmd_census(opt);
        }
    } catch (const InvalidInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const CapacityError &e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const VerificationError &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInvalidInput;
}
