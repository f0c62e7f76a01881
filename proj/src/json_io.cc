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

#include "mgltg/json_io.h"

#include <fstream>
#include <sstream>

using namespace mgltg;
using cd = std::complex<double>;

namespace {

Json block_to_json(const Eigen::Matrix2cd &b) {
    Json out = Json::array();
    for (int i = 0; i < 2; i++) {
        Json row = Json::array();
        for (int j = 0; j < 2; j++) {
            row.push_back(Json::array({b(i, j).real(), b(i, j).imag()}));
        }
        out.push_back(row);
    }
    return out;
}

Eigen::Matrix2cd block_from_json(const Json &j, const char *name) {
    if (!j.is_array() || j.size() != 2) {
        throw InvalidInput(std::string("block ") + name + " must be a 2x2 array of [re, im] pairs");
    }
    Eigen::Matrix2cd b;
    for (int i = 0; i < 2; i++) {
        if (!j[i].is_array() || j[i].size() != 2) {
            throw InvalidInput(std::string("block ") + name + " must be a 2x2 array of [re, im] pairs");
        }
        for (int k = 0; k < 2; k++) {
            const Json &entry = j[i][k];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                throw InvalidInput(std::string("block ") + name + " entries must be [re, im] number pairs");
            }
            b(i, k) = cd(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return b;
}

int get_int(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw InvalidInput(std::string("missing or non-integer field \"") + key + "\"");
    }
    return j[key].get<int>();
}

double get_number(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw InvalidInput(std::string("missing or non-numeric field \"") + key + "\"");
    }
    return j[key].get<double>();
}

Json integer_to_json(const Integer &z) {
    if (z >= std::numeric_limits<int64_t>::min() && z <= std::numeric_limits<int64_t>::max()) {
        return Json(z.convert_to<int64_t>());
    }
    return Json(z.str());
}

}  // namespace

Json mgltg::circuit_to_json(const MatchgateCircuit &circuit) {
    Json gates = Json::array();
    for (const auto &g : circuit.gates()) {
        Json gj;
        switch (g.kind) {
            case GateKind::kFswap:
                gj["kind"] = "fswap";
                gj["qubit"] = g.qubit;
                break;
            case GateKind::kZRotation:
                gj["kind"] = "zrot";
                gj["qubit"] = g.target;
                gj["angle"] = g.angle;
                break;
            case GateKind::kXXRotation:
                gj["kind"] = "xxrot";
                gj["qubit"] = g.qubit;
                gj["angle"] = g.angle;
                break;
            case GateKind::kMatchgate:
                gj["kind"] = "matchgate";
                gj["qubit"] = g.qubit;
                gj["A"] = block_to_json(g.outer);
                gj["B"] = block_to_json(g.inner);
                break;
        }
        gates.push_back(std::move(gj));
    }
    Json out;
    out["num_qubits"] = circuit.num_qubits();
    out["gates"] = std::move(gates);
    return out;
}

MatchgateCircuit mgltg::circuit_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InvalidInput("circuit JSON must be an object");
    }
    int m = get_int(j, "num_qubits");
    if (m < 1) {
        throw InvalidInput("num_qubits must be at least 1");
    }
    MatchgateCircuit circuit(m);
    if (!j.contains("gates") || !j["gates"].is_array()) {
        throw InvalidInput("circuit JSON needs a \"gates\" array");
    }
    size_t index = 0;
    for (const auto &gj : j["gates"]) {
        try {
            if (!gj.is_object() || !gj.contains("kind") || !gj["kind"].is_string()) {
                throw InvalidInput("gate needs a string \"kind\"");
            }
            auto kind = gj["kind"].get<std::string>();
            int qubit = get_int(gj, "qubit");
            if (kind == "matchgate") {
                if (!gj.contains("A") || !gj.contains("B")) {
                    throw InvalidInput("matchgate needs blocks \"A\" and \"B\"");
                }
                circuit.append(Matchgate::from_blocks(block_from_json(gj["A"], "A"), block_from_json(gj["B"], "B"), qubit));
            } else if (kind == "fswap") {
                circuit.append(Matchgate::fswap(qubit));
            } else if (kind == "zrot") {
                circuit.append(Matchgate::z_rotation(qubit, get_number(gj, "angle"), m));
            } else if (kind == "xxrot") {
                circuit.append(Matchgate::xx_rotation(qubit, get_number(gj, "angle")));
            } else {
                throw InvalidInput("unknown gate kind \"" + kind + "\"");
            }
        } catch (const InvalidInput &e) {
            throw InvalidInput("gate " + std::to_string(index) + ": " + e.what());
        }
        index++;
    }
    return circuit;
}

Json mgltg::rotation_to_json(const Rotationd &r) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < r.dim(); i++) {
        for (Eigen::Index k = 0; k < r.dim(); k++) {
            entries.push_back(r(i, k));
        }
    }
    Json out;
    out["dim"] = r.dim();
    out["entries"] = std::move(entries);
    return out;
}

Json mgltg::rational_to_json(const Rational &q) {
    Json out;
    out["num"] = integer_to_json(Integer(numerator(q)));
    out["den"] = integer_to_json(Integer(denominator(q)));
    out["value"] = to_double(q);
    return out;
}

Rational mgltg::rational_from_json(const Json &j) {
    if (j.is_number_integer()) {
        return Rational(j.get<int64_t>());
    }
    if (j.is_number()) {
        double x = j.get<double>();
        if (!std::isfinite(x)) {
            throw InvalidInput("non-finite number");
        }
        return Rational(x);
    }
    if (j.is_string()) {
        auto text = j.get<std::string>();
        try {
            Rational q(text);
            return q;
        } catch (const std::exception &) {
            throw InvalidInput("cannot parse \"" + text + "\" as a rational");
        }
    }
    throw InvalidInput("expected a number or a \"p/q\" string");
}

Json mgltg::representation_to_json(const LtgRepresentation<Rational> &rep) {
    Json w = Json::array();
    Json w_exact = Json::array();
    for (Eigen::Index k = 0; k < rep.w.size(); k++) {
        w.push_back(to_double(rep.w[k]));
        w_exact.push_back(to_string(rep.w[k]));
    }
    Json out;
    out["w"] = std::move(w);
    out["theta"] = to_double(rep.theta);
    out["exact"] = Json{{"w", std::move(w_exact)}, {"theta", to_string(rep.theta)}};
    return out;
}

LtgRepresentation<Rational> mgltg::representation_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InvalidInput("representation JSON must be an object");
    }
    // Prefer the exact block when present.
    const Json &src = (j.contains("exact") && j["exact"].is_object()) ? j["exact"] : j;
    if (!src.contains("w") || !src["w"].is_array() || !src.contains("theta")) {
        throw InvalidInput("representation JSON needs \"w\" (array) and \"theta\"");
    }
    LtgRepresentation<Rational> rep;
    rep.w.resize(static_cast<Eigen::Index>(src["w"].size()));
    for (size_t k = 0; k < src["w"].size(); k++) {
        rep.w[static_cast<Eigen::Index>(k)] = rational_from_json(src["w"][k]);
    }
    rep.theta = rational_from_json(src["theta"]);
    return rep;
}

Json mgltg::program_to_json(const WmsProgram &prog) {
    Json pi = Json::array();
    for (const auto &p : prog.pi) {
        pi.push_back(to_double(p));
    }
    Json out;
    out["pi"] = std::move(pi);
    out["c"] = prog.c.str();
    return out;
}

WmsProgram mgltg::program_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("pi") || !j["pi"].is_array() || !j.contains("c") || !j["c"].is_string()) {
        throw InvalidInput("WMS program JSON needs \"pi\" (array) and \"c\" (bit string)");
    }
    std::vector<Rational> pi;
    for (const auto &p : j["pi"]) {
        pi.push_back(rational_from_json(p));
    }
    return WmsProgram(std::move(pi), BitString::parse(j["c"].get<std::string>()));
}

Json mgltg::synthesis_to_json(const SynthesisResult &result) {
    Json out = circuit_to_json(result.circuit);
    Json meta;
    meta["n"] = result.representation.num_inputs();
    meta["margin"] = to_double(result.margin);
    meta["margin_exact"] = rational_to_json(result.margin);
    meta["promised_probability"] = result.promised_probability;
    meta["representation"] = representation_to_json(result.representation);
    meta["gate_count"] = result.circuit.size();
    meta["rotation"] = rotation_to_json(result.rotation);
    out["metadata"] = std::move(meta);
    return out;
}

Json mgltg::analysis_report(const BooleanFunction &f) {
    Json out;
    out["table"] = f.str();
    out["n"] = f.num_inputs();
    auto result = optimal_margin(f);
    out["is_ltg"] = result.is_ltg();
    Json dep = Json::array();
    for (auto k : dependent_variables(f)) {
        dep.push_back(k);
    }
    out["dependent_variables"] = std::move(dep);
    if (result.is_ltg()) {
        const auto &cert = *result.certificate;
        out["margin"] = rational_to_json(cert.epsilon);
        out["margin_exact"] = cert.exact;
        out["optimal_probability"] = rational_to_json((cert.epsilon + 1) / 2);
        out["representation"] = representation_to_json(cert.rep);
        out["witness_input"] = cert.witness.str();
        auto ints = truncate_to_integer(cert.rep, cert.epsilon);
        Json v = Json::array();
        for (auto x : ints.v) {
            v.push_back(x);
        }
        Rational lower = Rational(1) / cert.epsilon;
        Rational upper = Rational(static_cast<long>(2 * (f.num_inputs() + 1))) / cert.epsilon;
        out["integer_weight"] = Json{{"lower", rational_to_json(lower)},
                                     {"upper", rational_to_json(upper)},
                                     {"achieved", Json{{"v", std::move(v)}, {"phi", ints.phi}, {"weight", ints.weight()}}}};
    } else {
        Json y = Json::array();
        for (const auto &q : result.infeasibility->weights) {
            y.push_back(to_string(q));
        }
        out["infeasibility_certificate"] = Json{{"weights", std::move(y)}, {"exact", result.infeasibility->exact}};
    }
    return out;
}

std::string mgltg::census_to_csv(const std::vector<CensusEntry> &census) {
    std::ostringstream out;
    out << "table,is_ltg,margin_num,margin_den,dep_count\n";
    for (const auto &e : census) {
        out << e.function.str() << ',' << (e.certificate ? 1 : 0) << ',';
        if (e.certificate) {
            out << numerator(e.certificate->epsilon) << ',' << denominator(e.certificate->epsilon);
        } else {
            out << "0,1";
        }
        out << ',' << e.dependent.size() << '\n';
    }
    return out.str();
}

Json mgltg::parse_json_text(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Json mgltg::read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}
