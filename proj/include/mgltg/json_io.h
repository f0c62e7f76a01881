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

#ifndef MGLTG_JSON_IO_H
#define MGLTG_JSON_IO_H

#include <string>
#include <vector>

#include "json.hpp"
#include "mgltg/ltg.h"
#include "mgltg/matchgate.h"
#include "mgltg/synthesis.h"
#include "mgltg/wms.h"

namespace mgltg {

using Json = nlohmann::ordered_json;

// Circuit files:
//   {"num_qubits": m, "gates": [
//      {"kind": "matchgate", "qubit": k, "A": [[[re,im],[re,im]],[[re,im],[re,im]]], "B": ...},
//      {"kind": "fswap", "qubit": k},
//      {"kind": "zrot", "qubit": q, "angle": phi},     // exp(i phi Z_q), q in 1..m
//      {"kind": "xxrot", "qubit": k, "angle": phi}]}   // exp(i phi X_k X_{k+1})
// For matchgate / fswap / xxrot, "qubit" is the upper of the two lines. Any
// extra top-level keys (e.g. synthesis metadata) are ignored on read.
Json circuit_to_json(const MatchgateCircuit &circuit);
MatchgateCircuit circuit_from_json(const Json &j);

/// {"dim": 2m, "entries": [row-major reals]}.
Json rotation_to_json(const Rotationd &r);

/// {"num": p, "den": q, "value": p/q as a double}.
Json rational_to_json(const Rational &q);

/// Accepts a JSON number (converted exactly) or a string "p/q" / "p".
Rational rational_from_json(const Json &j);

/// {"w": [...], "theta": t} as decimals, with exact "p/q" strings under "exact".
Json representation_to_json(const LtgRepresentation<Rational> &rep);
LtgRepresentation<Rational> representation_from_json(const Json &j);

/// {"pi": [...], "c": "bitstring"}.
Json program_to_json(const WmsProgram &prog);
WmsProgram program_from_json(const Json &j);

/// The circuit JSON plus {"metadata": {"n", "margin", "margin_exact",
/// "promised_probability", "representation", "gate_count", "rotation"}}.
Json synthesis_to_json(const SynthesisResult &result);

/// Full analysis report for one truth table.
Json analysis_report(const BooleanFunction &f);

/// CSV with header "table,is_ltg,margin_num,margin_den,dep_count". Non-LTGs
/// report margin 0/1.
std::string census_to_csv(const std::vector<CensusEntry> &census);

Json parse_json_text(const std::string &text);
Json read_json_file(const std::string &path);

}  // namespace mgltg

#endif
