// Copyright 2026 The qbayes Authors
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

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qbayes/majorization.hpp"
#include "qbayes/povm.hpp"
#include "qbayes/states.hpp"

/// JSON forms shared by the library and the CLI.
///
///   matrix:   {"rows": n, "cols": m, "data": [[re, im], ...]}  (row-major)
///   typed:    the matrix form plus "kind": "density" | "pure" | "gram" | "probing"
///   projector_set: {"kind": "projector_set", "projectors": [matrix, ...]}
///   ensemble: {"kind": "ensemble", "outcomes": [{"p": real, "state": matrix | null}, ...]}
///   povm:     {"object_dim": n, "ancilla_dim": d, "ancilla_state": matrix,
///              "unitary": matrix, "projectors": [matrix, ...]}
///
/// Non-finite reals are written as the strings "-inf", "inf" and "nan".
namespace qbayes::io {

using nlohmann::json;

json real(double v);
double real_from(const json &j, std::string_view path = "");

json to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j, std::string_view path = "");

json to_json(const DensityMatrix &rho);
json to_json(const PureState &v);
json to_json(const GramMatrix &e);
json to_json(const ProbingMatrix &s);
json to_json(const ProjectorSet &ps);
json to_json(const OutcomeEnsemble &ens);
json to_json(const Povm &m);
json to_json(const CheckReport &r);

DensityMatrix density_from_json(const json &j);
PureState pure_from_json(const json &j);
GramMatrix gram_from_json(const json &j);
ProbingMatrix probing_from_json(const json &j);
ProjectorSet projector_set_from_json(const json &j);
OutcomeEnsemble ensemble_from_json(const json &j);
Povm povm_from_json(const json &j);

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse(std::string_view text, std::string_view source = "<input>");
json read_file(const std::string &path);

}  // namespace qbayes::io
