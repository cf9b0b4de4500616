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

#include "qbayes/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qbayes::io {

namespace {

[[noreturn]] void fail(std::string_view path, const std::string &what) {
    throw Error(ErrorCode::ParseError, "at " + std::string(path.empty() ? "/" : path) + ": " + what);
}

const json &field(const json &j, const char *key, std::string_view path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

std::size_t size_from(const json &j, std::string_view path) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        fail(path, "expected a non-negative integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v < 0) {
        fail(path, "expected a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

std::string child(std::string_view path, std::string_view key) {
    return std::string(path) + "/" + std::string(key);
}

void check_kind(const json &j, std::string_view kind) {
    if (j.is_object() && j.contains("kind")) {
        const json &k = j["kind"];
        if (!k.is_string() || k.get<std::string>() != kind) {
            fail("/kind", "expected kind '" + std::string(kind) + "'");
        }
    }
}

json tagged(json j, const char *kind) {
    j["kind"] = kind;
    return j;
}

std::vector<ComplexMatrix> matrices_from(const json &arr, std::string_view path) {
    if (!arr.is_array()) {
        fail(path, "expected an array of matrices");
    }
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(matrix_from_json(arr[i], child(path, std::to_string(i))));
    }
    return out;
}

}  // namespace

json real(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    if (std::isnan(v)) {
        return "nan";
    }
    return v > 0 ? "inf" : "-inf";
}

double real_from(const json &j, std::string_view path) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "-inf") {
            return -INFINITY;
        }
        if (s == "inf") {
            return INFINITY;
        }
        if (s == "nan") {
            return NAN;
        }
    }
    fail(path, "expected a real number");
}

json to_json(const ComplexMatrix &m) {
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            data.push_back(json::array({real(m(i, j).real()), real(m(i, j).imag())}));
        }
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json &j, std::string_view path) {
    const std::size_t rows = size_from(field(j, "rows", path), child(path, "rows"));
    const std::size_t cols = size_from(field(j, "cols", path), child(path, "cols"));
    const json &data = field(j, "data", path);
    const std::string data_path = child(path, "data");
    if (!data.is_array()) {
        fail(data_path, "expected an array");
    }
    if (rows == 0 || cols == 0) {
        fail(path, "matrix dimensions must be positive");
    }
    if (data.size() != rows * cols) {
        fail(data_path, "expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(data.size()));
    }
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t k = 0; k < data.size(); ++k) {
        const json &e = data[k];
        const std::string entry_path = child(data_path, std::to_string(k));
        if (!e.is_array() || e.size() != 2) {
            fail(entry_path, "expected [re, im]");
        }
        const double re = real_from(e[0], entry_path);
        const double im = real_from(e[1], entry_path);
        if (!std::isfinite(re) || !std::isfinite(im)) {
            fail(entry_path, "matrix entries must be finite");
        }
        m(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) = Complex(re, im);
    }
    return m;
}

json to_json(const DensityMatrix &rho) {
    return tagged(to_json(rho.matrix()), "density");
}

json to_json(const PureState &v) {
    return tagged(to_json(ComplexMatrix(v.amplitudes())), "pure");
}

json to_json(const GramMatrix &e) {
    return tagged(to_json(e.matrix()), "gram");
}

json to_json(const ProbingMatrix &s) {
    return tagged(to_json(s.matrix()), "probing");
}

json to_json(const ProjectorSet &ps) {
    json arr = json::array();
    for (const ComplexMatrix &p : ps.projectors()) {
        arr.push_back(to_json(p));
    }
    return json{{"kind", "projector_set"}, {"projectors", std::move(arr)}};
}

json to_json(const OutcomeEnsemble &ens) {
    json arr = json::array();
    for (const Outcome &o : ens.outcomes()) {
        arr.push_back(json{{"p", real(o.probability)}, {"state", o.state ? to_json(o.state->matrix()) : json()}});
    }
    return json{{"kind", "ensemble"}, {"outcomes", std::move(arr)}};
}

json to_json(const Povm &m) {
    json projectors = json::array();
    for (const ComplexMatrix &p : m.joint_projectors().projectors()) {
        projectors.push_back(to_json(p));
    }
    return json{{"object_dim", m.object_dim()},
                {"ancilla_dim", m.ancilla_dim()},
                {"ancilla_state", to_json(m.ancilla_state().matrix())},
                {"unitary", to_json(m.joint_unitary())},
                {"projectors", std::move(projectors)}};
}

json to_json(const CheckReport &r) {
    json margins = json::array();
    for (double v : r.margins) {
        margins.push_back(real(v));
    }
    json spectra = json::object();
    for (const auto &[name, values] : r.spectra) {
        json arr = json::array();
        for (double v : values) {
            arr.push_back(real(v));
        }
        spectra[name] = std::move(arr);
    }
    json out{{"pass", r.pass}, {"margins", std::move(margins)}, {"spectra", std::move(spectra)}};
    out["trial"] = r.trial ? json(*r.trial) : json();
    if (!r.values.empty()) {
        json values = json::object();
        for (const auto &[name, v] : r.values) {
            values[name] = real(v);
        }
        out["values"] = std::move(values);
    }
    if (!r.note.empty()) {
        out["note"] = r.note;
    }
    return out;
}

DensityMatrix density_from_json(const json &j) {
    check_kind(j, "density");
    return DensityMatrix(matrix_from_json(j));
}

PureState pure_from_json(const json &j) {
    check_kind(j, "pure");
    const ComplexMatrix m = matrix_from_json(j);
    if (m.cols() != 1 && m.rows() != 1) {
        fail("", "pure state must be a row or column vector");
    }
    return PureState(m.cols() == 1 ? ComplexVector(m.col(0)) : ComplexVector(m.row(0).transpose()));
}

GramMatrix gram_from_json(const json &j) {
    check_kind(j, "gram");
    return GramMatrix(matrix_from_json(j));
}

ProbingMatrix probing_from_json(const json &j) {
    check_kind(j, "probing");
    return ProbingMatrix(matrix_from_json(j));
}

ProjectorSet projector_set_from_json(const json &j) {
    check_kind(j, "projector_set");
    return ProjectorSet(matrices_from(field(j, "projectors", ""), "/projectors"));
}

OutcomeEnsemble ensemble_from_json(const json &j) {
    check_kind(j, "ensemble");
    const json &arr = field(j, "outcomes", "");
    if (!arr.is_array()) {
        fail("/outcomes", "expected an array");
    }
    std::vector<Outcome> outcomes;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const std::string path = "/outcomes/" + std::to_string(k);
        const double p = real_from(field(arr[k], "p", path), path + "/p");
        Outcome o{p, std::nullopt};
        const json &state = field(arr[k], "state", path);
        if (!state.is_null()) {
            o.state = DensityMatrix(matrix_from_json(state, path + "/state"));
        }
        outcomes.push_back(std::move(o));
    }
    return OutcomeEnsemble(std::move(outcomes));
}

Povm povm_from_json(const json &j) {
    const std::size_t n = size_from(field(j, "object_dim", ""), "/object_dim");
    const std::size_t d = size_from(field(j, "ancilla_dim", ""), "/ancilla_dim");
    DensityMatrix ancilla(matrix_from_json(field(j, "ancilla_state", ""), "/ancilla_state"));
    ComplexMatrix u = matrix_from_json(field(j, "unitary", ""), "/unitary");
    ProjectorSet ps(matrices_from(field(j, "projectors", ""), "/projectors"));
    return Povm(n, d, std::move(ancilla), std::move(u), std::move(ps));
}

json parse(std::string_view text, std::string_view source) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ":" +
                                               std::to_string(column) + ": " + e.what());
    }
}

json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

}  // namespace qbayes::io
