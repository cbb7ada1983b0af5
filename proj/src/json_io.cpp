// Copyright 2026 The Uncertainty Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ulab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ulab {

namespace {

json optional_number(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

Index read_dim(const json& j, const char* what) {
    if (!j.is_object()) {
        throw SchemaError(std::string(what) + ": expected a JSON object");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw SchemaError(std::string(what) + ": missing integer field \"dim\"");
    }
    const auto d = j["dim"].get<long long>();
    if (d < 1) {
        throw SchemaError(std::string(what) + ": \"dim\" must be positive");
    }
    return static_cast<Index>(d);
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw SchemaError("complex scalar must be a two-element array [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index k = 0; k < m.cols(); ++k) {
            row.push_back(complex_to_json(m(i, k)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    const Index d = read_dim(j, "matrix");
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw SchemaError("matrix: missing array field \"entries\"");
    }
    const json& rows = j["entries"];
    if (static_cast<Index>(rows.size()) != d) {
        throw SchemaError("matrix: \"entries\" has " + std::to_string(rows.size()) +
                          " rows but dim = " + std::to_string(d));
    }
    Matrix m(d, d);
    for (Index i = 0; i < d; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != d) {
            throw SchemaError("matrix: row " + std::to_string(i) + " must have " +
                              std::to_string(d) + " entries");
        }
        for (Index k = 0; k < d; ++k) {
            m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
        }
    }
    return m;
}

json vector_to_json(const Vector& v) {
    json amps = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        amps.push_back(complex_to_json(v(i)));
    }
    return json{{"dim", v.size()}, {"amps", std::move(amps)}};
}

Vector vector_from_json(const json& j) {
    const Index d = read_dim(j, "vector");
    if (!j.contains("amps") || !j["amps"].is_array()) {
        throw SchemaError("vector: missing array field \"amps\"");
    }
    const json& amps = j["amps"];
    if (static_cast<Index>(amps.size()) != d) {
        throw SchemaError("vector: \"amps\" has " + std::to_string(amps.size()) +
                          " entries but dim = " + std::to_string(d));
    }
    Vector v(d);
    for (Index i = 0; i < d; ++i) {
        v(i) = complex_from_json(amps[static_cast<std::size_t>(i)]);
    }
    return v;
}

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileError("cannot open file: " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": invalid JSON: " + e.what());
    }
}

Observable read_observable(const std::filesystem::path& path, const Tolerances& tol) {
    const json j = parse_json_file(path);
    try {
        return validate_observable(matrix_from_json(j), tol);
    } catch (const ValidationError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

StateVector read_state(const std::filesystem::path& path, const Tolerances& tol) {
    const json j = parse_json_file(path);
    try {
        return StateVector::from_amplitudes(vector_from_json(j), tol);
    } catch (const ValidationError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        throw FileError("cannot write file: " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw FileError("write failed: " + path.string());
    }
}

void to_json(json& j, const Observable& o) { j = matrix_to_json(o.matrix()); }

void to_json(json& j, const StateVector& s) { j = vector_to_json(s.amps()); }

void to_json(json& j, const Tolerances& t) {
    j = json{{"tol_herm", t.tol_herm},
             {"tol_norm", t.tol_norm},
             {"tol_zero", t.tol_zero},
             {"eps_spread", t.eps_spread}};
}

void from_json(const json& j, Tolerances& t) {
    Tolerances out;
    out.tol_herm = j.value("tol_herm", out.tol_herm);
    out.tol_norm = j.value("tol_norm", out.tol_norm);
    out.tol_zero = j.value("tol_zero", out.tol_zero);
    out.eps_spread = j.value("eps_spread", out.eps_spread);
    out.validate();
    t = out;
}

void to_json(json& j, const CorrelationRecord& r) {
    j = json{{"c", complex_to_json(r.c)},
             {"cov_real", r.cov_real},
             {"imag_part", r.imag_part},
             {"pearson", optional_number(r.pearson)},
             {"transition_prob", optional_number(r.transition_prob)}};
}

void to_json(json& j, const UncertaintyReport& r) {
    j = json{{"delta_a", r.delta_a},
             {"delta_b", r.delta_b},
             {"product", r.product},
             {"hr_bound", r.hr_bound},
             {"schrodinger_bound", r.schrodinger_bound},
             {"general_bound", r.general_bound},
             {"slack_hr", r.slack_hr},
             {"slack_general", r.slack_general},
             {"tight", r.tight}};
}

void to_json(json& j, const SumRelationReport& r) {
    j = json{{"sum_of_spreads", r.sum_of_spreads},
             {"spread_of_sum", r.spread_of_sum},
             {"quad_lhs", r.quad_lhs},
             {"quad_rhs", r.quad_rhs},
             {"degenerate", std::string(to_string(r.degenerate))}};
}

void to_json(json& j, const ClassificationResult& r) {
    j = json{{"eigen_a", r.eigen_a},
             {"eigen_b", r.eigen_b},
             {"in_s_ab", r.in_s_ab},
             {"in_s_comm", r.in_s_comm},
             {"in_s_anti", r.in_s_anti},
             {"pearson", optional_number(r.pearson)},
             {"comm_forms_agree", r.comm_forms_agree},
             {"tolerances_used", r.tolerances_used}};
}

void to_json(json& j, const FinderConfig& c) {
    j = json{{"restarts", c.restarts},
             {"max_iters", c.max_iters},
             {"step_rule", std::string(to_string(c.step_rule))},
             {"spread_floor", c.spread_floor},
             {"penalty_weight", c.penalty_weight},
             {"converge_tol", c.converge_tol},
             {"step_size", c.step_size},
             {"seed", c.seed}};
}

void to_json(json& j, const FinderResult& r) {
    j = json{{"state", r.state},
             {"objective", r.objective},
             {"abs_c", r.abs_c},
             {"delta_a", r.delta_a},
             {"delta_b", r.delta_b},
             {"iterations", r.iterations},
             {"restart_index", r.restart_index},
             {"converged", r.converged}};
}

void to_json(json& j, const GellMannBasis& b) {
    json mats = json::array();
    for (std::size_t k = 0; k < b.matrices.size(); ++k) {
        json m = matrix_to_json(b.matrices[k].matrix());
        m["label"] = b.labels[k];
        mats.push_back(std::move(m));
    }
    j = json{{"dim", b.dim}, {"matrices", std::move(mats)}};
    j["sign_note"] = b.sign_note.empty() ? json(nullptr) : json(b.sign_note);
}

}  // namespace ulab
