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

/**
 * @file
 * JSON encoding of library types.
 *
 * Schemas:
 *
 *     complex scalar : [re, im]
 *     matrix         : {"dim": d, "entries": [[z_00, z_01, ...], ...]}   (row major)
 *     vector / state : {"dim": d, "amps": [z_0, z_1, ...]}
 *
 * Reports use plain objects; absent optional values are written as null.
 */

#pragma once

#include <filesystem>

#include "json.hpp"

#include "ulab/correlations.hpp"
#include "ulab/gellmann.hpp"
#include "ulab/hermitian_core.hpp"
#include "ulab/relations.hpp"
#include "ulab/sab_finder.hpp"
#include "ulab/state_sets.hpp"

namespace ulab {

using json = nlohmann::ordered_json;

/// Input that does not follow the documented schema.
class SchemaError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Missing or unreadable input file.
class FileError : public Error {
  public:
    using Error::Error;
};

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

json parse_json_file(const std::filesystem::path& path);

Observable read_observable(const std::filesystem::path& path, const Tolerances& tol = {});
StateVector read_state(const std::filesystem::path& path, const Tolerances& tol = {});

/// Writes @p j followed by a newline; throws FileError if the file cannot be written.
void write_json_file(const std::filesystem::path& path, const json& j);

// nlohmann ADL hooks.
void to_json(json& j, const Observable& o);
void to_json(json& j, const StateVector& s);
void to_json(json& j, const Tolerances& t);
void from_json(const json& j, Tolerances& t);
void to_json(json& j, const CorrelationRecord& r);
void to_json(json& j, const UncertaintyReport& r);
void to_json(json& j, const SumRelationReport& r);
void to_json(json& j, const ClassificationResult& r);
void to_json(json& j, const FinderConfig& c);
void to_json(json& j, const FinderResult& r);
void to_json(json& j, const GellMannBasis& b);

}  // namespace ulab
