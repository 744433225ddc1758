// Copyright 2026 The povmforge Authors
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

// JSON and CSV encodings.
//
//   matrix:   {"rows": r, "cols": c, "re": [...], "im": [...]}   (row-major)
//   POVM:     {"dim": n, "effects": [matrix, ...]}
//   detector: {"sys_dim": n, "anc_dim": d, "joint": POVM}
//   net:      {"dim": n, "radius": r, "seed": s, "centers": [matrix, ...]}

#ifndef POVMFORGE_IO_HPP
#define POVMFORGE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "povmforge/detector.hpp"
#include "povmforge/unet.hpp"

namespace povmforge::io {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
/// Throws ValidationError on missing fields, length mismatches or non-finite entries.
ComplexMatrix matrix_from_json(const json& j);

json povm_to_json(const Povm& p);
Povm povm_from_json(const json& j);

json detector_to_json(const Detector& f);
Detector detector_from_json(const json& j);

json net_to_json(const UnitaryNet& net);
UnitaryNet net_from_json(const json& j);

json accuracy_report_to_json(const AccuracyReport& report);
/// Rows: target_id,delta,epsilon
void write_accuracy_csv(std::ostream& out, const AccuracyReport& report);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

}  // namespace povmforge::io

#endif  // POVMFORGE_IO_HPP
