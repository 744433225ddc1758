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

#include "povmforge/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "povmforge/errors.hpp"

namespace povmforge::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("JSON: missing field \"") + key + "\"");
  }
  return j.at(key);
}

int positive_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError(std::string("JSON: field \"") + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

}  // namespace

std::string format_double(double x) {
  // Shortest representation that round-trips.
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int rows = positive_int(j, "rows");
  const int cols = positive_int(j, "cols");
  const json& re = field(j, "re");
  const json& im = field(j, "im");
  const std::size_t expected = static_cast<std::size_t>(rows) * cols;
  if (!re.is_array() || !im.is_array() || re.size() != expected || im.size() != expected) {
    throw ValidationError("JSON matrix: re/im must be arrays of rows*cols = " + std::to_string(expected) +
                          " numbers");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < expected; ++k) {
    if (!re[k].is_number() || !im[k].is_number()) throw ValidationError("JSON matrix: non-numeric entry");
    m(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) =
        Complex(re[k].get<double>(), im[k].get<double>());
  }
  if (!all_finite(m)) throw ValidationError("JSON matrix: non-finite entry");
  return m;
}

json povm_to_json(const Povm& p) {
  json effects = json::array();
  for (const auto& e : p.effects()) effects.push_back(matrix_to_json(e));
  return {{"dim", p.dim()}, {"effects", std::move(effects)}};
}

Povm povm_from_json(const json& j) {
  const int dim = positive_int(j, "dim");
  const json& arr = field(j, "effects");
  if (!arr.is_array() || arr.empty()) throw ValidationError("JSON POVM: \"effects\" must be a non-empty array");
  std::vector<ComplexMatrix> effects;
  for (const auto& e : arr) {
    ComplexMatrix m = matrix_from_json(e);
    if (m.rows() != dim || m.cols() != dim) throw ValidationError("JSON POVM: effect shape differs from dim");
    effects.push_back(std::move(m));
  }
  return Povm(std::move(effects));
}

json detector_to_json(const Detector& f) {
  return {{"sys_dim", f.sys_dim()}, {"anc_dim", f.anc_dim()}, {"joint", povm_to_json(f.joint())}};
}

Detector detector_from_json(const json& j) {
  return Detector(positive_int(j, "sys_dim"), positive_int(j, "anc_dim"), povm_from_json(field(j, "joint")));
}

json net_to_json(const UnitaryNet& net) {
  json centers = json::array();
  for (const auto& c : net.centers) centers.push_back(matrix_to_json(c));
  return {{"dim", net.dim},
          {"radius", net.radius},
          {"seed", net.seed},
          {"candidates_tested", net.candidates_tested},
          {"centers", std::move(centers)}};
}

UnitaryNet net_from_json(const json& j) {
  UnitaryNet net;
  net.dim = positive_int(j, "dim");
  const json& radius = field(j, "radius");
  if (!radius.is_number() || !(radius.get<double>() > 0.0)) {
    throw ValidationError("JSON net: radius must be a positive number");
  }
  net.radius = radius.get<double>();
  const json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
    throw ValidationError("JSON net: seed must be a non-negative integer");
  }
  net.seed = seed.get<std::uint64_t>();
  if (j.contains("candidates_tested")) net.candidates_tested = j.at("candidates_tested").get<std::uint64_t>();
  for (const auto& c : field(j, "centers")) {
    ComplexMatrix m = matrix_from_json(c);
    if (m.rows() != net.dim) throw ValidationError("JSON net: center dimension differs from dim");
    require_unitary(m, "JSON net: center");
    net.centers.push_back(std::move(m));
  }
  return net;
}

json accuracy_report_to_json(const AccuracyReport& report) {
  json rows = json::array();
  for (const auto& t : report.per_target) {
    rows.push_back({{"target_id", t.target_id}, {"delta", t.delta}, {"best_program", matrix_to_json(t.best_program)}});
  }
  return {{"epsilon", report.epsilon}, {"worst_target_id", report.worst_target_id}, {"per_target", std::move(rows)}};
}

void write_accuracy_csv(std::ostream& out, const AccuracyReport& report) {
  out << "target_id,delta,epsilon\n";
  for (const auto& t : report.per_target) {
    out << t.target_id << ',' << format_double(t.delta) << ',' << format_double(report.epsilon) << '\n';
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace povmforge::io
