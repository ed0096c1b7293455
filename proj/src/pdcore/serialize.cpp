// Copyright 2026 The cyclicpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclicpd/pdcore/serialize.hpp"

#include <fstream>
#include <sstream>

#include "cyclicpd/pdcore/errors.hpp"

namespace cyclicpd {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

std::string_view field_name(Field f) { return f == Field::kReal ? "real" : "complex"; }

Field parse_field(std::string_view name) {
  if (name == "real") return Field::kReal;
  if (name == "complex") return Field::kComplex;
  throw Error(ErrorCode::kInvalidArgument, "field must be 'real' or 'complex', got '" + std::string(name) + "'");
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const CMatrix& m, Field field) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (field == Field::kReal) {
        row.push_back(m(i, j).real());
      } else {
        row.push_back(complex_to_json(m(i, j)));
      }
    }
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = m.rows();
  out["field"] = field_name(field);
  out["entries"] = std::move(rows);
  return out;
}

Json to_json(const HermMatrix& m) { return matrix_to_json(m.entries(), m.field()); }

Json to_json(const PDMatrix& m) { return to_json(m.herm()); }

Json to_json(const CyclicFamily& f) {
  Json members = Json::array();
  for (const auto& m : f.members()) members.push_back(to_json(m));
  Json out;
  out["p"] = f.p();
  out["members"] = std::move(members);
  return out;
}

CMatrix parse_matrix(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    parse_error("matrix must be an object with 'n' and 'entries'");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) parse_error("'n' must be a positive integer");
  const Field field = parse_field(j.value("field", std::string("real")));
  const auto n = j["n"].get<Eigen::Index>();
  const Json& rows = j["entries"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
    parse_error("'entries' must hold n rows");
  }
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorCode::kNotSquare, "row " + std::to_string(i) + " does not have n entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (field == Field::kReal) {
        m(i, k) = Complex(as_double(e, "real entry"), 0.0);
      } else {
        if (!e.is_array() || e.size() != 2) parse_error("complex entries must be [re, im] pairs");
        m(i, k) = Complex(as_double(e[0], "real part"), as_double(e[1], "imaginary part"));
      }
    }
  }
  return m;
}

PDMatrix parse_pd(const Json& j, const Tolerance& tol) { return make_pd(parse_matrix(j), tol); }

CyclicFamily parse_family(const Json& j, const Tolerance& tol) {
  if (!j.is_object() || !j.contains("members") || !j["members"].is_array()) {
    parse_error("family must be an object with a 'members' array");
  }
  std::vector<PDMatrix> members;
  for (const auto& m : j["members"]) members.push_back(parse_pd(m, tol));
  if (members.empty()) parse_error("family has no members");
  if (j.contains("p") && (!j["p"].is_number_integer() || j["p"].get<std::size_t>() != members.size())) {
    parse_error("'p' does not match the number of members");
  }
  return CyclicFamily(std::move(members));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace cyclicpd
