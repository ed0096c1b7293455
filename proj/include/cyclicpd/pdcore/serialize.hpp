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

#ifndef CYCLICPD_PDCORE_SERIALIZE_HPP_
#define CYCLICPD_PDCORE_SERIALIZE_HPP_

#include <filesystem>
#include <json.hpp>

#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd {

using Json = nlohmann::ordered_json;

// Matrix format: {"n": int, "field": "real"|"complex", "entries": [[...]]}.
// Complex entries are [re, im] pairs. Doubles are written in shortest
// round-trip form, so write -> read reproduces every bit.
Json matrix_to_json(const CMatrix& m, Field field);
Json to_json(const HermMatrix& m);
Json to_json(const PDMatrix& m);
// Family format: {"p": int, "members": [matrix, ...]}.
Json to_json(const CyclicFamily& f);

Json complex_to_json(const Complex& z);

// Throws ParseError on malformed input; PD validation errors propagate.
CMatrix parse_matrix(const Json& j);
PDMatrix parse_pd(const Json& j, const Tolerance& tol = {});
CyclicFamily parse_family(const Json& j, const Tolerance& tol = {});

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_SERIALIZE_HPP_
