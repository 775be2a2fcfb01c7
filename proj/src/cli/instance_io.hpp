// Copyright 2026 The abelshift Authors.
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


#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelshift/gfunc.hpp"
#include "abelshift/hiddenshift.hpp"
#include "abelshift/phasetuned.hpp"
#include "json.hpp"

namespace abelshift::cli {

using json = nlohmann::json;

// Bad input file or arguments. `field` is a JSON-pointer-ish path.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Instance file contents after schema validation. `function` and `phases`
// keep their validated JSON so files round-trip unchanged.
struct InstanceFile {
  std::vector<std::int64_t> group;
  std::size_t dim = 1;
  json function;  // {"table": ...} or {"construct": {...}}
  std::vector<std::int64_t> shift;
  std::optional<Window> window;
  json phases;  // null, {"theta": [...], "chi": [...]} or {"random_theta": b, "random_chi": b}
  std::uint64_t seed = 0;
};

InstanceFile parse_instance(const json& doc);
json to_json(const InstanceFile& file);
// Canonical text: two-space indent, sorted keys, trailing newline.
std::string serialize(const InstanceFile& file);
InstanceFile read_instance(const std::string& path);
json read_json(const std::string& path);

json complex_json(Complex z);
Complex parse_complex(const json& v, const std::string& field);

// The function, the window its builder suggests (used when the file has
// none), and builder notes for the report (e.g. the y -> phi_y table).
struct BuiltFunction {
  VectorFn f;
  Window window;
  json notes = json::object();
};

BuiltFunction build_function(const InstanceFile& file);

struct Materialized {
  HiddenShiftInstance instance;
  PhaseAssignment phases;
  json notes;
};

Materialized materialize(const InstanceFile& file);

}  // namespace abelshift::cli
