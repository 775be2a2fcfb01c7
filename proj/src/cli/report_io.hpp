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

#include <string>
#include <vector>

#include "abelshift/hiddenshift.hpp"
#include "cli/instance_io.hpp"

namespace abelshift::cli {

// |formula - sim| within this counts as agreement in reports.
inline constexpr double kAgreeTolerance = 1e-9;

bool below_threshold(const RunReport& rep, double threshold);

json run_json(const RunReport& rep, const GroupSpec& group, double threshold);
// {"instance": ..., "notes": ..., "threshold": ..., "runs": [...]}
json report_json(const InstanceFile& file, const json& notes, const std::vector<RunReport>& runs,
                 double threshold);
std::string report_csv(const std::vector<RunReport>& runs, const GroupSpec& group, double threshold);

// %.17g, so CSV cells round-trip.
std::string format_double(double v);

}  // namespace abelshift::cli
