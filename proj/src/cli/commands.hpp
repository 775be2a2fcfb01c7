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

#include <ostream>
#include <string>
#include <vector>

#include "abelshift/hiddenshift.hpp"
#include "cli/instance_io.hpp"

namespace abelshift::cli {

const std::vector<std::string>& algorithm_ids();

// Dense up to |G| = 64, lazy above.
Backend auto_backend(const GroupSpec& group);

// Throws InputError for an unknown id.
RunReport run_algorithm(const std::string& id, const Materialized& m, const RunOptions& options);

// Whole command line: run / scan / bent. Returns the process exit code:
// 0 success, 1 input or usage error, 2 a run fell below --threshold.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abelshift::cli
