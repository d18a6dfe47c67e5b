// Copyright 2026 The dprox Authors.
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

#ifndef DPROX_TOOLS_CLI_HPP
#define DPROX_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dprox/digraph.hpp"
#include "dprox/report_json.hpp"

namespace dprox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// The object `analyze` prints for one instance: digraph6 plus the flat
/// metrics fields.
Json analysis_json(const Digraph& d);

}  // namespace dprox::cli

#endif  // DPROX_TOOLS_CLI_HPP
