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

#ifndef DPROX_DPROX_HPP
#define DPROX_DPROX_HPP

#include "dprox/bipartite.hpp"
#include "dprox/canonical.hpp"
#include "dprox/constructions.hpp"
#include "dprox/digraph.hpp"
#include "dprox/distance.hpp"
#include "dprox/io.hpp"
#include "dprox/report_json.hpp"
#include "dprox/search.hpp"
#include "dprox/verifiers.hpp"

#endif  // DPROX_DPROX_HPP
