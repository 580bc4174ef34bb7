// Copyright 2026 The PCE Channels Authors
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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "pce/channel_sim.hpp"
#include "pce/dynamics.hpp"
#include "pce/pce_map.hpp"

// JSON documents shared by the library and the CLI.
//
// Channel:  {"n": 2, "preserved": ["00", "30"]}  or  {"n": 2, "basis": ["1100"]}
// Process:  {"terms": [{"alpha": "03", "gamma": 1.0}]}
// State:    [[re, im], ...] row-major (flat or nested by row), optionally wrapped as {"rho": ...}
namespace pce::io {

using Json = nlohmann::json;

PceMap parse_channel(const Json& doc);
/// Canonical form: "basis" for channels, "preserved" (sorted by flat index) otherwise.
Json channel_to_json(const PceMap& map);

DissipativeProcess parse_process(const Json& doc);
Json process_to_json(const DissipativeProcess& process);

ComplexMatrix parse_density_matrix(const Json& doc);
Json density_matrix_to_json(const ComplexMatrix& rho);

/// Keyed by base-4 label.
Json components_to_json(const RealVector& r);

/// All labels on n qubits sorted by their base-4 string (qubit 0 most significant).
std::vector<MultiIndex> reading_order(int n);

/// %.12g rendering used by every numeric output.
std::string format_number(double x);
/// x rounded to 12 significant digits, for embedding in JSON.
double round_significant(double x);

Json parse_text(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace pce::io
