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
#include <string_view>

#include "pce/pce_map.hpp"

// Grid diagrams of a map's tau: filled ('#' / black) where a component is kept.
//
// n = 1: one column, row alpha.
// n = 2: 4x4 grid, row alpha_1, column alpha_2, (0,0) top-left.
// n = 3: 4 lines by alpha_1; each line has 4 space-separated groups by alpha_2,
//        each group 4 cells by alpha_3.
namespace pce {

inline constexpr int kDiagramQubitLimit = 3;

/// Throws CapacityError for n > kDiagramQubitLimit.
std::string render_ascii(const PceMap& map);
std::string render_svg(const PceMap& map);

/// Inverse of render_ascii. Throws ParseError on malformed input.
PceMap parse_ascii(std::string_view text);

}  // namespace pce
