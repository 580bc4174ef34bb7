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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

// Dense GF(2) linear algebra on vectors of at most 32 bits, one word per vector.
namespace pce::gf2 {

using Row = std::uint32_t;

/// Leading (most-significant) set bit; undefined for zero.
inline int pivot(Row r) { return std::bit_width(r) - 1; }

inline int parity(Row r) { return std::popcount(r) & 1; }

/// Canonical reduced row echelon form of the span of `rows`.
///
/// Pivots are leading bits, rows are sorted by descending pivot, every pivot
/// column is zero outside its own row, and zero rows are dropped. Two inputs
/// span the same space iff their results are equal.
std::vector<Row> rref(std::span<const Row> rows);

/// Reduces `v` modulo the span of a canonical RREF; the result is zero iff v is in the span.
Row reduce(Row v, std::span<const Row> rref_rows);

/// Inserts `v` into a canonical RREF in place. Returns false if v was already in the span.
bool insert(std::vector<Row>& rref_rows, Row v);

/// All x in GF(2)^width with parity(x & r) = 0 for every r in `rows`, as a canonical RREF.
std::vector<Row> kernel(std::span<const Row> rows, int width);

}  // namespace pce::gf2
