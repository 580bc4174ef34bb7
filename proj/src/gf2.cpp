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

#include "pce/gf2.hpp"

#include <algorithm>

namespace pce::gf2 {

Row reduce(Row v, std::span<const Row> rref_rows) {
    for (Row r : rref_rows) {
        if ((v >> pivot(r)) & 1u) {
            v ^= r;
        }
    }
    return v;
}

bool insert(std::vector<Row>& rows, Row v) {
    v = reduce(v, rows);
    if (v == 0) {
        return false;
    }
    const int p = pivot(v);
    for (Row& r : rows) {
        if ((r >> p) & 1u) {
            r ^= v;
        }
    }
    auto pos = std::find_if(rows.begin(), rows.end(), [p](Row r) { return pivot(r) < p; });
    rows.insert(pos, v);
    return true;
}

std::vector<Row> rref(std::span<const Row> rows) {
    std::vector<Row> out;
    for (Row v : rows) {
        insert(out, v);
    }
    return out;
}

std::vector<Row> kernel(std::span<const Row> rows, int width) {
    const std::vector<Row> echelon = rref(rows);
    Row pivots = 0;
    for (Row r : echelon) {
        pivots |= Row{1} << pivot(r);
    }
    std::vector<Row> basis;
    for (int col = 0; col < width; ++col) {
        if ((pivots >> col) & 1u) {
            continue;
        }
        // Free column: x = e_col plus the pivot of every row that has this column set.
        Row x = Row{1} << col;
        for (Row r : echelon) {
            if ((r >> col) & 1u) {
                x |= Row{1} << pivot(r);
            }
        }
        basis.push_back(x);
    }
    return rref(basis);
}

}  // namespace pce::gf2
