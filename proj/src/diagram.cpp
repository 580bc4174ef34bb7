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

#include "pce/diagram.hpp"

#include <sstream>
#include <vector>

namespace pce {

namespace {

constexpr int kCell = 20;
constexpr int kGap = 10;

void check_layout(const PceMap& map) {
    if (map.num_qubits() > kDiagramQubitLimit) {
        throw CapacityError("diagrams are limited to " + std::to_string(kDiagramQubitLimit) +
                            " qubits; use the JSON channel document instead");
    }
}

// Cell (row, column) of every flat index; column counts cells, not characters.
struct Position {
    int row;
    int column;
    int group;  // block index along the line, for spacing
};

Position place(const MultiIndex& a) {
    switch (a.num_qubits()) {
        case 1:
            return {a.digit(0), 0, 0};
        case 2:
            return {a.digit(0), a.digit(1), 0};
        default:
            return {a.digit(0), 4 * a.digit(1) + a.digit(2), a.digit(1)};
    }
}

int columns(int n) { return n == 1 ? 1 : (n == 2 ? 4 : 16); }

}  // namespace

std::string render_ascii(const PceMap& map) {
    check_layout(map);
    const int n = map.num_qubits();
    const int width = columns(n);
    std::vector<std::string> lines(4, std::string(static_cast<std::size_t>(width), '.'));
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        const MultiIndex a = MultiIndex::from_word(n, w);
        if (map.preserves(a)) {
            const Position p = place(a);
            lines[p.row][p.column] = '#';
        }
    }
    std::string out;
    for (const std::string& line : lines) {
        for (int c = 0; c < width; ++c) {
            if (n == 3 && c > 0 && c % 4 == 0) {
                out.push_back(' ');
            }
            out.push_back(line[c]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_svg(const PceMap& map) {
    check_layout(map);
    const int n = map.num_qubits();
    const int groups = n == 3 ? 4 : 1;
    const int width = columns(n) * kCell + (groups - 1) * kGap;
    const int height = 4 * kCell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        const MultiIndex a = MultiIndex::from_word(n, w);
        const Position p = place(a);
        const int x = p.column * kCell + p.group * kGap;
        const int y = p.row * kCell;
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell
            << "\" fill=\"" << (map.preserves(a) ? "black" : "white") << "\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

PceMap parse_ascii(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c == '#' || c == '.') {
            current.push_back(c);
        } else if (c != ' ' && c != '\r') {
            throw ParseError(std::string("unexpected character '") + c + "' in diagram");
        }
    }
    if (!current.empty()) {
        lines.push_back(current);
    }
    if (lines.size() != 4) {
        throw ParseError("diagram must have 4 lines");
    }
    const std::size_t width = lines[0].size();
    int n = 0;
    if (width == 1) {
        n = 1;
    } else if (width == 4) {
        n = 2;
    } else if (width == 16) {
        n = 3;
    } else {
        throw ParseError("diagram lines must have 1, 4 or 16 cells");
    }
    for (const std::string& line : lines) {
        if (line.size() != width) {
            throw ParseError("diagram lines have different widths");
        }
    }
    TauBitset tau(index_space_size(n));
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        const Position p = place(MultiIndex::from_word(n, w));
        if (lines[p.row][p.column] == '#') {
            tau.set(w);
        }
    }
    return PceMap::from_tau(n, std::move(tau));
}

}  // namespace pce
