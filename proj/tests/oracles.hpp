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

// Test-side reference implementations built from literal tables and naive loops.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pce/pce_map.hpp"

namespace pce::oracle {

// Sign table a_{alpha beta}.
inline constexpr int kSign[4][4] = {
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
};

// Klein four-group table.
inline constexpr int kKlein[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};

inline int digit(std::uint32_t word, int q) { return static_cast<int>((word >> (2 * q)) & 3); }

inline int sign(int n, std::uint32_t a, std::uint32_t b) {
    int s = 1;
    for (int q = 0; q < n; ++q) {
        s *= kSign[digit(a, q)][digit(b, q)];
    }
    return s;
}

inline std::uint32_t klein(int n, std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    for (int q = 0; q < n; ++q) {
        out |= static_cast<std::uint32_t>(kKlein[digit(a, q)][digit(b, q)]) << (2 * q);
    }
    return out;
}

inline std::uint32_t size(int n) { return std::uint32_t{1} << (2 * n); }

/// 2^n * lambda, by the O(16^n) double sum.
inline std::vector<std::int64_t> spectrum_numerators(int n, const std::vector<int>& tau) {
    std::vector<std::int64_t> out(size(n), 0);
    for (std::uint32_t a = 0; a < size(n); ++a) {
        for (std::uint32_t b = 0; b < size(n); ++b) {
            out[a] += sign(n, a, b) * tau[b];
        }
    }
    return out;
}

/// Pairwise closure check on the preserved set.
inline bool closed(int n, const std::vector<int>& tau) {
    if (tau[0] != 1) {
        return false;
    }
    for (std::uint32_t a = 0; a < size(n); ++a) {
        for (std::uint32_t b = 0; b < size(n); ++b) {
            if (tau[a] && tau[b] && !tau[klein(n, a, b)]) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<int> tau_of(const PceMap& map) {
    std::vector<int> out(size(map.num_qubits()));
    for (std::uint32_t w = 0; w < out.size(); ++w) {
        out[w] = map.preserves(MultiIndex::from_word(map.num_qubits(), w)) ? 1 : 0;
    }
    return out;
}

inline std::vector<int> tau_from_mask(int n, std::uint64_t mask) {
    std::vector<int> out(size(n));
    for (std::uint32_t w = 0; w < out.size(); ++w) {
        out[w] = static_cast<int>((mask >> w) & 1);
    }
    return out;
}

inline PceMap map_from_tau(int n, const std::vector<int>& tau) {
    TauBitset bits(tau.size());
    for (std::size_t w = 0; w < tau.size(); ++w) {
        bits[w] = tau[w] != 0;
    }
    return PceMap::from_tau(n, std::move(bits));
}

/// Preserved set of G_alpha: components whose sign against alpha is +1.
inline std::vector<int> generator_tau(int n, std::uint32_t alpha) {
    std::vector<int> out(size(n));
    for (std::uint32_t b = 0; b < size(n); ++b) {
        out[b] = sign(n, alpha, b) == 1 ? 1 : 0;
    }
    return out;
}

/// Number of dim-k subspaces of GF(2)^m by the q-Pascal recurrence.
inline boost::multiprecision::cpp_int gaussian_binomial(int m, int k) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> g(m + 1, std::vector<cpp_int>(m + 1, 0));
    for (int i = 0; i <= m; ++i) {
        g[i][0] = 1;
        for (int j = 1; j <= i; ++j) {
            g[i][j] = g[i - 1][j - 1] + (cpp_int(1) << j) * g[i - 1][j];
        }
    }
    return g[m][k];
}

inline std::string data_path(const std::string& name) { return std::string(PCE_TEST_DIR) + "/data/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(PCE_TEST_DIR) + "/golden/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace pce::oracle
