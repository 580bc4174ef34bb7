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

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pce/subspace.hpp"

namespace pce {

using BigInt = boost::multiprecision::cpp_int;

/// Default refusal threshold for enumerate_subspaces.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// S_{n,K} = prod_{m<K} (2^{2n-m} - 1) / (2^{K-m} - 1), the number of K-dimensional PCE channels.
BigInt count_channels(int num_qubits, int dim);

/// Number of ordered bases of K independent vectors in GF(2)^{2n}: prod_{m<K} (2^{2n} - 2^m).
BigInt count_ordered_bases(int num_qubits, int dim);

/// Number of ordered bases of a fixed K-dimensional space: prod_{m<K} (2^K - 2^m).
BigInt count_bases_per_subspace(int dim);

/// Streams every K-dimensional subspace of GF(2)^{2n} exactly once, in canonical form.
///
/// Generates reduced row echelon matrices directly. Pivot sets are visited in
/// lexicographic order of their ascending bit positions; within a pivot set the
/// free entries count upward, with the first free slot (highest row, highest bit)
/// most significant.
class SubspaceEnumerator {
  public:
    /// Throws CapacityError, quoting the exact count, when S_{n,K} exceeds `limit`.
    SubspaceEnumerator(int num_qubits, int dim, std::uint64_t limit = kDefaultEnumerationLimit);

    std::optional<Subspace> next();

  private:
    bool load_pivot_set();
    bool advance_pivots();

    int n_;
    int dim_;
    int width_;
    bool done_ = false;
    std::vector<int> pivots_;  // ascending
    // Free slots as (row, bit); row 0 has the highest pivot.
    std::vector<std::pair<int, int>> slots_;
    std::uint64_t counter_ = 0;
    std::uint64_t counter_end_ = 0;
};

std::vector<Subspace> enumerate_subspaces(int num_qubits, int dim, std::uint64_t limit = kDefaultEnumerationLimit);

/// Channel counts by preserved dimension K = 0..2n.
struct ChannelCensus {
    int num_qubits = 0;
    std::vector<BigInt> per_dimension;
    BigInt total;

    bool symmetric() const;
};

ChannelCensus census(int num_qubits);

}  // namespace pce
