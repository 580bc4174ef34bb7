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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "pce/gf2.hpp"
#include "pce/pauli_algebra.hpp"

namespace pce {

/// A GF(2)-linear subspace of the multi-index space {0,1,2,3}^n = GF(2)^{2n}.
///
/// Held as its canonical reduced-row-echelon basis (see gf2::rref), so equality
/// of subspaces is equality of bases. A basis costs at most (2n)^2 bits.
class Subspace {
  public:
    Subspace() = default;
    /// The zero subspace {0} on `num_qubits` qubits.
    explicit Subspace(int num_qubits);

    static Subspace full(int num_qubits);
    /// GF(2) span of the seeds; always contains 0.
    static Subspace span(int num_qubits, std::span<const MultiIndex> seeds);
    static Subspace from_words(int num_qubits, std::span<const gf2::Row> words);

    int num_qubits() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    /// Number of elements, 2^dimension.
    std::uint64_t size() const { return std::uint64_t{1} << dimension(); }

    std::span<const gf2::Row> rows() const { return rows_; }
    std::vector<MultiIndex> basis() const;
    /// All 2^K elements sorted by flat index.
    std::vector<MultiIndex> elements() const;

    bool contains(const MultiIndex& a) const;
    bool contains(const Subspace& other) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    /// {a : symplectic_product(a, w) = 0 for all w in this}.
    Subspace symplectic_complement() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace&, const Subspace&) = default;

  private:
    int n_ = 0;
    std::vector<gf2::Row> rows_;
};

}  // namespace pce
