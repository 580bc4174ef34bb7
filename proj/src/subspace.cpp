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

#include "pce/subspace.hpp"

#include <algorithm>

namespace pce {

namespace {

constexpr int kMaxListedDimension = 26;

// Dot-product annihilator of a span, itself in canonical form.
std::vector<gf2::Row> annihilator(std::span<const gf2::Row> rows, int n) { return gf2::kernel(rows, 2 * n); }

}  // namespace

Subspace::Subspace(int num_qubits) : n_(num_qubits) { check_qubit_count(num_qubits); }

Subspace Subspace::full(int num_qubits) {
    Subspace s(num_qubits);
    for (int b = 2 * num_qubits - 1; b >= 0; --b) {
        s.rows_.push_back(gf2::Row{1} << b);
    }
    return s;
}

Subspace Subspace::span(int num_qubits, std::span<const MultiIndex> seeds) {
    Subspace s(num_qubits);
    for (const MultiIndex& a : seeds) {
        if (a.num_qubits() != num_qubits) {
            throw DimensionError("seed has the wrong qubit count");
        }
        gf2::insert(s.rows_, a.word());
    }
    return s;
}

Subspace Subspace::from_words(int num_qubits, std::span<const gf2::Row> words) {
    Subspace s(num_qubits);
    for (gf2::Row w : words) {
        gf2::insert(s.rows_, MultiIndex::from_word(num_qubits, w).word());
    }
    return s;
}

std::vector<MultiIndex> Subspace::basis() const {
    std::vector<MultiIndex> out;
    out.reserve(rows_.size());
    for (gf2::Row r : rows_) {
        out.push_back(MultiIndex::from_word(n_, r));
    }
    return out;
}

std::vector<MultiIndex> Subspace::elements() const {
    if (dimension() > kMaxListedDimension) {
        throw CapacityError("refusing to list 2^" + std::to_string(dimension()) + " elements");
    }
    std::vector<gf2::Row> words;
    words.reserve(size());
    gf2::Row current = 0;
    words.push_back(current);
    // Gray-code walk: step i flips the basis vector at the lowest set bit of i.
    for (std::uint64_t i = 1; i < size(); ++i) {
        current ^= rows_[std::countr_zero(i)];
        words.push_back(current);
    }
    std::sort(words.begin(), words.end());
    std::vector<MultiIndex> out;
    out.reserve(words.size());
    for (gf2::Row w : words) {
        out.push_back(MultiIndex::from_word(n_, w));
    }
    return out;
}

bool Subspace::contains(const MultiIndex& a) const {
    if (a.num_qubits() != n_) {
        throw DimensionError("multi-index has the wrong qubit count");
    }
    return gf2::reduce(a.word(), rows_) == 0;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.n_ != n_) {
        throw DimensionError("subspaces on different qubit counts");
    }
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](gf2::Row r) { return gf2::reduce(r, rows_) == 0; });
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.n_ != n_) {
        throw DimensionError("subspaces on different qubit counts");
    }
    Subspace s = *this;
    for (gf2::Row r : other.rows_) {
        gf2::insert(s.rows_, r);
    }
    return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.n_ != n_) {
        throw DimensionError("subspaces on different qubit counts");
    }
    // U ∩ V = ann(ann(U) + ann(V)).
    std::vector<gf2::Row> joint = annihilator(rows_, n_);
    for (gf2::Row r : annihilator(other.rows_, n_)) {
        gf2::insert(joint, r);
    }
    Subspace s(n_);
    s.rows_ = annihilator(joint, n_);
    return s;
}

Subspace Subspace::symplectic_complement() const {
    std::vector<gf2::Row> swapped;
    swapped.reserve(rows_.size());
    for (gf2::Row r : rows_) {
        swapped.push_back(swap_pair_bits(r));
    }
    Subspace s(n_);
    s.rows_ = gf2::kernel(swapped, 2 * n_);
    return s;
}

}  // namespace pce
