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

#include "pce/enumeration.hpp"

#include <string>

namespace pce {

namespace {

void check_dim(int n, int dim) {
    check_qubit_count(n);
    if (dim < 0 || dim > 2 * n) {
        throw DimensionError("K must be in 0.." + std::to_string(2 * n) + ", got " + std::to_string(dim));
    }
}

BigInt pow2(int e) { return BigInt(1) << e; }

}  // namespace

BigInt count_channels(int num_qubits, int dim) {
    check_dim(num_qubits, dim);
    BigInt num = 1;
    BigInt den = 1;
    for (int m = 0; m < dim; ++m) {
        num *= pow2(2 * num_qubits - m) - 1;
        den *= pow2(dim - m) - 1;
    }
    return num / den;
}

BigInt count_ordered_bases(int num_qubits, int dim) {
    check_dim(num_qubits, dim);
    BigInt out = 1;
    for (int m = 0; m < dim; ++m) {
        out *= pow2(2 * num_qubits) - pow2(m);
    }
    return out;
}

BigInt count_bases_per_subspace(int dim) {
    if (dim < 0) {
        throw DimensionError("K must be non-negative");
    }
    BigInt out = 1;
    for (int m = 0; m < dim; ++m) {
        out *= pow2(dim) - pow2(m);
    }
    return out;
}

SubspaceEnumerator::SubspaceEnumerator(int num_qubits, int dim, std::uint64_t limit)
    : n_(num_qubits), dim_(dim), width_(2 * num_qubits) {
    const BigInt count = count_channels(num_qubits, dim);
    if (count > limit) {
        throw CapacityError("S_{" + std::to_string(num_qubits) + "," + std::to_string(dim) + "} = " + count.str() +
                            " subspaces exceed the enumeration limit of " + std::to_string(limit));
    }
    pivots_.resize(dim_);
    for (int i = 0; i < dim_; ++i) {
        pivots_[i] = i;
    }
    load_pivot_set();
}

bool SubspaceEnumerator::load_pivot_set() {
    slots_.clear();
    std::uint32_t pivot_mask = 0;
    for (int p : pivots_) {
        pivot_mask |= std::uint32_t{1} << p;
    }
    for (int row = 0; row < dim_; ++row) {
        const int p = pivots_[dim_ - 1 - row];
        for (int bit = p - 1; bit >= 0; --bit) {
            if (!((pivot_mask >> bit) & 1u)) {
                slots_.emplace_back(row, bit);
            }
        }
    }
    counter_ = 0;
    counter_end_ = std::uint64_t{1} << slots_.size();
    return true;
}

bool SubspaceEnumerator::advance_pivots() {
    // Next K-combination of 0..width-1 in lexicographic order.
    int i = dim_ - 1;
    while (i >= 0 && pivots_[i] == width_ - dim_ + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++pivots_[i];
    for (int j = i + 1; j < dim_; ++j) {
        pivots_[j] = pivots_[j - 1] + 1;
    }
    return load_pivot_set();
}

std::optional<Subspace> SubspaceEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (counter_ == counter_end_) {
        if (!advance_pivots()) {
            done_ = true;
            return std::nullopt;
        }
    }
    std::vector<gf2::Row> rows(dim_);
    for (int row = 0; row < dim_; ++row) {
        rows[row] = gf2::Row{1} << pivots_[dim_ - 1 - row];
    }
    const std::size_t nslots = slots_.size();
    for (std::size_t s = 0; s < nslots; ++s) {
        if ((counter_ >> (nslots - 1 - s)) & 1u) {
            rows[slots_[s].first] |= gf2::Row{1} << slots_[s].second;
        }
    }
    ++counter_;
    if (dim_ == 0) {
        done_ = true;
    }
    return Subspace::from_words(n_, rows);
}

std::vector<Subspace> enumerate_subspaces(int num_qubits, int dim, std::uint64_t limit) {
    SubspaceEnumerator it(num_qubits, dim, limit);
    std::vector<Subspace> out;
    while (auto s = it.next()) {
        out.push_back(std::move(*s));
    }
    return out;
}

bool ChannelCensus::symmetric() const {
    const std::size_t last = per_dimension.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        if (per_dimension[k] != per_dimension[last - k]) {
            return false;
        }
    }
    return true;
}

ChannelCensus census(int num_qubits) {
    check_qubit_count(num_qubits);
    ChannelCensus c;
    c.num_qubits = num_qubits;
    for (int k = 0; k <= 2 * num_qubits; ++k) {
        c.per_dimension.push_back(count_channels(num_qubits, k));
        c.total += c.per_dimension.back();
    }
    return c;
}

}  // namespace pce
