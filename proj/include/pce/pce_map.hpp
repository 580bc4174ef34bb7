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
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pce/pauli_algebra.hpp"
#include "pce/subspace.hpp"

namespace pce {

/// Largest qubit count for which the 4^n-entry tau bitset is materialized.
inline constexpr int kTauQubitLimit = 13;

using TauBitset = boost::dynamic_bitset<std::uint64_t>;

/// A Pauli-component-erasing map r_a -> tau_a r_a with tau_a in {0, 1}.
///
/// Carries the tau bitset (indexed by flat multi-index) whenever
/// n <= kTauQubitLimit, and the canonical subspace of preserved indices
/// whenever the map is known to be a channel. Non-channel maps are
/// representable; verdict functions take them as input.
class PceMap {
  public:
    PceMap() = default;

    /// Attaches the subspace form automatically when tau_0 = 1 and the preserved set is closed.
    static PceMap from_tau(int num_qubits, TauBitset tau);
    static PceMap from_preserved(int num_qubits, std::span<const MultiIndex> preserved);
    static PceMap from_subspace(const Subspace& w);

    static PceMap identity(int num_qubits);
    static PceMap depolarizing(int num_qubits);

    int num_qubits() const { return n_; }
    bool has_tau() const { return tau_.has_value(); }
    /// Throws CapacityError for basis-only maps (n > kTauQubitLimit).
    const TauBitset& tau() const;
    const std::optional<Subspace>& subspace() const { return subspace_; }

    bool preserves(const MultiIndex& a) const;
    bool trace_preserving() const;
    std::uint64_t preserved_count() const;
    /// Preserved indices sorted by flat index.
    std::vector<MultiIndex> preserved() const;

    friend bool operator==(const PceMap& a, const PceMap& b);

  private:
    int n_ = 0;
    std::optional<TauBitset> tau_;
    std::optional<Subspace> subspace_;
};

/// A PCE map validated as completely positive; always carries its subspace.
class Channel {
  public:
    explicit Channel(const Subspace& w);
    /// Throws TracePreservationError or NotAChannelError.
    static Channel from_map(const PceMap& map);

    int num_qubits() const { return map_.num_qubits(); }
    /// K, with 2^K preserved components.
    int dimension() const { return subspace().dimension(); }
    const Subspace& subspace() const { return *map_.subspace(); }
    const PceMap& map() const { return map_; }

    friend bool operator==(const Channel& a, const Channel& b) { return a.subspace() == b.subspace(); }

  private:
    PceMap map_;
};

/// An exact dyadic rational numerator / 2^exponent.
struct Dyadic {
    std::int64_t numerator = 0;
    int exponent = 0;

    double to_double() const;
    friend bool operator==(const Dyadic& a, const Dyadic& b);
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
};

/// The 4^n Choi eigenvalues lambda_a = numerator_a / 2^n, indexed by flat multi-index.
class ChoiSpectrum {
  public:
    ChoiSpectrum(int num_qubits, std::vector<std::int64_t> numerators);

    int num_qubits() const { return n_; }
    std::size_t size() const { return numerators_.size(); }
    std::span<const std::int64_t> numerators() const { return numerators_; }
    Dyadic operator[](std::size_t i) const { return {numerators_.at(i), n_}; }
    Dyadic min() const;
    Dyadic sum() const;
    std::vector<double> values() const;

  private:
    int n_;
    std::vector<std::int64_t> numerators_;
};

/// A pair of preserved indices whose Klein sum is erased.
struct ClosureViolation {
    MultiIndex first;
    MultiIndex second;
    MultiIndex missing_sum;
};

/// lambda = 2^{-n} A tau, by a per-qubit butterfly in O(n 4^n).
ChoiSpectrum choi_spectrum(const PceMap& map);

/// tau = 2^{-n} A lambda. Throws NotPceSpectrumError unless every entry is exactly 0 or 1.
PceMap tau_from_spectrum(const ChoiSpectrum& spectrum);

/// Whether the preserved set is closed under Klein addition. Requires tau_0 = 1.
bool is_closed_subspace(const PceMap& map);

/// Complete positivity of a PCE map via the subspace criterion. Requires tau_0 = 1.
bool is_completely_positive(const PceMap& map);

/// First violating pair in lexicographic order of base-4 labels; nullopt for closed sets.
std::optional<ClosureViolation> find_closure_violation(const PceMap& map);

/// GF(2) span of the seeds.
Subspace closure(int num_qubits, std::span<const MultiIndex> seeds);

PceMap subspace_to_map(const Subspace& w);
/// Throws NotAChannelError if the map is not closed.
Subspace map_to_subspace(const PceMap& map);

/// Entrywise product of tau; intersection of subspaces.
PceMap compose(const PceMap& a, const PceMap& b);
Channel compose(const Channel& a, const Channel& b);

/// tau'_a = tau_{reflect_index(a, qubit)}.
PceMap reflect(const PceMap& map, int qubit);

}  // namespace pce
