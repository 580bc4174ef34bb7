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

#include <span>
#include <vector>

#include "pce/pce_map.hpp"

namespace pce {

/// G_a: the channel with Kraus pair {1/sqrt2, sigma_a/sqrt2}.
///
/// tau_b = (1 + A_ab) / 2, so the preserved set is Phi(a) = {b : A_ab = 1},
/// the symplectic complement of span{a}. G_0 is the identity; every other
/// generator preserves exactly half of the 4^n components.
Channel generator_map(const MultiIndex& alpha);

/// Label of the single-qubit generator G_{alpha_q} that G_alpha induces on qubit q.
int local_action(const MultiIndex& alpha, int qubit);

/// Generator labels whose composition is the channel.
///
/// Returns the canonical basis of the symplectic complement of the preserved
/// subspace W: 2n - K labels, empty for the identity. Decompositions are not
/// unique; only recompose(decompose(c)) == c is guaranteed across bases.
std::vector<MultiIndex> decompose(const Channel& channel);
/// Validates the map first; throws NotAChannelError for non-CP input.
std::vector<MultiIndex> decompose(const PceMap& map);

/// Composition of generator_map over the labels; the identity for an empty list.
Channel recompose(int num_qubits, std::span<const MultiIndex> labels);

enum class ReflectionParity { kSymmetric, kAntisymmetric };

/// Symmetric iff the reflected zero index lies in Phi(alpha), i.e. alpha_q is 0 or 3.
ReflectionParity reflection_parity(const MultiIndex& alpha, int qubit);

}  // namespace pce
