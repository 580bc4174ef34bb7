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
#include <random>

#include "pce/channel_sim.hpp"
#include "pce/pce_map.hpp"

namespace pce {

/// Seeded generator whose derived doubles do not depend on the standard library's distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal (Box-Muller).
    double normal();
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

  private:
    std::mt19937_64 engine_;
};

/// rho = G G^dagger / tr(G G^dagger) for a complex Ginibre matrix G.
ComplexMatrix random_density_matrix(int num_qubits, Rng& rng);

/// Uniform tau bitset with tau_0 = 1.
TauBitset random_tau(int num_qubits, Rng& rng);

/// Span of a uniformly random number (0..2n) of uniform random seeds.
Subspace random_subspace(int num_qubits, Rng& rng);

/// Mix used for oracle sweeps: a uniform tau, a random channel, or a random channel with one
/// non-zero index toggled, each with probability 1/3.
PceMap random_oracle_map(int num_qubits, Rng& rng);

}  // namespace pce
