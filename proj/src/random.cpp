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

#include "pce/random.hpp"

#include <cmath>
#include <numbers>

namespace pce {

double Rng::uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits()) * bound) >> 64);
}

ComplexMatrix random_density_matrix(int num_qubits, Rng& rng) {
    check_qubit_count(num_qubits);
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = {re, im};
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) / 2.0;
}

TauBitset random_tau(int num_qubits, Rng& rng) {
    check_qubit_count(num_qubits);
    TauBitset tau(index_space_size(num_qubits));
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (rng.bits() & 1u) {
            tau.set(i);
        }
    }
    tau.set(0);
    return tau;
}

Subspace random_subspace(int num_qubits, Rng& rng) {
    check_qubit_count(num_qubits);
    const auto seeds = rng.below(2 * num_qubits + 1);
    std::vector<MultiIndex> picks;
    for (std::uint64_t i = 0; i < seeds; ++i) {
        picks.push_back(MultiIndex::from_word(num_qubits, static_cast<std::uint32_t>(rng.below(index_space_size(num_qubits)))));
    }
    return Subspace::span(num_qubits, picks);
}

PceMap random_oracle_map(int num_qubits, Rng& rng) {
    switch (rng.below(3)) {
        case 0:
            return PceMap::from_tau(num_qubits, random_tau(num_qubits, rng));
        case 1:
            return PceMap::from_subspace(random_subspace(num_qubits, rng));
        default: {
            TauBitset tau = PceMap::from_subspace(random_subspace(num_qubits, rng)).tau();
            tau.flip(1 + rng.below(tau.size() - 1));
            return PceMap::from_tau(num_qubits, std::move(tau));
        }
    }
}

}  // namespace pce
