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

#include "pce/generators.hpp"

namespace pce {

Channel generator_map(const MultiIndex& alpha) {
    const MultiIndex seed[] = {alpha};
    return Channel(Subspace::span(alpha.num_qubits(), seed).symplectic_complement());
}

int local_action(const MultiIndex& alpha, int qubit) { return alpha.digit(qubit); }

std::vector<MultiIndex> decompose(const Channel& channel) { return channel.subspace().symplectic_complement().basis(); }

std::vector<MultiIndex> decompose(const PceMap& map) { return decompose(Channel::from_map(map)); }

Channel recompose(int num_qubits, std::span<const MultiIndex> labels) {
    Channel out(Subspace::full(num_qubits));
    for (const MultiIndex& a : labels) {
        if (a.num_qubits() != num_qubits) {
            throw DimensionError("generator label " + a.str() + " has the wrong qubit count");
        }
        out = compose(out, generator_map(a));
    }
    return out;
}

ReflectionParity reflection_parity(const MultiIndex& alpha, int qubit) {
    const MultiIndex mirrored_zero = reflect_index(MultiIndex(alpha.num_qubits()), qubit);
    return conjugation_sign(alpha, mirrored_zero) == 1 ? ReflectionParity::kSymmetric
                                                       : ReflectionParity::kAntisymmetric;
}

}  // namespace pce
