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

#include "pce/dynamics.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace pce {

namespace detail {

void check_time(double t) {
    if (!(t >= 0) || !std::isfinite(t)) {
        throw ValueError("time must be finite and non-negative");
    }
}

void check_rate(double rate) {
    if (!(rate > 0) || !std::isfinite(rate)) {
        throw ValueError("rate must be finite and positive");
    }
}

}  // namespace detail

DissipativeProcess::DissipativeProcess(std::vector<DissipationTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw ValueError("a dissipative process needs at least one term");
    }
    const int n = terms_.front().label.num_qubits();
    check_qubit_count(n);
    for (const DissipationTerm& t : terms_) {
        if (t.label.num_qubits() != n) {
            throw DimensionError("process terms have different qubit counts");
        }
        detail::check_rate(t.rate);
    }
}

std::vector<MultiIndex> DissipativeProcess::labels() const {
    std::vector<MultiIndex> out;
    for (const DissipationTerm& t : terms_) {
        out.push_back(t.label);
    }
    return out;
}

double DissipativeProcess::decay_rate(const MultiIndex& beta) const {
    double rate = 0;
    for (const DissipationTerm& t : terms_) {
        rate += t.rate * (1 - conjugation_sign(t.label, beta)) / 2;
    }
    return rate;
}

Channel DissipativeProcess::fixed_point() const {
    const auto l = labels();
    return recompose(num_qubits(), l);
}

RealVector evolve_components(const DissipativeProcess& process, const RealVector& r0, double t) {
    detail::check_time(t);
    const int n = process.num_qubits();
    if (static_cast<std::uint64_t>(r0.size()) != index_space_size(n)) {
        throw DimensionError("component vector does not match the process qubit count");
    }
    RealVector r = r0;
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        const double rate = process.decay_rate(MultiIndex::from_word(n, w));
        if (rate != 0) {
            r(w) *= std::exp(-rate * t);
        }
    }
    return r;
}

ComplexMatrix collision_unitary(const MultiIndex& alpha) {
    if (alpha.num_qubits() + 1 > kDenseQubitLimit) {
        throw CapacityError("collision unitaries are limited to " + std::to_string(kDenseQubitLimit - 1) +
                            " system qubits");
    }
    const ComplexMatrix sigma = pauli_string_dense(alpha);
    const ComplexMatrix id = ComplexMatrix::Identity(sigma.rows(), sigma.cols());
    Eigen::Matrix2cd p0, p1, hadamard;
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    hadamard << 1, 1, 1, -1;
    hadamard /= std::sqrt(2.0);
    const ComplexMatrix controlled =
        ComplexMatrix(Eigen::kroneckerProduct(id, p0)) + ComplexMatrix(Eigen::kroneckerProduct(sigma, p1));
    const ComplexMatrix h_ancilla = Eigen::kroneckerProduct(id, hadamard);
    return controlled * h_ancilla;
}

ComplexMatrix collide_once(const MultiIndex& alpha, const ComplexMatrix& rho) {
    const int n = qubits_of(rho);
    if (n != alpha.num_qubits()) {
        throw DimensionError("state and label disagree on qubit count");
    }
    const ComplexMatrix u = collision_unitary(alpha);
    Eigen::Matrix2cd ancilla;
    ancilla << 1, 0, 0, 0;
    const ComplexMatrix joint = Eigen::kroneckerProduct(rho, ancilla);
    const ComplexMatrix evolved = u * joint * u.adjoint();
    std::vector<int> system(n);
    for (int q = 0; q < n; ++q) {
        system[q] = q;
    }
    return partial_trace(evolved, system);
}

ComplexMatrix collide(const CollisionSchedule& schedule, const ComplexMatrix& rho) {
    ComplexMatrix state = rho;
    for (const MultiIndex& alpha : schedule.labels) {
        state = collide_once(alpha, state);
    }
    return state;
}

}  // namespace pce
