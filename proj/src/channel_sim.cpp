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

#include "pce/channel_sim.hpp"

#include <array>

#include <unsupported/Eigen/KroneckerProduct>

namespace pce {

namespace {

void check_choi_qubits(int n) {
    if (n > kChoiDenseQubitLimit) {
        throw CapacityError("dense Choi matrices are limited to " + std::to_string(kChoiDenseQubitLimit) + " qubits");
    }
}

// Weights sqrt(p) for the generic element sum_s sqrt(p_s) sigma_s of the commuting set.
constexpr std::array<double, 31> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                            59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};

}  // namespace

ComplexMatrix choi_term(const MultiIndex& alpha) {
    check_choi_qubits(alpha.num_qubits());
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int q = 0; q < alpha.num_qubits(); ++q) {
        const Eigen::Matrix2cd s = pauli_matrix(alpha.digit(q));
        ComplexMatrix pair = Eigen::kroneckerProduct(s, s.conjugate());
        ComplexMatrix next = Eigen::kroneckerProduct(out, pair);
        out = std::move(next);
    }
    return out;
}

Eigen::VectorXcd choi_eigenvector(const MultiIndex& alpha) {
    check_choi_qubits(alpha.num_qubits());
    Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
    for (int q = 0; q < alpha.num_qubits(); ++q) {
        const Eigen::Matrix2cd s = pauli_matrix(alpha.digit(q));
        Eigen::Vector4cd vec;
        vec << s(0, 0), s(0, 1), s(1, 0), s(1, 1);
        Eigen::VectorXcd next = Eigen::kroneckerProduct(out, vec);
        out = std::move(next);
    }
    return out;
}

ChoiBuilder::ChoiBuilder(int num_qubits) : n_(num_qubits) {
    check_qubit_count(num_qubits);
    check_choi_qubits(num_qubits);
    terms_.reserve(index_space_size(num_qubits));
    for (std::uint32_t w = 0; w < index_space_size(num_qubits); ++w) {
        terms_.push_back(choi_term(MultiIndex::from_word(num_qubits, w)));
    }
}

ComplexMatrix ChoiBuilder::build(const PceMap& map) const {
    if (map.num_qubits() != n_) {
        throw DimensionError("map does not match the builder's qubit count");
    }
    const Eigen::Index dim = Eigen::Index{1} << (2 * n_);
    ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
    const TauBitset& tau = map.tau();
    for (auto i = tau.find_first(); i != TauBitset::npos; i = tau.find_next(i)) {
        d += terms_[i];
    }
    return d / static_cast<double>(Eigen::Index{1} << n_);
}

ComplexMatrix choi_dense(const PceMap& map) {
    check_choi_qubits(map.num_qubits());
    const int n = map.num_qubits();
    const Eigen::Index dim = Eigen::Index{1} << (2 * n);
    ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
    for (const MultiIndex& a : map.preserved()) {
        d += choi_term(a);
    }
    return d / static_cast<double>(Eigen::Index{1} << n);
}

void validate_maximal_commuting_set(std::span<const MultiIndex> strings) {
    if (strings.empty()) {
        throw InvalidStabilizerSetError("empty set");
    }
    const int n = strings.front().num_qubits();
    std::vector<std::uint32_t> words;
    for (const MultiIndex& s : strings) {
        if (s.num_qubits() != n) {
            throw InvalidStabilizerSetError("strings have different qubit counts");
        }
        words.push_back(s.word());
    }
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
        throw InvalidStabilizerSetError("repeated string");
    }
    if (words.size() != (std::uint64_t{1} << n)) {
        throw InvalidStabilizerSetError("a maximal commuting set on " + std::to_string(n) + " qubits has " +
                                        std::to_string(std::uint64_t{1} << n) + " elements, got " +
                                        std::to_string(words.size()));
    }
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
            if (!commutes(strings[i], strings[j])) {
                throw InvalidStabilizerSetError(strings[i].str() + " and " + strings[j].str() + " anticommute");
            }
            if (!std::binary_search(words.begin(), words.end(), (strings[i] ^ strings[j]).word())) {
                throw InvalidStabilizerSetError("set is not closed: " + strings[i].str() + " + " + strings[j].str() +
                                                " is missing");
            }
        }
    }
    if (words.front() != 0) {
        throw InvalidStabilizerSetError("set does not contain the identity");
    }
}

PceMap qc_channel(std::span<const MultiIndex> strings) {
    validate_maximal_commuting_set(strings);
    return PceMap::from_preserved(strings.front().num_qubits(), strings);
}

Eigen::MatrixXd qc_pauli_matrix(std::span<const MultiIndex> strings) {
    validate_maximal_commuting_set(strings);
    const int n = strings.front().num_qubits();
    if (n > kChoiDenseQubitLimit) {
        throw CapacityError("dense superoperators are limited to " + std::to_string(kChoiDenseQubitLimit) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    std::size_t next_prime = 0;
    for (const MultiIndex& s : strings) {
        if (!s.is_zero()) {
            h += std::sqrt(kPrimes.at(next_prime++)) * pauli_string_dense(s);
        }
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    const ComplexMatrix basis = solver.eigenvectors();

    const auto channel = [&](const ComplexMatrix& x) {
        ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            const auto psi = basis.col(i);
            const std::complex<double> weight = (psi.adjoint() * x * psi)(0, 0);
            out += weight * psi * psi.adjoint();
        }
        return out;
    };

    const auto size = static_cast<Eigen::Index>(index_space_size(n));
    std::vector<ComplexMatrix> paulis;
    for (std::uint32_t w = 0; w < size; ++w) {
        paulis.push_back(pauli_string_dense(MultiIndex::from_word(n, w)));
    }
    Eigen::MatrixXd m(size, size);
    for (Eigen::Index l = 0; l < size; ++l) {
        const ComplexMatrix image = channel(paulis[l]);
        for (Eigen::Index k = 0; k < size; ++k) {
            m(k, l) = (paulis[k] * image).trace().real() / static_cast<double>(dim);
        }
    }
    return m;
}

}  // namespace pce
