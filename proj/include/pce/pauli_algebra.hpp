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

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "pce/errors.hpp"

namespace pce {

/// Largest qubit count handled by the symbolic (bit-word) routines.
inline constexpr int kMaxQubits = 16;
/// Largest qubit count for 2^n x 2^n dense matrices.
inline constexpr int kDenseQubitLimit = 5;
/// Largest qubit count for 4^n x 4^n dense Choi matrices.
inline constexpr int kChoiDenseQubitLimit = 3;

/// Number of multi-indices on n qubits, 4^n.
constexpr std::uint64_t index_space_size(int n) { return std::uint64_t{1} << (2 * n); }

/// A label (alpha_1, ..., alpha_n) in {0,1,2,3}^n of a Pauli string.
///
/// Stored packed two bits per qubit, qubit 0 in the least-significant pair.
/// Within a pair the low bit is j and the high bit is k, with alpha = j + 2k,
/// so the packed word is also the GF(2)^{2n} vector (j, k) and the flat index
/// sum_q alpha_q 4^q. Qubit indices are 0-based throughout the C++ API.
class MultiIndex {
  public:
    MultiIndex() = default;
    /// The zero multi-index on `num_qubits` qubits.
    explicit MultiIndex(int num_qubits);

    static MultiIndex from_word(int num_qubits, std::uint32_t word);
    static MultiIndex from_digits(std::span<const int> digits);
    /// Parses a base-4 label, qubit 0 first: "32" is (3, 2).
    static MultiIndex parse(std::string_view base4);
    /// Parses 2n bits, two per qubit, each pair the binary of the digit: "1110" is (3, 2).
    static MultiIndex parse_bits(std::string_view bits);

    int num_qubits() const { return n_; }
    std::uint32_t word() const { return word_; }
    int digit(int qubit) const;
    MultiIndex with_digit(int qubit, int value) const;
    bool is_zero() const { return word_ == 0; }
    std::vector<int> digits() const;

    std::string str() const;
    std::string bit_str() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  private:
    MultiIndex(int n, std::uint32_t word) : n_(n), word_(word) {}

    int n_ = 0;
    std::uint32_t word_ = 0;
};

/// Throws DimensionError unless 1 <= n <= kMaxQubits.
void check_qubit_count(int n);
/// Throws DimensionError unless both operands have the same qubit count.
void check_same_qubits(const MultiIndex& a, const MultiIndex& b);

/// Componentwise Klein-group sum; equals XOR of the packed words.
MultiIndex klein_add(const MultiIndex& a, const MultiIndex& b);
inline MultiIndex operator^(const MultiIndex& a, const MultiIndex& b) { return klein_add(a, b); }

/// Entry (alpha, beta) of the 4x4 single-qubit sign matrix a.
int single_qubit_sign(int alpha, int beta);

/// A_{alpha beta} = prod_q a_{alpha_q beta_q}, the sign in sigma_a sigma_b sigma_a = A_ab sigma_b.
int conjugation_sign(const MultiIndex& a, const MultiIndex& b);

/// (j_a . m_b + k_a . l_b) mod 2 where a = (j, k) and b = (l, m).
int symplectic_product(const MultiIndex& a, const MultiIndex& b);

/// Whether sigma_a and sigma_b commute.
bool commutes(const MultiIndex& a, const MultiIndex& b);

/// Reflection on one qubit's digit: 0 <-> 3, 1 <-> 2.
MultiIndex reflect_index(const MultiIndex& a, int qubit);

/// Swaps the (j, k) bits of every qubit pair: x ^ swap(y) has parity symplectic_product(x, y).
constexpr std::uint32_t swap_pair_bits(std::uint32_t w) {
    return ((w & 0x55555555u) << 1) | ((w >> 1) & 0x55555555u);
}

/// Single-qubit Pauli matrix sigma_alpha (sigma_0 = identity).
template <typename Scalar = std::complex<double>>
Eigen::Matrix<Scalar, 2, 2> pauli_matrix(int alpha) {
    using C = Scalar;
    Eigen::Matrix<Scalar, 2, 2> m;
    switch (alpha) {
        case 0: m << C(1), C(0), C(0), C(1); break;
        case 1: m << C(0), C(1), C(1), C(0); break;
        case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
        case 3: m << C(1), C(0), C(0), C(-1); break;
        default: throw DimensionError("Pauli digit must be in 0..3");
    }
    return m;
}

/// Dense sigma_{a_0} (x) sigma_{a_1} (x) ... ; qubit 0 is the leftmost tensor factor.
template <typename Scalar = std::complex<double>>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> pauli_string_dense(const MultiIndex& alpha) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (alpha.num_qubits() > kDenseQubitLimit) {
        throw CapacityError("dense Pauli strings are limited to " + std::to_string(kDenseQubitLimit) +
                            " qubits");
    }
    Matrix result = Matrix::Identity(1, 1);
    for (int q = 0; q < alpha.num_qubits(); ++q) {
        Matrix factor = pauli_matrix<Scalar>(alpha.digit(q));
        Matrix next = Eigen::kroneckerProduct(result, factor);
        result = std::move(next);
    }
    return result;
}

}  // namespace pce
