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

#include <array>
#include <bit>

#include "pce/pauli_algebra.hpp"

namespace pce {

namespace {

// Printed row by row; row alpha, column beta.
constexpr std::array<std::array<int, 4>, 4> kSignMatrix = {{
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
}};

constexpr std::uint32_t kLowBits = 0x55555555u;

std::uint32_t word_mask(int n) {
    return n == 16 ? 0xFFFFFFFFu : (std::uint32_t{1} << (2 * n)) - 1;
}

// One bit per qubit (at the pair's low position) set where the digit is non-zero.
constexpr std::uint32_t nonzero_digits(std::uint32_t w) { return (w | (w >> 1)) & kLowBits; }

}  // namespace

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw DimensionError("qubit count must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                             std::to_string(n));
    }
}

void check_same_qubits(const MultiIndex& a, const MultiIndex& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("multi-indices on " + std::to_string(a.num_qubits()) + " and " +
                             std::to_string(b.num_qubits()) + " qubits");
    }
}

MultiIndex::MultiIndex(int num_qubits) : n_(num_qubits) { check_qubit_count(num_qubits); }

MultiIndex MultiIndex::from_word(int num_qubits, std::uint32_t word) {
    check_qubit_count(num_qubits);
    if ((word & ~word_mask(num_qubits)) != 0) {
        throw DimensionError("flat index out of range for " + std::to_string(num_qubits) + " qubits");
    }
    return MultiIndex(num_qubits, word);
}

MultiIndex MultiIndex::from_digits(std::span<const int> digits) {
    const int n = static_cast<int>(digits.size());
    check_qubit_count(n);
    std::uint32_t w = 0;
    for (int q = 0; q < n; ++q) {
        if (digits[q] < 0 || digits[q] > 3) {
            throw DimensionError("Pauli digit must be in 0..3");
        }
        w |= static_cast<std::uint32_t>(digits[q]) << (2 * q);
    }
    return MultiIndex(n, w);
}

MultiIndex MultiIndex::parse(std::string_view base4) {
    std::vector<int> digits;
    digits.reserve(base4.size());
    for (char c : base4) {
        if (c < '0' || c > '3') {
            throw ParseError("invalid base-4 label '" + std::string(base4) + "'");
        }
        digits.push_back(c - '0');
    }
    if (digits.empty() || static_cast<int>(digits.size()) > kMaxQubits) {
        throw ParseError("base-4 label must have 1.." + std::to_string(kMaxQubits) + " digits");
    }
    return from_digits(digits);
}

MultiIndex MultiIndex::parse_bits(std::string_view bits) {
    if (bits.empty() || bits.size() % 2 != 0 || static_cast<int>(bits.size()) > 2 * kMaxQubits) {
        throw ParseError("bit string must have an even length of 2.." + std::to_string(2 * kMaxQubits));
    }
    std::vector<int> digits;
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        const char hi = bits[i];
        const char lo = bits[i + 1];
        if ((hi != '0' && hi != '1') || (lo != '0' && lo != '1')) {
            throw ParseError("invalid bit string '" + std::string(bits) + "'");
        }
        digits.push_back(2 * (hi - '0') + (lo - '0'));
    }
    return from_digits(digits);
}

int MultiIndex::digit(int qubit) const {
    if (qubit < 0 || qubit >= n_) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
    }
    return static_cast<int>((word_ >> (2 * qubit)) & 3u);
}

MultiIndex MultiIndex::with_digit(int qubit, int value) const {
    if (qubit < 0 || qubit >= n_) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
    }
    if (value < 0 || value > 3) {
        throw DimensionError("Pauli digit must be in 0..3");
    }
    const std::uint32_t shift = 2 * static_cast<std::uint32_t>(qubit);
    return MultiIndex(n_, (word_ & ~(3u << shift)) | (static_cast<std::uint32_t>(value) << shift));
}

std::vector<int> MultiIndex::digits() const {
    std::vector<int> out(n_);
    for (int q = 0; q < n_; ++q) {
        out[q] = digit(q);
    }
    return out;
}

std::string MultiIndex::str() const {
    std::string s;
    for (int q = 0; q < n_; ++q) {
        s.push_back(static_cast<char>('0' + digit(q)));
    }
    return s;
}

std::string MultiIndex::bit_str() const {
    std::string s;
    for (int q = 0; q < n_; ++q) {
        const int d = digit(q);
        s.push_back((d & 2) ? '1' : '0');
        s.push_back((d & 1) ? '1' : '0');
    }
    return s;
}

MultiIndex klein_add(const MultiIndex& a, const MultiIndex& b) {
    check_same_qubits(a, b);
    return MultiIndex::from_word(a.num_qubits(), a.word() ^ b.word());
}

int single_qubit_sign(int alpha, int beta) {
    if (alpha < 0 || alpha > 3 || beta < 0 || beta > 3) {
        throw DimensionError("Pauli digit must be in 0..3");
    }
    return kSignMatrix[alpha][beta];
}

int symplectic_product(const MultiIndex& a, const MultiIndex& b) {
    check_same_qubits(a, b);
    return std::popcount(a.word() & swap_pair_bits(b.word())) & 1;
}

int conjugation_sign(const MultiIndex& a, const MultiIndex& b) {
    return symplectic_product(a, b) ? -1 : 1;
}

bool commutes(const MultiIndex& a, const MultiIndex& b) {
    check_same_qubits(a, b);
    // Count qubits where both digits are non-zero and differ.
    const std::uint32_t clash =
        nonzero_digits(a.word()) & nonzero_digits(b.word()) & nonzero_digits(a.word() ^ b.word());
    return (std::popcount(clash) & 1) == 0;
}

MultiIndex reflect_index(const MultiIndex& a, int qubit) {
    return a.with_digit(qubit, a.digit(qubit) ^ 3);
}

}  // namespace pce
