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

#include "pce/pce_map.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace pce {

namespace {

constexpr std::array<std::array<int, 4>, 4> kSign = {{
    {1, 1, 1, 1},
    {1, 1, -1, -1},
    {1, -1, 1, -1},
    {1, -1, -1, 1},
}};

void check_tau_qubits(int n) {
    check_qubit_count(n);
    if (n > kTauQubitLimit) {
        throw CapacityError("tau bitsets are limited to " + std::to_string(kTauQubitLimit) + " qubits");
    }
}

// In place v <- A v with A = a^{(x) n}, one 4-point butterfly per qubit.
void apply_sign_matrix(std::vector<std::int64_t>& v, int n) {
    std::size_t stride = 1;
    for (int q = 0; q < n; ++q, stride *= 4) {
        for (std::size_t base = 0; base < v.size(); base += 4 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                std::array<std::int64_t, 4> x{};
                for (int d = 0; d < 4; ++d) {
                    x[d] = v[base + off + d * stride];
                }
                for (int r = 0; r < 4; ++r) {
                    std::int64_t acc = 0;
                    for (int c = 0; c < 4; ++c) {
                        acc += kSign[r][c] * x[c];
                    }
                    v[base + off + r * stride] = acc;
                }
            }
        }
    }
}

// The span of the preserved set, if it equals the preserved set.
std::optional<Subspace> closed_span(int n, const TauBitset& tau) {
    if (!tau.test(0)) {
        return std::nullopt;
    }
    std::vector<gf2::Row> rows;
    for (auto i = tau.find_first(); i != TauBitset::npos; i = tau.find_next(i)) {
        gf2::insert(rows, static_cast<gf2::Row>(i));
    }
    // Closed iff the preserved set is as large as its span.
    if (tau.count() != (std::uint64_t{1} << rows.size())) {
        return std::nullopt;
    }
    return Subspace::from_words(n, rows);
}

// Flat-index key that orders labels like their base-4 strings.
std::uint64_t label_order_key(const MultiIndex& a) {
    std::uint64_t key = 0;
    for (int q = 0; q < a.num_qubits(); ++q) {
        key = key * 4 + static_cast<std::uint64_t>(a.digit(q));
    }
    return key;
}

void require_trace_preserving(const PceMap& map) {
    if (!map.trace_preserving()) {
        throw TracePreservationError("tau_0 = 0: the map does not preserve the trace");
    }
}

}  // namespace

PceMap PceMap::from_tau(int num_qubits, TauBitset tau) {
    check_tau_qubits(num_qubits);
    if (tau.size() != index_space_size(num_qubits)) {
        throw DimensionError("tau must have 4^n = " + std::to_string(index_space_size(num_qubits)) +
                             " entries, got " + std::to_string(tau.size()));
    }
    PceMap m;
    m.n_ = num_qubits;
    m.subspace_ = closed_span(num_qubits, tau);
    m.tau_ = std::move(tau);
    return m;
}

PceMap PceMap::from_preserved(int num_qubits, std::span<const MultiIndex> preserved) {
    check_qubit_count(num_qubits);
    for (const MultiIndex& a : preserved) {
        if (a.num_qubits() != num_qubits) {
            throw DimensionError("preserved index " + a.str() + " has the wrong qubit count");
        }
    }
    if (num_qubits <= kTauQubitLimit) {
        TauBitset tau(index_space_size(num_qubits));
        for (const MultiIndex& a : preserved) {
            tau.set(a.word());
        }
        return from_tau(num_qubits, std::move(tau));
    }
    std::vector<gf2::Row> words;
    for (const MultiIndex& a : preserved) {
        words.push_back(a.word());
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Subspace w = Subspace::from_words(num_qubits, words);
    if (words.empty() || words.front() != 0 || w.size() != words.size()) {
        throw CapacityError("non-channel maps above " + std::to_string(kTauQubitLimit) +
                            " qubits cannot be represented");
    }
    return from_subspace(w);
}

PceMap PceMap::from_subspace(const Subspace& w) {
    PceMap m;
    m.n_ = w.num_qubits();
    check_qubit_count(m.n_);
    m.subspace_ = w;
    if (m.n_ <= kTauQubitLimit) {
        TauBitset tau(index_space_size(m.n_));
        gf2::Row current = 0;
        tau.set(current);
        const auto rows = w.rows();
        for (std::uint64_t i = 1; i < w.size(); ++i) {
            current ^= rows[std::countr_zero(i)];
            tau.set(current);
        }
        m.tau_ = std::move(tau);
    }
    return m;
}

PceMap PceMap::identity(int num_qubits) { return from_subspace(Subspace::full(num_qubits)); }

PceMap PceMap::depolarizing(int num_qubits) { return from_subspace(Subspace(num_qubits)); }

const TauBitset& PceMap::tau() const {
    if (!tau_) {
        throw CapacityError("tau is not materialized above " + std::to_string(kTauQubitLimit) + " qubits");
    }
    return *tau_;
}

bool PceMap::preserves(const MultiIndex& a) const {
    if (a.num_qubits() != n_) {
        throw DimensionError("multi-index has the wrong qubit count");
    }
    return tau_ ? tau_->test(a.word()) : subspace_->contains(a);
}

bool PceMap::trace_preserving() const { return preserves(MultiIndex(n_)); }

std::uint64_t PceMap::preserved_count() const { return tau_ ? tau_->count() : subspace_->size(); }

std::vector<MultiIndex> PceMap::preserved() const {
    if (!tau_) {
        return subspace_->elements();
    }
    std::vector<MultiIndex> out;
    out.reserve(tau_->count());
    for (auto i = tau_->find_first(); i != TauBitset::npos; i = tau_->find_next(i)) {
        out.push_back(MultiIndex::from_word(n_, static_cast<std::uint32_t>(i)));
    }
    return out;
}

bool operator==(const PceMap& a, const PceMap& b) {
    if (a.n_ != b.n_) {
        return false;
    }
    if (a.tau_ && b.tau_) {
        return *a.tau_ == *b.tau_;
    }
    return a.subspace_ && b.subspace_ && *a.subspace_ == *b.subspace_;
}

Channel::Channel(const Subspace& w) : map_(PceMap::from_subspace(w)) {}

Channel Channel::from_map(const PceMap& map) {
    require_trace_preserving(map);
    if (!map.subspace()) {
        std::string message = "preserved set is not closed under Klein addition";
        if (auto v = find_closure_violation(map)) {
            message += ": " + v->first.str() + " + " + v->second.str() + " = " + v->missing_sum.str() +
                       " is erased";
        }
        throw NotAChannelError(message);
    }
    return Channel(*map.subspace());
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(numerator), -exponent); }

bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int e = std::max(a.exponent, b.exponent);
    return (a.numerator << (e - a.exponent)) <=> (b.numerator << (e - b.exponent));
}

ChoiSpectrum::ChoiSpectrum(int num_qubits, std::vector<std::int64_t> numerators)
    : n_(num_qubits), numerators_(std::move(numerators)) {
    check_tau_qubits(num_qubits);
    if (numerators_.size() != index_space_size(num_qubits)) {
        throw DimensionError("spectrum must have 4^n entries");
    }
}

Dyadic ChoiSpectrum::min() const { return {*std::min_element(numerators_.begin(), numerators_.end()), n_}; }

Dyadic ChoiSpectrum::sum() const {
    std::int64_t total = 0;
    for (std::int64_t v : numerators_) {
        total += v;
    }
    return {total, n_};
}

std::vector<double> ChoiSpectrum::values() const {
    std::vector<double> out;
    out.reserve(numerators_.size());
    for (std::int64_t v : numerators_) {
        out.push_back(std::ldexp(static_cast<double>(v), -n_));
    }
    return out;
}

ChoiSpectrum choi_spectrum(const PceMap& map) {
    const TauBitset& tau = map.tau();
    std::vector<std::int64_t> v(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
        v[i] = tau.test(i) ? 1 : 0;
    }
    apply_sign_matrix(v, map.num_qubits());
    return ChoiSpectrum(map.num_qubits(), std::move(v));
}

PceMap tau_from_spectrum(const ChoiSpectrum& spectrum) {
    const int n = spectrum.num_qubits();
    std::vector<std::int64_t> v(spectrum.numerators().begin(), spectrum.numerators().end());
    apply_sign_matrix(v, n);
    // A lambda = 2^n tau and lambda carries a 2^-n, so v = 4^n tau.
    const auto full = static_cast<std::int64_t>(index_space_size(n));
    TauBitset tau(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == full) {
            tau.set(i);
        } else if (v[i] != 0) {
            throw NotPceSpectrumError("entry " + MultiIndex::from_word(n, static_cast<std::uint32_t>(i)).str() +
                                      " of the inverted spectrum is " + std::to_string(v[i]) + "/" +
                                      std::to_string(full) + ", not 0 or 1");
        }
    }
    return PceMap::from_tau(n, std::move(tau));
}

bool is_closed_subspace(const PceMap& map) {
    require_trace_preserving(map);
    return map.subspace().has_value();
}

bool is_completely_positive(const PceMap& map) { return is_closed_subspace(map); }

std::optional<ClosureViolation> find_closure_violation(const PceMap& map) {
    if (map.subspace()) {
        return std::nullopt;
    }
    std::vector<MultiIndex> labels = map.preserved();
    std::sort(labels.begin(), labels.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return label_order_key(a) < label_order_key(b);
    });
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const MultiIndex s = labels[i] ^ labels[j];
            if (!map.preserves(s)) {
                return ClosureViolation{labels[i], labels[j], s};
            }
        }
    }
    return std::nullopt;
}

Subspace closure(int num_qubits, std::span<const MultiIndex> seeds) { return Subspace::span(num_qubits, seeds); }

PceMap subspace_to_map(const Subspace& w) { return PceMap::from_subspace(w); }

Subspace map_to_subspace(const PceMap& map) { return Channel::from_map(map).subspace(); }

PceMap compose(const PceMap& a, const PceMap& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("cannot compose maps on different qubit counts");
    }
    if (a.has_tau() && b.has_tau()) {
        return PceMap::from_tau(a.num_qubits(), a.tau() & b.tau());
    }
    return PceMap::from_subspace(a.subspace()->intersect(*b.subspace()));
}

Channel compose(const Channel& a, const Channel& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("cannot compose channels on different qubit counts");
    }
    return Channel(a.subspace().intersect(b.subspace()));
}

PceMap reflect(const PceMap& map, int qubit) {
    const int n = map.num_qubits();
    if (qubit < 0 || qubit >= n) {
        throw DimensionError("qubit " + std::to_string(qubit) + " out of range");
    }
    const std::uint32_t shift = 3u << (2 * qubit);
    if (map.has_tau()) {
        const TauBitset& tau = map.tau();
        TauBitset out(tau.size());
        for (std::size_t i = 0; i < tau.size(); ++i) {
            if (tau.test(i ^ shift)) {
                out.set(i);
            }
        }
        return PceMap::from_tau(n, std::move(out));
    }
    // The reflected set is the coset W + shift; it is W itself iff shift is in W.
    if (map.subspace()->contains(MultiIndex::from_word(n, shift))) {
        return map;
    }
    throw CapacityError("reflection of this channel is not a subspace and cannot be held without tau");
}

}  // namespace pce
