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

#include <algorithm>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "pce/enumeration.hpp"
#include "pce/generators.hpp"
#include "pce/random.hpp"

using namespace pce;

namespace {

MultiIndex mi(const char* s) { return MultiIndex::parse(s); }

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// E(X) = 2^-n sum_b tau_b tr(sigma_b X) sigma_b, written out densely.
ComplexMatrix apply_dense(int n, const std::vector<int>& tau, const ComplexMatrix& x) {
    const double dim = static_cast<double>(1 << n);
    ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
    for (std::uint32_t b = 0; b < tau.size(); ++b) {
        if (tau[b]) {
            const ComplexMatrix s = pauli_string_dense(MultiIndex::from_word(n, b));
            out += (s * x).trace() / dim * s;
        }
    }
    return out;
}

// Standard Choi matrix sum_ij |i><j| (x) E(|i><j|).
ComplexMatrix standard_choi(int n, const std::vector<int>& tau) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix c = ComplexMatrix::Zero(dim * dim, dim * dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(dim, dim);
            e(i, j) = 1;
            c.block(i * dim, j * dim, dim, dim) = apply_dense(n, tau, e);
        }
    }
    return c;
}

std::vector<double> sorted(Eigen::VectorXd v) {
    std::vector<double> out(v.data(), v.data() + v.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> sorted_spectrum(const PceMap& m) {
    auto v = choi_spectrum(m).values();
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::vector<MultiIndex>> lagrangian_sets(int n) {
    std::vector<std::vector<MultiIndex>> out;
    for (const Subspace& w : enumerate_subspaces(n, n)) {
        if (w.symplectic_complement() == w) {
            out.push_back(w.elements());
        }
    }
    return out;
}

}  // namespace

TEST(pauli_components, examples) {
    const ComplexMatrix mixed = ComplexMatrix::Identity(4, 4) / 4.0;
    RealVector r = pauli_components(mixed);
    ASSERT_NEAR(r(0), 1, 1e-15);
    ASSERT_NEAR(r.tail(15).cwiseAbs().maxCoeff(), 0, 1e-15);
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1;
    RealVector rz = pauli_components(zero);
    ASSERT_TRUE(rz.isApprox(Eigen::Vector4d(1, 0, 0, 1)));
}

TEST(pauli_components, round_trip_and_purity) {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 3;
        const ComplexMatrix rho = random_density_matrix(n, rng);
        const RealVector r = pauli_components(rho);
        ASSERT_NEAR(r(0), 1, 1e-12);
        ASSERT_LT(max_abs(from_pauli_components(r) - rho), 1e-12);
        const double purity = r.squaredNorm() / static_cast<double>(1 << n);
        ASSERT_NEAR(purity, (rho * rho).trace().real(), 1e-12);
        ASSERT_LE(purity, 1 + 1e-12);
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi(0) = psi(3) = 1 / std::sqrt(2.0);
    const RealVector bell = pauli_components((psi * psi.adjoint()).eval());
    ASSERT_NEAR(bell.squaredNorm() / 4, 1, 1e-12);
}

TEST(pauli_components, errors) {
    ASSERT_THROW(pauli_components(ComplexMatrix::Identity(3, 3)), DimensionError);
    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 1) = 1;
    ASSERT_THROW(pauli_components(bad), ValueError);
    ASSERT_THROW(from_pauli_components(RealVector::Zero(5)), DimensionError);
}

TEST(apply_pce, identity_and_depolarizing) {
    Rng rng(53);
    const RealVector r = pauli_components(random_density_matrix(2, rng));
    ASSERT_EQ(apply_pce(PceMap::identity(2), r), r);
    RealVector expected = RealVector::Zero(16);
    expected(0) = r(0);
    ASSERT_EQ(apply_pce(PceMap::depolarizing(2), r), expected);
    ASSERT_THROW(apply_pce(PceMap::identity(1), r), DimensionError);
}

TEST(apply_generator_kraus, examples) {
    Rng rng(59);
    const ComplexMatrix rho = random_density_matrix(2, rng);
    ASSERT_LT(max_abs(apply_generator_kraus(mi("00"), rho) - rho), 1e-15);
    ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
    ASSERT_LT(max_abs(apply_generator_kraus(mi("3"), plus) - ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);
    ASSERT_THROW(apply_generator_kraus(mi("3"), rho), DimensionError);
}

TEST(apply_generator_kraus, kraus_operators_are_trace_preserving) {
    for (std::uint32_t a = 0; a < 16; ++a) {
        const ComplexMatrix s = pauli_string_dense(MultiIndex::from_word(2, a));
        const ComplexMatrix k0 = ComplexMatrix::Identity(4, 4) / std::sqrt(2.0);
        const ComplexMatrix k1 = s / std::sqrt(2.0);
        ASSERT_LT(max_abs(k0.adjoint() * k0 + k1.adjoint() * k1 - ComplexMatrix::Identity(4, 4)), 1e-15);
    }
}

TEST(apply_generator_kraus, matches_mask_on_components) {
    Rng rng(61);
    for (int n = 1; n <= 3; ++n) {
        for (std::uint32_t a = 0; a < index_space_size(n); ++a) {
            const MultiIndex alpha = MultiIndex::from_word(n, a);
            const ComplexMatrix rho = random_density_matrix(n, rng);
            const RealVector lhs = pauli_components(apply_generator_kraus(alpha, rho));
            const RealVector rhs = apply_pce(generator_map(alpha).map(), pauli_components(rho));
            ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(choi_dense, single_qubit_examples) {
    auto eig = sorted(hermitian_eigenvalues(choi_dense(PceMap::identity(1))));
    ASSERT_NEAR(eig[3], 2, 1e-12);
    ASSERT_NEAR(eig[0], 0, 1e-12);
    ASSERT_NEAR(eig[2], 0, 1e-12);
    ASSERT_LT(max_abs(choi_dense(PceMap::depolarizing(1)) - ComplexMatrix::Identity(4, 4) / 2.0), 1e-15);
    ASSERT_FALSE(is_positive_semidefinite(choi_dense(oracle::map_from_tau(1, {1, 1, 1, 0}))));
    ASSERT_THROW(choi_dense(PceMap::identity(4)), CapacityError);
}

TEST(choi_dense, hermitian_with_trace_two_to_the_n) {
    Rng rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 3;
        const PceMap m = random_oracle_map(n, rng);
        const ComplexMatrix d = choi_dense(m);
        ASSERT_LT(hermiticity_defect(d), 1e-15);
        ASSERT_NEAR(d.trace().real(), static_cast<double>(1 << n), 1e-12);
    }
}

TEST(choi_dense, eigenvectors_carry_the_symbolic_spectrum) {
    Rng rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 3;
        const PceMap m = random_oracle_map(n, rng);
        const ComplexMatrix d = choi_dense(m);
        const ChoiSpectrum spectrum = choi_spectrum(m);
        for (std::uint32_t a = 0; a < index_space_size(n); ++a) {
            const Eigen::VectorXcd v = choi_eigenvector(MultiIndex::from_word(n, a));
            ASSERT_LT((d * v - spectrum[a].to_double() * v).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(choi_dense, spectrum_matches_standard_choi_matrix) {
    Rng rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 3;
        const PceMap m = random_oracle_map(n, rng);
        const auto expected = sorted(hermitian_eigenvalues(standard_choi(n, oracle::tau_of(m))));
        const auto dense = sorted(hermitian_eigenvalues(choi_dense(m)));
        const auto symbolic = sorted_spectrum(m);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            ASSERT_NEAR(dense[i], expected[i], 1e-9);
            ASSERT_NEAR(symbolic[i], expected[i], 1e-9);
        }
    }
}

TEST(choi_dense, n2_exhaustive_eigenvalue_agreement) {
    const ChoiBuilder builder(2);
    double worst = 0;
    for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
        const PceMap m = oracle::map_from_tau(2, oracle::tau_from_mask(2, mask));
        const auto dense = sorted(hermitian_eigenvalues(builder.build(m)));
        const auto symbolic = sorted_spectrum(m);
        for (std::size_t i = 0; i < dense.size(); ++i) {
            worst = std::max(worst, std::abs(dense[i] - symbolic[i]));
        }
    }
    ASSERT_LE(worst, 1e-9);
    ASSERT_THROW(builder.build(PceMap::identity(1)), DimensionError);
}

TEST(is_positive_semidefinite, examples) {
    ASSERT_TRUE(is_positive_semidefinite(ComplexMatrix::Identity(2, 2)));
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1;
    m(1, 1) = -1;
    ASSERT_FALSE(is_positive_semidefinite(m));
    m(1, 1) = -1e-10;
    ASSERT_TRUE(is_positive_semidefinite(m));
    m(0, 1) = 1;
    ASSERT_THROW(is_positive_semidefinite(m), ValueError);
}

TEST(validate_density_matrix, errors) {
    ASSERT_NO_THROW(validate_density_matrix(ComplexMatrix::Identity(2, 2) / 2.0));
    ASSERT_THROW(validate_density_matrix(ComplexMatrix::Identity(2, 2)), ValueError);
    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    ASSERT_THROW(validate_density_matrix(neg), ValueError);
    ASSERT_THROW(validate_density_matrix(ComplexMatrix::Identity(3, 3) / 3.0), DimensionError);
}

TEST(partial_trace, examples) {
    Rng rng(79);
    const ComplexMatrix a = random_density_matrix(1, rng);
    const ComplexMatrix b = random_density_matrix(1, rng);
    const ComplexMatrix ab = Eigen::kroneckerProduct(a, b);
    const int first[] = {0};
    const int second[] = {1};
    const int both[] = {1, 0};
    ASSERT_LT(max_abs(partial_trace(ab, first) - a), 1e-15);
    ASSERT_LT(max_abs(partial_trace(ab, second) - b), 1e-15);
    ASSERT_LT(max_abs(partial_trace(ab, both) - ab), 1e-15);
    const int bad[] = {2};
    const int repeated[] = {0, 0};
    ASSERT_THROW(partial_trace(ab, bad), DimensionError);
    ASSERT_THROW(partial_trace(ab, repeated), DimensionError);
    ASSERT_THROW(partial_trace(ab, std::span<const int>{}), DimensionError);
}

TEST(qc_channel, single_qubit_examples) {
    const auto z = std::vector<MultiIndex>{mi("0"), mi("3")};
    const auto x = std::vector<MultiIndex>{mi("0"), mi("1")};
    ASSERT_EQ(oracle::tau_of(qc_channel(z)), (std::vector<int>{1, 0, 0, 1}));
    ASSERT_EQ(oracle::tau_of(qc_channel(x)), (std::vector<int>{1, 1, 0, 0}));
}

TEST(qc_channel, dense_projector_matrix_matches_for_every_set) {
    for (int n = 1; n <= 2; ++n) {
        const auto sets = lagrangian_sets(n);
        ASSERT_EQ(sets.size(), n == 1 ? 3u : 15u);
        for (const auto& set : sets) {
            const Eigen::MatrixXd m = qc_pauli_matrix(set);
            const PceMap channel = qc_channel(set);
            ASSERT_TRUE(channel.subspace().has_value());
            ASSERT_EQ(channel.preserved_count(), std::uint64_t{1} << n);
            Eigen::MatrixXd off = m;
            off.diagonal().setZero();
            ASSERT_LT(off.cwiseAbs().maxCoeff(), 1e-12);
            for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
                const double expected = channel.tau().test(w) ? 1.0 : 0.0;
                ASSERT_NEAR(m(w, w), expected, 1e-12);
            }
        }
    }
}

TEST(qc_channel, rejects_invalid_sets) {
    const auto anticommuting = std::vector<MultiIndex>{mi("0"), mi("1"), mi("2"), mi("3")};
    const auto no_identity = std::vector<MultiIndex>{mi("1"), mi("3")};
    const auto not_closed = std::vector<MultiIndex>{mi("00"), mi("30"), mi("03"), mi("11")};
    const auto repeated = std::vector<MultiIndex>{mi("0"), mi("0")};
    const auto mixed = std::vector<MultiIndex>{mi("0"), mi("03")};
    ASSERT_THROW(qc_channel(anticommuting), InvalidStabilizerSetError);
    ASSERT_THROW(qc_channel(no_identity), InvalidStabilizerSetError);
    ASSERT_THROW(qc_channel(not_closed), InvalidStabilizerSetError);
    ASSERT_THROW(qc_channel(repeated), InvalidStabilizerSetError);
    ASSERT_THROW(qc_channel(mixed), InvalidStabilizerSetError);
    ASSERT_THROW(qc_channel(std::vector<MultiIndex>{}), InvalidStabilizerSetError);
}
