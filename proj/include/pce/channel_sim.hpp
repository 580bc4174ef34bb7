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

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pce/pauli_algebra.hpp"
#include "pce/pce_map.hpp"

// Dense-matrix simulation and the brute-force oracle for the symbolic results.
//
// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
// computational-basis index. Matrices are complex; routines are templated on
// the Eigen expression so float or long double scalars work too.
namespace pce {

using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kAlgebraTolerance = 1e-12;

/// Qubit count of a 2^n x 2^n matrix; throws DimensionError otherwise.
template <typename Derived>
int qubits_of(const Eigen::MatrixBase<Derived>& m) {
    const auto dim = m.rows();
    if (m.cols() != dim || dim < 2 || (dim & (dim - 1)) != 0) {
        throw DimensionError("expected a square 2^n x 2^n matrix, got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, double tol) {
    if (m.rows() != m.cols()) {
        throw DimensionError("matrix is not square");
    }
    const auto defect = hermiticity_defect(m);
    if (!(defect <= tol)) {
        throw ValueError("matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(static_cast<double>(defect)) +
                         ")");
    }
}

/// Real eigenvalues of a Hermitian matrix, ascending.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m, double tol = kEigenTolerance) {
    using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    require_hermitian(m, tol);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m.eval(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

/// min eigenvalue >= -tol. Throws ValueError when the input is not Hermitian within tol.
template <typename Derived>
bool is_positive_semidefinite(const Eigen::MatrixBase<Derived>& m, double tol = kEigenTolerance) {
    return hermitian_eigenvalues(m, tol).minCoeff() >= -tol;
}

/// Throws ValueError unless rho is Hermitian, unit-trace and positive semidefinite within tol.
template <typename Derived>
void validate_density_matrix(const Eigen::MatrixBase<Derived>& rho, double tol = kEigenTolerance) {
    qubits_of(rho);
    if (!is_positive_semidefinite(rho, tol)) {
        throw ValueError("density matrix has a negative eigenvalue");
    }
    if (std::abs(rho.trace() - typename Derived::Scalar(1)) > tol) {
        throw ValueError("density matrix trace is not 1");
    }
}

/// r_a = tr(rho sigma_a) for every flat index a.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> pauli_components(const Eigen::MatrixBase<Derived>& rho,
                                                                               double tol = kEigenTolerance) {
    using Scalar = typename Derived::Scalar;
    const int n = qubits_of(rho);
    if (n > kDenseQubitLimit) {
        throw CapacityError("dense states are limited to " + std::to_string(kDenseQubitLimit) + " qubits");
    }
    require_hermitian(rho, tol);
    Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> r(index_space_size(n));
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        const auto sigma = pauli_string_dense<Scalar>(MultiIndex::from_word(n, w));
        r(w) = (rho.derived().cwiseProduct(sigma.transpose())).sum().real();
    }
    return r;
}

/// rho = 2^{-n} sum_a r_a sigma_a.
template <typename Derived>
Eigen::Matrix<std::complex<typename Derived::Scalar>, Eigen::Dynamic, Eigen::Dynamic> from_pauli_components(
    const Eigen::MatrixBase<Derived>& r) {
    using Real = typename Derived::Scalar;
    using Scalar = std::complex<Real>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    int n = 0;
    while (static_cast<Eigen::Index>(index_space_size(n)) < r.size()) {
        ++n;
    }
    if (n < 1 || static_cast<Eigen::Index>(index_space_size(n)) != r.size()) {
        throw DimensionError("component vector length must be 4^n");
    }
    if (n > kDenseQubitLimit) {
        throw CapacityError("dense states are limited to " + std::to_string(kDenseQubitLimit) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix rho = Matrix::Zero(dim, dim);
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        if (r(w) != Real(0)) {
            rho += Scalar(r(w)) * pauli_string_dense<Scalar>(MultiIndex::from_word(n, w));
        }
    }
    return rho / Real(dim);
}

/// r_a -> tau_a r_a.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> apply_pce(const PceMap& map,
                                                                     const Eigen::MatrixBase<Derived>& r) {
    if (static_cast<std::uint64_t>(r.size()) != index_space_size(map.num_qubits())) {
        throw DimensionError("component vector does not match the map's qubit count");
    }
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out = r;
    const TauBitset& tau = map.tau();
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (!tau.test(static_cast<std::size_t>(i))) {
            out(i) = 0;
        }
    }
    return out;
}

/// sum_i K_i rho K_i^dagger with K_0 = 1/sqrt2, K_1 = sigma_alpha/sqrt2.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> apply_generator_kraus(
    const MultiIndex& alpha, const Eigen::MatrixBase<Derived>& rho) {
    using Scalar = typename Derived::Scalar;
    using Real = typename Derived::RealScalar;
    if (qubits_of(rho) != alpha.num_qubits()) {
        throw DimensionError("state and label disagree on qubit count");
    }
    const auto sigma = pauli_string_dense<Scalar>(alpha);
    const Real s = Real(1) / std::sqrt(Real(2));
    const auto k0 = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(rho.rows(), rho.cols()) * s;
    const auto k1 = sigma * s;
    return k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint();
}

/// Keeps the listed qubits (any order; output follows ascending qubit order).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace(
    const Eigen::MatrixBase<Derived>& rho, std::span<const int> keep) {
    using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const int n = qubits_of(rho);
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 0 ||
        kept.back() >= n) {
        throw DimensionError("keep must be a non-empty set of distinct qubits in range");
    }
    // Bit position of qubit q in a computational index is n - 1 - q.
    Eigen::Index keep_mask = 0;
    for (int q : kept) {
        keep_mask |= Eigen::Index{1} << (n - 1 - q);
    }
    const auto compress = [&](Eigen::Index i) {
        Eigen::Index out = 0;
        for (int q : kept) {
            out = (out << 1) | ((i >> (n - 1 - q)) & 1);
        }
        return out;
    };
    const Eigen::Index dim = rho.rows();
    const Eigen::Index out_dim = Eigen::Index{1} << kept.size();
    Matrix out = Matrix::Zero(out_dim, out_dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if ((i & ~keep_mask) == (j & ~keep_mask)) {
                out(compress(i), compress(j)) += rho(i, j);
            }
        }
    }
    return out;
}

/// (x)_j (sigma_{a_j} (x) conj(sigma_{a_j})), the Choi term of one Pauli component.
ComplexMatrix choi_term(const MultiIndex& alpha);

/// (x)_j vec(sigma_{a_j}) with row-major vec; the eigenvector of every Choi term for label alpha.
Eigen::VectorXcd choi_eigenvector(const MultiIndex& alpha);

/// D = 2^{-n} sum_a tau_a choi_term(a). Limited to kChoiDenseQubitLimit qubits.
ComplexMatrix choi_dense(const PceMap& map);

/// Precomputed Choi terms for repeated choi_dense calls at one qubit count.
class ChoiBuilder {
  public:
    explicit ChoiBuilder(int num_qubits);
    ComplexMatrix build(const PceMap& map) const;

  private:
    int n_;
    std::vector<ComplexMatrix> terms_;
};

/// Throws InvalidStabilizerSetError unless the set has 2^n distinct, pairwise commuting,
/// Klein-closed elements.
void validate_maximal_commuting_set(std::span<const MultiIndex> strings);

/// The quantum-classical channel of the common eigenbasis of `strings`, as a PCE map.
PceMap qc_channel(std::span<const MultiIndex> strings);

/// Pauli-basis matrix 2^{-n} tr(sigma_k E[sigma_l]) of the dense projector superoperator
/// E[X] = sum_i <psi_i|X|psi_i> |psi_i><psi_i| over the common eigenbasis of `strings`.
Eigen::MatrixXd qc_pauli_matrix(std::span<const MultiIndex> strings);

}  // namespace pce
