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

#include <cmath>
#include <span>
#include <vector>

#include "pce/channel_sim.hpp"
#include "pce/generators.hpp"

namespace pce {

/// gamma t at which "t -> infinity" is evaluated.
inline constexpr double kAsymptoticRateTime = 50.0;

struct DissipationTerm {
    MultiIndex label;
    double rate = 0.0;  // 1/time
};

/// Purely dissipative Lindbladian sum_i gamma_i (sigma_i rho sigma_i - rho) / 2.
class DissipativeProcess {
  public:
    /// Throws ValueError for an empty list or a non-positive rate, DimensionError for mixed qubit counts.
    explicit DissipativeProcess(std::vector<DissipationTerm> terms);

    int num_qubits() const { return terms_.front().label.num_qubits(); }
    std::span<const DissipationTerm> terms() const { return terms_; }
    std::vector<MultiIndex> labels() const;

    /// Decay rate of component r_beta: sum of gamma_i over the terms anticommuting with beta.
    double decay_rate(const MultiIndex& beta) const;

    /// The t -> infinity channel, recompose(labels()).
    Channel fixed_point() const;

  private:
    std::vector<DissipationTerm> terms_;
};

/// Sequence of single-ancilla collisions.
struct CollisionSchedule {
    std::vector<MultiIndex> labels;
};

namespace detail {
void check_time(double t);
void check_rate(double rate);
}  // namespace detail

/// G_{alpha,t}: ((1 + e^{-gamma t})/2) rho + ((1 - e^{-gamma t})/2) sigma rho sigma.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> semigroup_apply(
    const MultiIndex& alpha, double rate, double t, const Eigen::MatrixBase<Derived>& rho) {
    using Scalar = typename Derived::Scalar;
    detail::check_rate(rate);
    detail::check_time(t);
    if (qubits_of(rho) != alpha.num_qubits()) {
        throw DimensionError("state and label disagree on qubit count");
    }
    const double decay = std::exp(-rate * t);
    const auto sigma = pauli_string_dense<Scalar>(alpha);
    return Scalar((1 + decay) / 2) * rho + Scalar((1 - decay) / 2) * (sigma * rho * sigma);
}

/// d rho / dt under the process.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> lindbladian_apply(
    const DissipativeProcess& process, const Eigen::MatrixBase<Derived>& rho) {
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (qubits_of(rho) != process.num_qubits()) {
        throw DimensionError("state and process disagree on qubit count");
    }
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const DissipationTerm& term : process.terms()) {
        const Matrix sigma = pauli_string_dense<Scalar>(term.label);
        out += Scalar(term.rate / 2) * (sigma * rho * sigma - rho);
    }
    return out;
}

/// Exact flow in Pauli components: r_b(t) = r_b(0) exp(-t decay_rate(b)).
RealVector evolve_components(const DissipativeProcess& process, const RealVector& r0, double t);

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> evolve(const DissipativeProcess& process,
                                                                               const Eigen::MatrixBase<Derived>& rho0,
                                                                               double t) {
    detail::check_time(t);
    const auto r0 = pauli_components(rho0);
    return from_pauli_components(evolve_components(process, r0.template cast<double>(), t))
        .template cast<typename Derived::Scalar>();
}

/// Classical fourth-order Runge-Kutta on lindbladian_apply with `steps` equal steps.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> integrate_rk4(
    const DissipativeProcess& process, const Eigen::MatrixBase<Derived>& rho0, double t, int steps) {
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    detail::check_time(t);
    if (steps < 1) {
        throw ValueError("steps must be positive");
    }
    const Scalar h(t / steps);
    Matrix rho = rho0;
    for (int s = 0; s < steps; ++s) {
        const Matrix k1 = lindbladian_apply(process, rho);
        const Matrix k2 = lindbladian_apply(process, (rho + Scalar(0.5) * h * k1).eval());
        const Matrix k3 = lindbladian_apply(process, (rho + Scalar(0.5) * h * k2).eval());
        const Matrix k4 = lindbladian_apply(process, (rho + h * k3).eval());
        rho += h / Scalar(6) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
    }
    return rho;
}

/// U_alpha on system (x) ancilla, ancilla last: controlled-sigma_alpha after a Hadamard on the ancilla.
ComplexMatrix collision_unitary(const MultiIndex& alpha);

/// One collision: tr_ancilla(U (rho (x) |0><0|) U^dagger).
ComplexMatrix collide_once(const MultiIndex& alpha, const ComplexMatrix& rho);

/// Applies the schedule in order with a single ancilla reset to |0> between collisions.
ComplexMatrix collide(const CollisionSchedule& schedule, const ComplexMatrix& rho);

}  // namespace pce
