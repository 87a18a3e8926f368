// Copyright 2026 The qread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "qread/coherent.hpp"
#include "qread/density.hpp"
#include "qread/errors.hpp"
#include "qread/fock.hpp"

namespace qread {

constexpr double prior_sum_tol = 1e-12;
constexpr double ensemble_norm_tol = 1e-9;

enum class DetectionMethod { helstrom_pure, helstrom_mixed, homodyne };

inline const char* to_string(DetectionMethod m) {
  switch (m) {
    case DetectionMethod::helstrom_pure: return "helstrom_pure";
    case DetectionMethod::helstrom_mixed: return "helstrom_mixed";
    default: return "homodyne";
  }
}

/// Minimum average error probability of a binary receiver.
/// overlap_magnitude is set only when the discriminated pair is pure.
struct DetectionResult {
  double error_prob;
  DetectionMethod method;
  std::optional<double> overlap_magnitude;
};

/// Two hypothesis states with prior probabilities xi0, xi1.
template <class StateT>
struct BinaryEnsemble {
  StateT state0;
  StateT state1;
  double prior0;
  double prior1;

  BinaryEnsemble(StateT s0, StateT s1, double p0, double p1)
      : state0(std::move(s0)), state1(std::move(s1)), prior0(p0), prior1(p1) {
    if (!(prior0 >= 0.0) || !(prior1 >= 0.0) ||
        std::abs(prior0 + prior1 - 1.0) > prior_sum_tol)
      throw DomainError("BinaryEnsemble: priors must be >= 0 and sum to 1");
    check_states();
  }

 private:
  void check_states() {
    if constexpr (std::is_same_v<StateT, CatState>) {
      for (const CatState* s : {&state0, &state1})
        if (std::abs(cat_overlap(*s, *s).real() - 1.0) > ensemble_norm_tol)
          throw DomainError("BinaryEnsemble: state not normalized");
    } else {
      if (state0.dim() != state1.dim())
        throw ShapeError("BinaryEnsemble: density matrix dimension mismatch");
      for (const StateT* s : {&state0, &state1})
        if (std::abs(s->trace_real() - 1.0) > ensemble_norm_tol)
          throw DomainError("BinaryEnsemble: density matrix trace != 1");
    }
  }
};

/// Minimum error for two pure hypotheses given their inner product:
/// P_e = (1 - sqrt(1 - 4 xi0 xi1 |<psi0|psi1>|^2)) / 2.
inline DetectionResult helstrom_from_overlap(Complex ov, double prior0,
                                             double prior1) {
  double radicand = 1.0 - 4.0 * prior0 * prior1 * std::norm(ov);
  if (radicand < -prior_sum_tol)
    throw NumericError("helstrom: radicand " + std::to_string(radicand) +
                       " below -1e-12; inputs are not a valid pure ensemble");
  radicand = std::max(radicand, 0.0);
  return {0.5 * (1.0 - std::sqrt(radicand)), DetectionMethod::helstrom_pure,
          std::abs(ov)};
}

inline DetectionResult helstrom_pure(const BinaryEnsemble<CatState>& ens) {
  return helstrom_from_overlap(cat_overlap(ens.state0, ens.state1), ens.prior0,
                               ens.prior1);
}

/// Optimal binary error for arbitrary density matrices via the spectrum of
/// the weighted difference: P_e = xi0 + sum of negative eigenvalues of
/// (xi1 rho1 - xi0 rho0), equivalently (1 - ||xi1 rho1 - xi0 rho0||_1)/2.
inline DetectionResult helstrom_mixed(
    const BinaryEnsemble<DensityMatrix>& ens) {
  for (const DensityMatrix* s : {&ens.state0, &ens.state1})
    if (s->matrix().diagonal().real().minCoeff() < -negative_eigenvalue_tol)
      throw NumericError(
          "helstrom_mixed: input not positive semidefinite (negative "
          "diagonal)");
  const Eigen::MatrixXcd gamma =
      ens.prior1 * ens.state1.matrix() - ens.prior0 * ens.state0.matrix();
  const Eigen::VectorXd ev = hermitian_eigenvalues(gamma);
  // For PSD unit-trace inputs ||gamma||_1 <= 1; a larger value means a
  // hypothesis state was not positive semidefinite.
  if (ev.cwiseAbs().sum() > 1.0 + negative_eigenvalue_tol)
    throw NumericError("helstrom_mixed: input not positive semidefinite");
  double pe = ens.prior0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] < 0.0) pe += ev[i];
  return {std::clamp(pe, 0.0, 0.5), DetectionMethod::helstrom_mixed,
          std::nullopt};
}

/// The optimal detection operators: Pi1 projects onto the positive
/// eigenspace of (xi1 rho1 - xi0 rho0), Pi0 = I - Pi1.
struct HelstromProjectors {
  Eigen::MatrixXcd pi0;
  Eigen::MatrixXcd pi1;
};

inline HelstromProjectors helstrom_projectors(
    const BinaryEnsemble<DensityMatrix>& ens) {
  const Eigen::MatrixXcd gamma =
      ens.prior1 * ens.state1.matrix() - ens.prior0 * ens.state0.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gamma);
  if (solver.info() != Eigen::Success)
    throw NumericError("helstrom_projectors: eigensolver failed");
  const Eigen::Index d = gamma.rows();
  Eigen::MatrixXcd pi1 = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    if (solver.eigenvalues()[i] > 0.0) {
      const Eigen::VectorXcd v = solver.eigenvectors().col(i);
      pi1 += v * v.adjoint();
    }
  return {Eigen::MatrixXcd::Identity(d, d) - pi1, std::move(pi1)};
}

/// Shot-noise-limited baseline: threshold test on the quadrature
/// x = (a + a^dag)/2 of the pair {|alpha>, |-alpha>} (alpha >= 0), whose
/// statistics are Gaussians of mean +-alpha and variance 1/4. Equal priors
/// give P_e = erfc(sqrt(2) alpha)/2; unequal priors shift the threshold to
/// the likelihood-ratio crossing t = ln(xi1/xi0)/(8 alpha).
inline DetectionResult homodyne_error(double alpha_mag, double prior0) {
  if (!(alpha_mag >= 0.0) || !std::isfinite(alpha_mag))
    throw DomainError("homodyne_error: alpha magnitude must be >= 0");
  if (!(prior0 >= 0.0 && prior0 <= 1.0))
    throw DomainError("homodyne_error: prior0 must be in [0, 1]");
  const double prior1 = 1.0 - prior0;
  const double ov = std::exp(-2.0 * alpha_mag * alpha_mag);
  if (prior0 == 0.0 || prior0 == 1.0)
    return {0.0, DetectionMethod::homodyne, ov};  // always guess the certain bit
  if (alpha_mag == 0.0)
    return {std::min(prior0, prior1), DetectionMethod::homodyne, ov};
  const double t = std::log(prior1 / prior0) / (8.0 * alpha_mag);
  const double sqrt2 = std::numbers::sqrt2;
  const double pe = 0.5 * (prior0 * std::erfc(sqrt2 * (alpha_mag - t)) +
                           prior1 * std::erfc(sqrt2 * (alpha_mag + t)));
  return {pe, DetectionMethod::homodyne, ov};
}

/// Quantum Fisher information of a pure state under the phase generator
/// n = a^dag a on the chosen mode: F_Q = 4 (<n^2> - <n>^2).
inline double qfi_pure_phase(const FockVector& v, Mode mode) {
  if (std::abs(v.squared_norm() - 1.0) > ensemble_norm_tol)
    throw DomainError("qfi_pure_phase: state not normalized");
  if (v.modes() == 1 && mode != Mode::A)
    throw DomainError("qfi_pure_phase: single-mode state has only mode A");
  const int n = v.cutoff();
  double mean = 0.0, mean_sq = 0.0;
  if (v.modes() == 1) {
    for (int k = 0; k <= n; ++k) {
      const double p = std::norm(v.coeffs()[k]);
      mean += k * p;
      mean_sq += static_cast<double>(k) * k * p;
    }
  } else {
    for (int na = 0; na <= n; ++na)
      for (int nb = 0; nb <= n; ++nb) {
        const double p = std::norm(v.coeffs()[FockVector::index(na, nb, n)]);
        const int k = mode == Mode::A ? na : nb;
        mean += k * p;
        mean_sq += static_cast<double>(k) * k * p;
      }
  }
  return 4.0 * std::max(0.0, mean_sq - mean * mean);
}

}  // namespace qread
