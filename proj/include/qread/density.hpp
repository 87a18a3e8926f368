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
#include <cmath>
#include <string>
#include <utility>

#include "qread/errors.hpp"
#include "qread/fock.hpp"

namespace qread {

constexpr double hermiticity_tol = 1e-10;
constexpr double density_norm_tol = 1e-9;
constexpr double negative_eigenvalue_tol = 1e-8;
constexpr double entropy_eigenvalue_floor = 1e-12;

/// Dense Hermitian density operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
      throw ShapeError("DensityMatrix: matrix is not square");
    const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > hermiticity_tol)
      throw NumericError("DensityMatrix: not Hermitian (max deviation " +
                         std::to_string(dev) + ")");
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double trace_real() const { return m_.trace().real(); }

 private:
  Eigen::MatrixXcd m_;
};

/// rho = |v><v| for a state normalized within 1e-9.
inline DensityMatrix density_from_state(const FockVector& v) {
  const double n2 = v.squared_norm();
  if (std::abs(n2 - 1.0) > density_norm_tol)
    throw DomainError("density_from_state: state not normalized (|v|^2 = " +
                      std::to_string(n2) + ")");
  return DensityMatrix(v.coeffs() * v.coeffs().adjoint());
}

/// Reduced state of a two-mode density matrix of dimension (cutoff+1)^2.
inline DensityMatrix partial_trace(const DensityMatrix& rho, Mode keep,
                                   int cutoff) {
  const Eigen::Index d = cutoff + 1;
  if (rho.dim() != d * d)
    throw ShapeError("partial_trace: dimension " + std::to_string(rho.dim()) +
                     " is not (cutoff+1)^2 for cutoff " +
                     std::to_string(cutoff));
  const Eigen::MatrixXcd& m = rho.matrix();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index t = 0; t < d; ++t)
        out(i, j) += keep == Mode::A ? m(i * d + t, j * d + t)
                                     : m(t * d + i, t * d + j);
  return DensityMatrix(std::move(out));
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("hermitian_eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

/// S(rho) = -sum_i lambda_i log2 lambda_i over eigenvalues above 1e-12.
/// Result in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  if (ev[0] < -negative_eigenvalue_tol)
    throw NumericError("von_neumann_entropy: invalid density, eigenvalue " +
                       std::to_string(ev[0]));
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] > entropy_eigenvalue_floor) s -= ev[i] * std::log2(ev[i]);
  return s;
}

}  // namespace qread
