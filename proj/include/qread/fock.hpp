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

#include "qread/coherent.hpp"
#include "qread/errors.hpp"

namespace qread {

enum class Mode { A, B };

inline const char* to_string(Mode m) { return m == Mode::A ? "A" : "B"; }

/// Truncated number-basis state vector, one or two modes, cutoff N photons
/// per mode. Two-mode coefficients are stored with index n_A*(N+1) + n_B.
class FockVector {
 public:
  FockVector(int modes, int cutoff, Eigen::VectorXcd coeffs)
      : modes_(modes), cutoff_(cutoff), coeffs_(std::move(coeffs)) {
    if (modes_ != 1 && modes_ != 2)
      throw ShapeError("FockVector: modes must be 1 or 2");
    if (cutoff_ < 0) throw DomainError("FockVector: negative cutoff");
    const Eigen::Index expect =
        modes_ == 1 ? cutoff_ + 1
                    : static_cast<Eigen::Index>(cutoff_ + 1) * (cutoff_ + 1);
    if (coeffs_.size() != expect)
      throw ShapeError("FockVector: coefficient length " +
                       std::to_string(coeffs_.size()) + " does not match (" +
                       std::to_string(cutoff_) + "+1)^" +
                       std::to_string(modes_));
  }

  /// Zero vector.
  FockVector(int modes, int cutoff)
      : FockVector(modes, cutoff,
                   Eigen::VectorXcd::Zero(
                       modes == 1 ? cutoff + 1
                                  : static_cast<Eigen::Index>(cutoff + 1) *
                                        (cutoff + 1))) {}

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index dim() const { return coeffs_.size(); }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  Eigen::VectorXcd& coeffs() { return coeffs_; }

  double squared_norm() const { return coeffs_.squaredNorm(); }

  static Eigen::Index index(int n_a, int n_b, int cutoff) {
    return static_cast<Eigen::Index>(n_a) * (cutoff + 1) + n_b;
  }

 private:
  int modes_;
  int cutoff_;
  Eigen::VectorXcd coeffs_;
};

/// Smallest N with Poisson tail sum_{n>N} e^{-mu} mu^n/n! < tail_tol,
/// mu = max_abs_alpha^2. Direct summation of the photon-number
/// distribution of the largest coherent component.
inline int truncation_bound(double max_abs_alpha, double tail_tol) {
  if (!(max_abs_alpha >= 0.0) || !std::isfinite(max_abs_alpha))
    throw DomainError("truncation_bound: max_abs_alpha must be >= 0");
  if (!(tail_tol > 0.0 && tail_tol < 1.0))
    throw DomainError("truncation_bound: tail_tol must be in (0, 1)");
  const double mu = max_abs_alpha * max_abs_alpha;
  double term = std::exp(-mu);
  double cum = term;
  int n = 0;
  while (1.0 - cum >= tail_tol) {
    ++n;
    term *= mu / n;
    cum += term;
    // Once terms stagnate below the rounding floor of cum the tail can no
    // longer shrink in double precision.
    if (n > mu && term < 0x1p-53 * cum)
      throw DomainError(
          "truncation_bound: tail_tol below double-precision resolution");
  }
  return n;
}

/// Number-basis expansion of |alpha>: c_n = e^{-|alpha|^2/2} alpha^n/sqrt(n!).
inline FockVector coherent_to_fock(Complex alpha, int cutoff) {
  if (!is_finite(alpha))
    throw DomainError("coherent_to_fock: non-finite label");
  if (cutoff < 0) throw DomainError("coherent_to_fock: negative cutoff");
  Eigen::VectorXcd c(cutoff + 1);
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= cutoff; ++n) c[n] = c[n - 1] * alpha / std::sqrt(n);
  return FockVector(1, cutoff, std::move(c));
}

/// |a>_A |b>_B from two single-mode vectors with identical cutoff.
inline FockVector tensor(const FockVector& a, const FockVector& b) {
  if (a.modes() != 1 || b.modes() != 1)
    throw ShapeError("tensor: operands must be single-mode");
  if (a.cutoff() != b.cutoff())
    throw ShapeError("tensor: cutoff mismatch (" + std::to_string(a.cutoff()) +
                     " vs " + std::to_string(b.cutoff()) + ")");
  const int n = a.cutoff();
  FockVector out(2, n);
  for (int na = 0; na <= n; ++na)
    for (int nb = 0; nb <= n; ++nb)
      out.coeffs()[FockVector::index(na, nb, n)] =
          a.coeffs()[na] * b.coeffs()[nb];
  return out;
}

/// Conjugate-symmetric sesquilinear form <x|y>.
inline Complex inner(const FockVector& x, const FockVector& y) {
  if (x.modes() != y.modes() || x.cutoff() != y.cutoff())
    throw ShapeError("inner: mode/cutoff mismatch");
  return x.coeffs().dot(y.coeffs());  // Eigen dot conjugates the left side
}

/// U(theta) = exp(-i theta n) on the chosen mode: |n> -> e^{-i theta n} |n>.
/// Maps the Fock image of |alpha> to that of |alpha e^{-i theta}>.
inline FockVector phase_shift_fock(const FockVector& v, double theta,
                                   Mode mode) {
  if (!std::isfinite(theta))
    throw DomainError("phase_shift_fock: non-finite theta");
  if (v.modes() == 1 && mode != Mode::A)
    throw DomainError("phase_shift_fock: single-mode state has only mode A");
  FockVector out = v;
  const int n = v.cutoff();
  if (v.modes() == 1) {
    for (int k = 0; k <= n; ++k)
      out.coeffs()[k] *= std::polar(1.0, -theta * k);
  } else {
    for (int na = 0; na <= n; ++na)
      for (int nb = 0; nb <= n; ++nb) {
        const int k = mode == Mode::A ? na : nb;
        out.coeffs()[FockVector::index(na, nb, n)] *=
            std::polar(1.0, -theta * k);
      }
  }
  return out;
}

/// Two-mode Fock image of a coherent-product superposition.
inline FockVector cat_to_fock(const CatState& state, int cutoff) {
  FockVector acc(2, cutoff);
  for (const CatTerm& t : state.terms()) {
    const FockVector va = coherent_to_fock(t.label_a, cutoff);
    const FockVector vb = coherent_to_fock(t.label_b, cutoff);
    for (int na = 0; na <= cutoff; ++na)
      for (int nb = 0; nb <= cutoff; ++nb)
        acc.coeffs()[FockVector::index(na, nb, cutoff)] +=
            t.coeff * va.coeffs()[na] * vb.coeffs()[nb];
  }
  return acc;
}

}  // namespace qread
