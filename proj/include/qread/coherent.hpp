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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qread/errors.hpp"

namespace qread {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Exact inner product of two coherent states,
/// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a)*b).
inline Complex overlap(Complex a, Complex b) {
  if (!is_finite(a) || !is_finite(b))
    throw DomainError("overlap: non-finite coherent-state label");
  Complex arg = -0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b;
  // Re(arg) = -|a-b|^2/2 <= 0 identically; clip rounding noise so the
  // returned magnitude never exceeds 1 and overlap(a,a) == 1 exactly.
  arg.real(std::min(arg.real(), 0.0));
  return std::exp(arg);
}

/// kappa = <alpha|-alpha> = exp(-2|alpha|^2).
/// Real for every complex alpha since conj(alpha)*(-alpha) = -|alpha|^2;
/// value lies in (0, 1].
inline double kappa(Complex alpha) {
  if (!is_finite(alpha))
    throw DomainError("kappa: non-finite coherent-state label");
  return std::exp(-2.0 * std::norm(alpha));
}

/// One term c * |label_a>_A |label_b>_B of a two-mode superposition.
struct CatTerm {
  Complex coeff;
  Complex label_a;
  Complex label_b;
};

/// Finite superposition of two-mode coherent products,
/// sum_k c_k |mu_k>_A |nu_k>_B. At most max_terms terms, so every pairwise
/// overlap expansion stays O(max_terms^2) and exact.
class CatState {
 public:
  static constexpr std::size_t max_terms = 8;

  explicit CatState(std::vector<CatTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw DomainError("CatState: empty term list");
    if (terms_.size() > max_terms)
      throw DomainError("CatState: more than " + std::to_string(max_terms) +
                        " terms");
    for (const CatTerm& t : terms_) {
      if (!is_finite(t.coeff) || !is_finite(t.label_a) || !is_finite(t.label_b))
        throw DomainError("CatState: non-finite coefficient or label");
    }
  }

  CatState(std::initializer_list<CatTerm> terms)
      : CatState(std::vector<CatTerm>(terms)) {}

  const std::vector<CatTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Largest |label| over both modes; drives Fock truncation choices.
  double max_label_magnitude() const {
    double m = 0.0;
    for (const CatTerm& t : terms_)
      m = std::max({m, std::abs(t.label_a), std::abs(t.label_b)});
    return m;
  }

 private:
  std::vector<CatTerm> terms_;
};

/// <x|y> by bilinear expansion sum_jk conj(c_j) d_k <mu_j|mu_k><nu_j|nu_k>.
/// Sesquilinear: cat_overlap(x,y) == conj(cat_overlap(y,x)).
inline Complex cat_overlap(const CatState& x, const CatState& y) {
  Complex acc = 0.0;
  for (const CatTerm& tx : x.terms())
    for (const CatTerm& ty : y.terms())
      acc += std::conj(tx.coeff) * ty.coeff *
             overlap(tx.label_a, ty.label_a) * overlap(tx.label_b, ty.label_b);
  return acc;
}

/// Threshold below which a self-overlap is considered an identically
/// vanishing superposition rather than a normalizable state.
constexpr double degenerate_self_overlap = 1e-30;

/// Rescale so the analytic self-overlap equals 1 (within 1e-12 in the
/// regimes this library targets). Direction preserved.
inline CatState normalize(const CatState& x) {
  const double n2 = cat_overlap(x, x).real();
  if (!(n2 > degenerate_self_overlap))
    throw DomainError("normalize: degenerate state (self-overlap <= 1e-30)");
  const double scale = 1.0 / std::sqrt(n2);
  std::vector<CatTerm> terms = x.terms();
  for (CatTerm& t : terms) t.coeff *= scale;
  return CatState(std::move(terms));
}

}  // namespace qread
