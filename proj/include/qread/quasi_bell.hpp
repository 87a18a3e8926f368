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

#include "qread/coherent.hpp"
#include "qread/density.hpp"
#include "qread/errors.hpp"
#include "qread/fock.hpp"

namespace qread {

// The four quasi-Bell states over the non-orthogonal pair {|alpha>, |-alpha>}:
//   psi1 = h1 (|a>|a> + |-a>|-a>)     h1 = h3 = 1/sqrt(2(1+kappa^2))
//   psi2 = h2 (|a>|a> - |-a>|-a>)     h2 = h4 = 1/sqrt(2(1-kappa^2))
//   psi3 = h3 (|a>|-a> + |-a>|a>)
//   psi4 = h4 (|a>|-a> - |-a>|a>)
// with kappa = <alpha|-alpha>. States 2 and 4 degenerate as alpha -> 0.

/// Normalized quasi-Bell state, index in {1,2,3,4}.
inline CatState make_quasi_bell(int index, Complex alpha) {
  if (index < 1 || index > 4)
    throw DomainError("make_quasi_bell: index must be in {1,2,3,4}");
  if (!is_finite(alpha)) throw DomainError("make_quasi_bell: non-finite alpha");
  const double k = kappa(alpha);
  const double k2 = k * k;
  const bool plus_sign = (index == 1 || index == 3);
  const double denom = plus_sign ? 1.0 + k2 : 1.0 - k2;
  if (!(denom > degenerate_self_overlap))
    throw DomainError(
        "make_quasi_bell: degenerate construction, state " +
        std::to_string(index) + " vanishes as alpha -> 0");
  const double h = 1.0 / std::sqrt(2.0 * denom);
  const Complex c2 = plus_sign ? Complex(h) : Complex(-h);
  if (index <= 2)
    return CatState({{Complex(h), alpha, alpha}, {c2, -alpha, -alpha}});
  return CatState({{Complex(h), alpha, -alpha}, {c2, -alpha, alpha}});
}

/// The single nonvanishing off-diagonal Gram entry, D = 2 kappa/(1+kappa^2)
/// = <psi1|psi3>.
inline double psi13_overlap(Complex alpha) {
  const double k = kappa(alpha);
  return 2.0 * k / (1.0 + k * k);
}

/// 4x4 matrix of pairwise quasi-Bell overlaps; entries follow the 1..4
/// state numbering, i.e. entries(i-1, j-1) = <psi_i|psi_j>.
struct GramMatrix {
  Eigen::Matrix4cd entries;
  Complex alpha;
};

inline GramMatrix gram_matrix(Complex alpha) {
  GramMatrix g;
  g.alpha = alpha;
  CatState states[] = {make_quasi_bell(1, alpha), make_quasi_bell(2, alpha),
                       make_quasi_bell(3, alpha), make_quasi_bell(4, alpha)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g.entries(i, j) = cat_overlap(states[i], states[j]);
  return g;
}

/// Entanglement degree of psi1/psi3 in bits as a function of
/// C13 = |<psi1|psi3>|: the binary entropy of (1+C13)/2.
inline double entropy_closed_form(double c13) {
  if (!(c13 >= 0.0 && c13 <= 1.0))
    throw DomainError("entropy_closed_form: C13 must be in [0, 1]");
  const double p = 0.5 * (1.0 + c13);
  const double q = 0.5 * (1.0 - c13);
  double e = 0.0;
  if (p > 0.0) e -= p * std::log2(p);
  if (q > 0.0) e -= q * std::log2(q);
  return e;
}

/// Entropy of entanglement in bits via the Fock pipeline: truncate at
/// truncation_bound(max label, cutoff_tol), form the two-mode density
/// matrix, trace out mode B, take the von Neumann entropy of the rest.
inline double entanglement_entropy(const CatState& state, double cutoff_tol) {
  const int cutoff = truncation_bound(state.max_label_magnitude(), cutoff_tol);
  const FockVector image = cat_to_fock(state, cutoff);
  const DensityMatrix rho = density_from_state(image);
  const DensityMatrix reduced = partial_trace(rho, Mode::A, cutoff);
  return von_neumann_entropy(reduced);
}

}  // namespace qread
