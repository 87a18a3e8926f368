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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qread/coherent.hpp"
#include "qread/errors.hpp"
#include "qread/fock.hpp"

namespace qread {

/// Lossless phase-shift reflection acting on one mode of a two-mode state.
/// theta is canonicalized to [0, 2*pi).
struct PhaseShiftChannel {
  double theta;
  Mode target_mode;

  PhaseShiftChannel(double theta_radians, Mode target)
      : theta(canonicalize(theta_radians)), target_mode(target) {}

  static double canonicalize(double t) {
    if (!std::isfinite(t))
      throw DomainError("PhaseShiftChannel: non-finite theta");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
  }
};

/// Relabel the target-mode coherent labels nu -> nu * e^{-i theta};
/// coefficients are untouched, so the map is exactly unitary on the
/// coherent-label algebra.
inline CatState apply_phase_shift(const CatState& state,
                                  const PhaseShiftChannel& ch) {
  const Complex u = std::polar(1.0, -ch.theta);
  std::vector<CatTerm> terms = state.terms();
  for (CatTerm& t : terms) {
    if (ch.target_mode == Mode::A)
      t.label_a *= u;
    else
      t.label_b *= u;
  }
  return CatState(std::move(terms));
}

/// Memory cell acting on a two-mode probe: bit 0 reflects flat (identity),
/// bit 1 applies U_B(theta) to the illuminating mode B.
inline CatState encode_bit(const CatState& probe, int bit, double theta) {
  if (bit != 0 && bit != 1) throw DomainError("encode_bit: bit must be 0 or 1");
  if (bit == 0) return probe;
  return apply_phase_shift(probe, PhaseShiftChannel(theta, Mode::B));
}

/// Same channel for a single-mode coherent probe: the sole mode is the
/// illuminated one, so bit 1 maps alpha -> alpha * e^{-i theta}.
inline Complex encode_bit(Complex probe, int bit, double theta) {
  if (bit != 0 && bit != 1) throw DomainError("encode_bit: bit must be 0 or 1");
  if (!is_finite(probe)) throw DomainError("encode_bit: non-finite label");
  if (bit == 0) return probe;
  return probe * std::polar(1.0, -PhaseShiftChannel::canonicalize(theta));
}

}  // namespace qread
