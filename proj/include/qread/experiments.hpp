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
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qread/channel.hpp"
#include "qread/coherent.hpp"
#include "qread/detection.hpp"
#include "qread/errors.hpp"
#include "qread/fock.hpp"
#include "qread/quasi_bell.hpp"
#include "qread/table.hpp"

// The headline experiments as machine-readable tables: the reading
// comparison (coherent vs entangled probe vs homodyne), the phase-shift
// orthogonality sweep, the Gram matrix, entanglement degrees and quantum
// Fisher information, each optionally cross-checked against the
// independent Fock backend.

namespace qread {

enum class Backend { analytic, fock, both };

inline const char* to_string(Backend b) {
  switch (b) {
    case Backend::analytic: return "analytic";
    case Backend::fock: return "fock";
    default: return "both";
  }
}

struct ExperimentOptions {
  Backend backend = Backend::analytic;
  double fock_tail_tol = 1e-14;
  double cross_check_tol = 1e-8;
};

enum class SweepVariable { alpha, theta, prior0 };
enum class SweepQuantity { overlap, reading };

inline const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::alpha: return "alpha";
    case SweepVariable::theta: return "theta";
    default: return "prior0";
  }
}

/// Values held constant while one variable sweeps.
struct SweepFixed {
  double alpha = 1.0;
  double theta = std::numbers::pi;
  double prior0 = 0.5;
};

struct SweepSpec {
  SweepVariable variable;
  double start;
  double stop;
  int points;
  SweepFixed fixed;

  void validate() const {
    if (!(start < stop)) throw DomainError("SweepSpec: start must be < stop");
    if (points < 2) throw DomainError("SweepSpec: points must be >= 2");
    if (!std::isfinite(start) || !std::isfinite(stop))
      throw DomainError("SweepSpec: non-finite range");
    if (!(fixed.alpha > 0.0) || !std::isfinite(fixed.alpha))
      throw DomainError("SweepSpec: fixed alpha must be > 0");
    if (!std::isfinite(fixed.theta))
      throw DomainError("SweepSpec: non-finite fixed theta");
    if (!(fixed.prior0 >= 0.0 && fixed.prior0 <= 1.0))
      throw DomainError("SweepSpec: fixed prior0 must be in [0, 1]");
  }
};

/// points equally spaced values; the last one is exactly stop.
inline std::vector<double> linspace(double start, double stop, int points) {
  if (points < 2) throw DomainError("linspace: points must be >= 2");
  std::vector<double> grid(points);
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = start + i * step;
  grid.back() = stop;
  return grid;
}

namespace detail {

inline void cross_check(double analytic, double fock, double tol,
                        const std::string& what) {
  if (!(std::abs(analytic - fock) <= tol))
    throw CrossCheckError("cross-check failed at " + what + ": analytic " +
                          format_double(analytic) + " vs fock " +
                          format_double(fock) + ", tolerance " +
                          format_double(tol));
}

/// The pair {psi2(0), psi2 after U_B(theta)} at the given alpha.
struct EcsPair {
  CatState probe;
  CatState reflected;
};

inline EcsPair ecs_pair(double alpha, double theta) {
  CatState probe = make_quasi_bell(2, Complex(alpha));
  CatState reflected = encode_bit(probe, 1, theta);
  return {std::move(probe), std::move(reflected)};
}

/// |<psi2(0)|psi2(theta)>| via the truncated number basis.
inline double ecs_overlap_fock(const EcsPair& pair, double tail_tol) {
  const int cutoff =
      truncation_bound(pair.probe.max_label_magnitude(), tail_tol);
  return std::abs(
      inner(cat_to_fock(pair.probe, cutoff), cat_to_fock(pair.reflected, cutoff)));
}

/// <alpha | alpha e^{-i theta}> via the truncated number basis.
inline Complex coherent_overlap_fock(double alpha, double theta,
                                     double tail_tol) {
  const int cutoff = truncation_bound(alpha, tail_tol);
  const FockVector f0 = coherent_to_fock(Complex(alpha), cutoff);
  return inner(f0, phase_shift_fock(f0, theta, Mode::A));
}

}  // namespace detail

/// One reading experiment at fixed (alpha, theta, prior0): three receivers
/// side by side. Columns: alpha, theta, prior0, backend, method,
/// error_prob, overlap_magnitude; with Backend::both the Fock-backend
/// values appear as *_fock columns and must agree within cross_check_tol.
/// The homodyne baseline is a closed-form Gaussian threshold test with no
/// Fock route; its *_fock cells are NaN.
inline Table run_reading(double alpha, double theta, double prior0,
                         const ExperimentOptions& opts = {}) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("run_reading: alpha must be > 0 (degenerate probe)");
  if (!(prior0 >= 0.0 && prior0 <= 1.0))
    throw DomainError("run_reading: prior0 must be in [0, 1]");
  const double prior1 = 1.0 - prior0;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  const Complex a0(alpha);
  const Complex a1 = encode_bit(a0, 1, theta);
  const detail::EcsPair ecs = detail::ecs_pair(alpha, theta);

  const DetectionResult coh_an =
      helstrom_from_overlap(overlap(a0, a1), prior0, prior1);
  const DetectionResult ecs_an = helstrom_from_overlap(
      cat_overlap(ecs.probe, ecs.reflected), prior0, prior1);
  // Homodyne along the line joining the two coherent means; separation
  // |a0 - a1| = 2 alpha sin(theta/2).
  const DetectionResult hom = homodyne_error(0.5 * std::abs(a0 - a1), prior0);

  double coh_pe_fock = nan, coh_ov_fock = nan;
  double ecs_pe_fock = nan, ecs_ov_fock = nan;
  if (opts.backend != Backend::analytic) {
    const Complex ov_c =
        detail::coherent_overlap_fock(alpha, theta, opts.fock_tail_tol);
    const DetectionResult coh_fk =
        helstrom_from_overlap(ov_c, prior0, prior1);
    const double ov_e = detail::ecs_overlap_fock(ecs, opts.fock_tail_tol);
    const DetectionResult ecs_fk =
        helstrom_from_overlap(Complex(ov_e), prior0, prior1);
    coh_pe_fock = coh_fk.error_prob;
    coh_ov_fock = *coh_fk.overlap_magnitude;
    ecs_pe_fock = ecs_fk.error_prob;
    ecs_ov_fock = *ecs_fk.overlap_magnitude;
  }

  const std::string backend_name = to_string(opts.backend);
  const bool fock_only = opts.backend == Backend::fock;
  const bool both = opts.backend == Backend::both;

  struct Entry {
    const char* method;
    double pe;
    double ov;
    double pe_fock;
    double ov_fock;
  };
  const Entry entries[] = {
      {"coherent_helstrom", fock_only ? coh_pe_fock : coh_an.error_prob,
       fock_only ? coh_ov_fock : *coh_an.overlap_magnitude, coh_pe_fock,
       coh_ov_fock},
      {"ecs_helstrom", fock_only ? ecs_pe_fock : ecs_an.error_prob,
       fock_only ? ecs_ov_fock : *ecs_an.overlap_magnitude, ecs_pe_fock,
       ecs_ov_fock},
      {"coherent_homodyne", hom.error_prob, *hom.overlap_magnitude, nan, nan},
  };

  Table rows;
  for (const Entry& e : entries) {
    ResultRow row;
    row.set("alpha", alpha)
        .set("theta", theta)
        .set("prior0", prior0)
        .set("backend", backend_name)
        .set("method", e.method)
        .set("error_prob", e.pe)
        .set("overlap_magnitude", e.ov);
    if (both) {
      row.set("error_prob_fock", e.pe_fock)
          .set("overlap_magnitude_fock", e.ov_fock);
      if (!std::isnan(e.pe_fock)) {
        const std::string at = std::string(e.method) + " (alpha=" +
                               format_double(alpha) + ", theta=" +
                               format_double(theta) + ")";
        detail::cross_check(e.pe, e.pe_fock, opts.cross_check_tol, at);
        detail::cross_check(e.ov, e.ov_fock, opts.cross_check_tol, at);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

struct SweepPoint {
  double alpha;
  double theta;
  double prior0;
};

inline void sweep_overlap_outputs(ResultRow& row, const SweepPoint& p,
                                  const ExperimentOptions& opts,
                                  const std::string& where) {
  const EcsPair ecs = ecs_pair(p.alpha, p.theta);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  double analytic = nan, fock = nan;
  if (opts.backend != Backend::fock)
    analytic = std::abs(cat_overlap(ecs.probe, ecs.reflected));
  if (opts.backend != Backend::analytic)
    fock = ecs_overlap_fock(ecs, opts.fock_tail_tol);
  row.set("overlap_abs", opts.backend == Backend::fock ? fock : analytic);
  if (opts.backend == Backend::both) {
    row.set("overlap_abs_fock", fock);
    cross_check(analytic, fock, opts.cross_check_tol, where);
  }
}

inline void sweep_reading_outputs(ResultRow& row, const SweepPoint& p,
                                  const ExperimentOptions& opts,
                                  const std::string& where) {
  const double prior1 = 1.0 - p.prior0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const Complex a0(p.alpha);
  const Complex a1 = encode_bit(a0, 1, p.theta);
  const EcsPair ecs = ecs_pair(p.alpha, p.theta);

  double pe_c = nan, pe_e = nan, pe_c_fock = nan, pe_e_fock = nan;
  if (opts.backend != Backend::fock) {
    pe_c = helstrom_from_overlap(overlap(a0, a1), p.prior0, prior1).error_prob;
    pe_e = helstrom_from_overlap(cat_overlap(ecs.probe, ecs.reflected),
                                 p.prior0, prior1)
               .error_prob;
  }
  if (opts.backend != Backend::analytic) {
    pe_c_fock =
        helstrom_from_overlap(
            coherent_overlap_fock(p.alpha, p.theta, opts.fock_tail_tol),
            p.prior0, prior1)
            .error_prob;
    pe_e_fock = helstrom_from_overlap(
                    Complex(ecs_overlap_fock(ecs, opts.fock_tail_tol)),
                    p.prior0, prior1)
                    .error_prob;
  }
  const double pe_h =
      homodyne_error(0.5 * std::abs(a0 - a1), p.prior0).error_prob;

  const bool fock_only = opts.backend == Backend::fock;
  row.set("pe_coherent", fock_only ? pe_c_fock : pe_c)
      .set("pe_ecs", fock_only ? pe_e_fock : pe_e)
      .set("pe_homodyne", pe_h);
  if (opts.backend == Backend::both) {
    row.set("pe_coherent_fock", pe_c_fock).set("pe_ecs_fock", pe_e_fock);
    cross_check(pe_c, pe_c_fock, opts.cross_check_tol, where);
    cross_check(pe_e, pe_e_fock, opts.cross_check_tol, where);
  }
}

}  // namespace detail

/// Evaluate one quantity over an equally spaced grid, one row per point in
/// ascending order. Degenerate points become rows with status set to the
/// error message and NaN outputs; backend disagreements abort the whole
/// sweep with a CrossCheckError naming the failing point.
inline Table run_sweep(const SweepSpec& spec, SweepQuantity quantity,
                       const ExperimentOptions& opts = {}) {
  spec.validate();
  const std::vector<double> grid = linspace(spec.start, spec.stop, spec.points);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  Table rows;
  rows.reserve(grid.size());
  for (double value : grid) {
    detail::SweepPoint p{spec.fixed.alpha, spec.fixed.theta, spec.fixed.prior0};
    switch (spec.variable) {
      case SweepVariable::alpha: p.alpha = value; break;
      case SweepVariable::theta: p.theta = value; break;
      case SweepVariable::prior0: p.prior0 = value; break;
    }
    ResultRow row;
    row.set("alpha", p.alpha)
        .set("theta", p.theta)
        .set("prior0", p.prior0)
        .set("backend", to_string(opts.backend));
    const std::string where = std::string(to_string(spec.variable)) + " = " +
                              format_double(value);
    std::string status = "ok";
    ResultRow outputs = row;
    try {
      if (quantity == SweepQuantity::overlap)
        detail::sweep_overlap_outputs(outputs, p, opts, where);
      else
        detail::sweep_reading_outputs(outputs, p, opts, where);
    } catch (const CrossCheckError&) {
      throw;
    } catch (const Error& e) {
      status = e.what();
      outputs = row;
      if (quantity == SweepQuantity::overlap) {
        outputs.set("overlap_abs", nan);
        if (opts.backend == Backend::both) outputs.set("overlap_abs_fock", nan);
      } else {
        outputs.set("pe_coherent", nan).set("pe_ecs", nan).set("pe_homodyne",
                                                               nan);
        if (opts.backend == Backend::both)
          outputs.set("pe_coherent_fock", nan).set("pe_ecs_fock", nan);
      }
    }
    outputs.set("status", status);
    rows.push_back(std::move(outputs));
  }
  return rows;
}

/// The 4x4 quasi-Bell Gram matrix as 16 rows (i, j, value_re, value_im).
inline Table gram_table(Complex alpha, const ExperimentOptions& opts = {}) {
  const GramMatrix g = gram_matrix(alpha);

  Eigen::Matrix4cd fock_entries;
  if (opts.backend != Backend::analytic) {
    const double max_mag = std::abs(alpha);
    const int cutoff = truncation_bound(max_mag, opts.fock_tail_tol);
    FockVector images[] = {
        cat_to_fock(make_quasi_bell(1, alpha), cutoff),
        cat_to_fock(make_quasi_bell(2, alpha), cutoff),
        cat_to_fock(make_quasi_bell(3, alpha), cutoff),
        cat_to_fock(make_quasi_bell(4, alpha), cutoff)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        fock_entries(i, j) = inner(images[i], images[j]);
  }

  Table rows;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex analytic = g.entries(i, j);
      ResultRow row;
      row.set("alpha_re", alpha.real())
          .set("alpha_im", alpha.imag())
          .set("i", static_cast<double>(i + 1))
          .set("j", static_cast<double>(j + 1))
          .set("backend", to_string(opts.backend));
      const Complex shown =
          opts.backend == Backend::fock ? fock_entries(i, j) : analytic;
      row.set("value", shown);
      if (opts.backend == Backend::both) {
        row.set("value_fock", fock_entries(i, j));
        detail::cross_check(std::abs(analytic), std::abs(fock_entries(i, j)),
                            opts.cross_check_tol,
                            "gram entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

/// Entanglement degree of each quasi-Bell state, one row per (alpha, state).
/// Analytic column: closed form (1 for states 2 and 4, binary entropy of
/// (1+D)/2 for states 1 and 3). Fock column: the full reduced-density
/// pipeline.
inline Table entropy_table(const std::vector<double>& alphas,
                           const ExperimentOptions& opts = {}) {
  if (alphas.empty()) throw DomainError("entropy_table: empty alpha grid");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Table rows;
  for (double alpha : alphas)
    for (int state = 1; state <= 4; ++state) {
      ResultRow row;
      row.set("alpha", alpha)
          .set("state", static_cast<double>(state))
          .set("backend", to_string(opts.backend));
      std::string status = "ok";
      double closed = nan, fock = nan;
      try {
        if (!(alpha > 0.0)) throw DomainError("degenerate alpha");
        closed = (state == 2 || state == 4)
                     ? 1.0
                     : entropy_closed_form(psi13_overlap(Complex(alpha)));
        if (opts.backend != Backend::analytic)
          fock = entanglement_entropy(make_quasi_bell(state, Complex(alpha)),
                                      opts.fock_tail_tol);
        if (opts.backend == Backend::both)
          detail::cross_check(closed, fock, opts.cross_check_tol,
                              "entropy of state " + std::to_string(state) +
                                  " at alpha = " + format_double(alpha));
      } catch (const CrossCheckError&) {
        throw;
      } catch (const Error& e) {
        status = e.what();
        closed = fock = nan;
      }
      row.set("entropy_bits", opts.backend == Backend::fock ? fock : closed);
      if (opts.backend == Backend::both) row.set("entropy_bits_fock", fock);
      row.set("status", status);
      rows.push_back(std::move(row));
    }
  return rows;
}

/// Quantum Fisher information of the two probes under the phase generator
/// on the illuminated mode: the coherent probe (F_Q = 4 alpha^2) and mode B
/// of the entangled probe psi2.
inline Table qfi_table(const std::vector<double>& alphas,
                       const ExperimentOptions& opts = {}) {
  if (alphas.empty()) throw DomainError("qfi_table: empty alpha grid");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Table rows;
  for (double alpha : alphas) {
    ResultRow row;
    row.set("alpha", alpha).set("backend", to_string(opts.backend));
    std::string status = "ok";
    double coh_cf = nan, ecs_cf = nan, coh_fock = nan, ecs_fock = nan;
    try {
      if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("invalid alpha");
      const double m = alpha * alpha;
      coh_cf = 4.0 * m;
      if (alpha > 0.0) {
        // Var(n_B) of psi2 from coherent-state moments:
        // r = (1+kappa^2)/(1-kappa^2), Var = m r + m^2 (1 - r^2).
        const double k2 = kappa(Complex(alpha)) * kappa(Complex(alpha));
        const double r = (1.0 + k2) / (1.0 - k2);
        ecs_cf = 4.0 * (m * r + m * m * (1.0 - r * r));
      }
      if (opts.backend != Backend::analytic) {
        const int cutoff = truncation_bound(alpha, opts.fock_tail_tol);
        coh_fock =
            qfi_pure_phase(coherent_to_fock(Complex(alpha), cutoff), Mode::A);
        if (alpha > 0.0)
          ecs_fock = qfi_pure_phase(
              cat_to_fock(make_quasi_bell(2, Complex(alpha)), cutoff), Mode::B);
      }
      if (opts.backend == Backend::both) {
        detail::cross_check(coh_cf, coh_fock, opts.cross_check_tol,
                            "coherent QFI at alpha = " + format_double(alpha));
        if (alpha > 0.0)
          detail::cross_check(ecs_cf, ecs_fock, opts.cross_check_tol,
                              "ECS QFI at alpha = " + format_double(alpha));
      }
    } catch (const CrossCheckError&) {
      throw;
    } catch (const Error& e) {
      status = e.what();
      coh_cf = ecs_cf = coh_fock = ecs_fock = nan;
    }
    const bool fock_only = opts.backend == Backend::fock;
    row.set("qfi_coherent", fock_only ? coh_fock : coh_cf)
        .set("qfi_ecs_b", fock_only ? ecs_fock : ecs_cf);
    if (opts.backend == Backend::both)
      row.set("qfi_coherent_fock", coh_fock).set("qfi_ecs_b_fock", ecs_fock);
    row.set("status", status);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qread
