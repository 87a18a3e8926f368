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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qread/channel.hpp"
#include "qread/coherent.hpp"
#include "qread/fock.hpp"
#include "qread/quasi_bell.hpp"

using namespace qread;
namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("truncation_bound handles the vacuum and rejects bad input",
          "[fock]") {
  REQUIRE(truncation_bound(0.0, 1e-14) == 0);
  REQUIRE_THROWS_AS(truncation_bound(-1.0, 1e-14), DomainError);
  REQUIRE_THROWS_AS(truncation_bound(1.0, 0.0), DomainError);
  REQUIRE_THROWS_AS(truncation_bound(1.0, 1.0), DomainError);
}

TEST_CASE("truncation_bound matches direct tail summation", "[fock]") {
  for (double a : {0.3, 0.5, 1.0, 1.7, 2.0, 3.0, 4.0}) {
    const int expected = testutil::poisson_truncation_reference(
        static_cast<long double>(a) * a, 1e-14L);
    REQUIRE(truncation_bound(a, 1e-14) == expected);
  }
  REQUIRE(truncation_bound(1.0, 1e-14) == 16);
  REQUIRE(truncation_bound(4.0, 1e-14) == 55);
}

TEST_CASE("truncation_bound is monotone in the amplitude", "[fock]") {
  for (double tol : {1e-8, 1e-12, 1e-14}) {
    int prev = 0;
    for (double a = 0.0; a <= 4.0; a += 0.25) {
      const int n = truncation_bound(a, tol);
      REQUIRE(n >= prev);
      prev = n;
    }
  }
}

TEST_CASE("coherent_to_fock expands the vacuum trivially", "[fock]") {
  const FockVector v = coherent_to_fock(Complex(0.0), 6);
  REQUIRE(v.coeffs()[0] == Complex(1.0, 0.0));
  REQUIRE(v.coeffs().tail(6).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coherent_to_fock coefficients follow the Poisson amplitudes",
          "[fock]") {
  const Complex alpha(0.9, -0.6);
  const FockVector v = coherent_to_fock(alpha, 12);
  const double g = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= 12; ++n) {
    const Complex expect =
        g * std::pow(alpha, n) / std::sqrt(std::tgamma(n + 1.0));
    REQUIRE(std::abs(v.coeffs()[n] - expect) < 1e-13);
  }
}

TEST_CASE("truncated coherent states keep their norm within the tail bound",
          "[fock]") {
  const FockVector v = coherent_to_fock(Complex(2.0), truncation_bound(2.0, 1e-14));
  REQUIRE(std::abs(v.squared_norm() - 1.0) < 1e-12);
  REQUIRE(v.squared_norm() <= 1.0 + 1e-9);
}

TEST_CASE("Fock inner product reproduces the analytic overlap", "[fock]") {
  const int cutoff = truncation_bound(1.0, 1e-14);
  const Complex ov = inner(coherent_to_fock(Complex(1.0), cutoff),
                           coherent_to_fock(Complex(-1.0), cutoff));
  REQUIRE(std::abs(ov - Complex(std::exp(-2.0))) < 1e-10);
}

TEST_CASE("tensor forms products and factorizes inner products", "[fock]") {
  const FockVector vac = coherent_to_fock(Complex(0.0), 8);
  const FockVector vv = tensor(vac, vac);
  REQUIRE(vv.modes() == 2);
  REQUIRE(vv.coeffs()[0] == Complex(1.0, 0.0));
  REQUIRE(std::abs(vv.squared_norm() - 1.0) == 0.0);

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 25; ++i) {
    const Complex a1(u(rng), u(rng)), b1(u(rng), u(rng));
    const Complex a2(u(rng), u(rng)), b2(u(rng), u(rng));
    const int n = 24;
    const Complex joint = inner(tensor(coherent_to_fock(a1, n), coherent_to_fock(b1, n)),
                                tensor(coherent_to_fock(a2, n), coherent_to_fock(b2, n)));
    const Complex split = inner(coherent_to_fock(a1, n), coherent_to_fock(a2, n)) *
                          inner(coherent_to_fock(b1, n), coherent_to_fock(b2, n));
    REQUIRE(std::abs(joint - split) < 1e-12);
  }
}

TEST_CASE("tensor and inner reject mismatched operands", "[fock]") {
  const FockVector a = coherent_to_fock(Complex(0.5), 8);
  const FockVector b = coherent_to_fock(Complex(0.5), 9);
  REQUIRE_THROWS_AS(tensor(a, b), ShapeError);
  REQUIRE_THROWS_AS(inner(a, b), ShapeError);
  const FockVector two = tensor(a, a);
  REQUIRE_THROWS_AS(tensor(two, a), ShapeError);
  REQUIRE_THROWS_AS(inner(two, a), ShapeError);
}

TEST_CASE("raw quasi-Bell sum built from tensors has norm 1/h2", "[fock]") {
  const int n = truncation_bound(1.0, 1e-14);
  const FockVector plus = tensor(coherent_to_fock(Complex(1.0), n),
                                 coherent_to_fock(Complex(1.0), n));
  const FockVector minus = tensor(coherent_to_fock(Complex(-1.0), n),
                                  coherent_to_fock(Complex(-1.0), n));
  FockVector raw(2, n, plus.coeffs() - minus.coeffs());
  const double k2 = std::exp(-4.0);
  REQUIRE(std::abs(raw.squared_norm() - 2.0 * (1.0 - k2)) < 1e-10);
  const double h2 = 0.71367267019403722;
  REQUIRE(std::abs(std::sqrt(raw.squared_norm()) - 1.0 / h2) < 1e-10);
}

TEST_CASE("fock images of the two channel outputs are orthogonal", "[fock]") {
  const CatState probe = make_quasi_bell(2, Complex(1.0));
  const CatState reflected = encode_bit(probe, 1, pi);
  const int n = truncation_bound(1.0, 1e-14);
  REQUIRE(std::abs(inner(cat_to_fock(probe, n), cat_to_fock(reflected, n))) <
          1e-10);
}

TEST_CASE("phase_shift_fock at zero is the identity", "[fock]") {
  const FockVector v = coherent_to_fock(Complex(1.2, 0.3), 20);
  const FockVector w = phase_shift_fock(v, 0.0, Mode::A);
  REQUIRE((w.coeffs() - v.coeffs()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("phase_shift_fock relabels coherent states", "[fock]") {
  const int n = truncation_bound(1.0, 1e-14);
  const FockVector v = coherent_to_fock(Complex(1.0), n);
  const FockVector pi_shift = phase_shift_fock(v, pi, Mode::A);
  REQUIRE((pi_shift.coeffs() - coherent_to_fock(Complex(-1.0), n).coeffs())
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  const FockVector quarter = phase_shift_fock(v, pi / 2.0, Mode::A);
  REQUIRE((quarter.coeffs() - coherent_to_fock(Complex(0.0, -1.0), n).coeffs())
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("phase_shift_fock is unitary and composes additively", "[fock]") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> th(-7.0, 7.0);
  const FockVector v = coherent_to_fock(Complex(1.4, -0.8), 30);
  for (int i = 0; i < 40; ++i) {
    const double t1 = th(rng), t2 = th(rng);
    const FockVector once = phase_shift_fock(v, t1, Mode::A);
    REQUIRE(std::abs(once.squared_norm() - v.squared_norm()) < 1e-13);
    const FockVector twice = phase_shift_fock(once, t2, Mode::A);
    const FockVector direct = phase_shift_fock(v, t1 + t2, Mode::A);
    REQUIRE((twice.coeffs() - direct.coeffs()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("phase_shift_fock validates the mode selector", "[fock]") {
  const FockVector v = coherent_to_fock(Complex(0.4), 8);
  REQUIRE_THROWS_AS(phase_shift_fock(v, 0.3, Mode::B), DomainError);
  const FockVector two = tensor(v, v);
  REQUIRE_NOTHROW(phase_shift_fock(two, 0.3, Mode::B));
}

TEST_CASE("two-mode phase shift targets the requested mode", "[fock]") {
  const int n = 18;
  const Complex a(0.8, 0.1), b(-0.5, 0.7);
  const FockVector ab = tensor(coherent_to_fock(a, n), coherent_to_fock(b, n));
  const double theta = 1.1;
  const Complex u = std::polar(1.0, -theta);
  const FockVector shifted_b = phase_shift_fock(ab, theta, Mode::B);
  const FockVector expect_b =
      tensor(coherent_to_fock(a, n), coherent_to_fock(b * u, n));
  REQUIRE((shifted_b.coeffs() - expect_b.coeffs()).cwiseAbs().maxCoeff() <
          1e-12);
  const FockVector shifted_a = phase_shift_fock(ab, theta, Mode::A);
  const FockVector expect_a =
      tensor(coherent_to_fock(a * u, n), coherent_to_fock(b, n));
  REQUIRE((shifted_a.coeffs() - expect_a.coeffs()).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("analytic and Fock overlaps agree on random cat states", "[fock]") {
  std::mt19937 rng(59);
  for (int i = 0; i < 40; ++i) {
    const CatState x = testutil::random_cat(rng, 4, 3.0);
    const CatState y = testutil::random_cat(rng, 4, 3.0);
    const int cutoff = truncation_bound(
        std::max(x.max_label_magnitude(), y.max_label_magnitude()), 1e-14);
    const Complex analytic = cat_overlap(x, y);
    const Complex fock = inner(cat_to_fock(x, cutoff), cat_to_fock(y, cutoff));
    REQUIRE(std::abs(analytic - fock) < 1e-10);
  }
}
