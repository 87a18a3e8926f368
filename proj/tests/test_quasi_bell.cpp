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

#include "qread/quasi_bell.hpp"

using namespace qread;

TEST_CASE("make_quasi_bell reproduces the normalization constants",
          "[quasibell]") {
  const CatState psi2 = make_quasi_bell(2, Complex(1.0));
  const double h2 = 0.71367267019403722;  // 1/sqrt(2(1-e^-4))
  REQUIRE(std::abs(psi2.terms()[0].coeff - Complex(h2)) < 1e-12);
  REQUIRE(std::abs(psi2.terms()[1].coeff - Complex(-h2)) < 1e-12);
  REQUIRE(std::abs(psi2.terms()[0].coeff.real() -
                   1.0 / std::sqrt(2.0 * (1.0 - std::exp(-4.0)))) < 1e-15);

  const CatState psi1 = make_quasi_bell(1, Complex(1.0));
  const double h1 = 0.70071884163261531;  // 1/sqrt(2(1+e^-4))
  REQUIRE(std::abs(psi1.terms()[0].coeff - Complex(h1)) < 1e-12);
  REQUIRE(std::abs(psi1.terms()[1].coeff - Complex(h1)) < 1e-12);

  for (int i = 1; i <= 4; ++i)
    REQUIRE(std::abs(
                cat_overlap(make_quasi_bell(i, Complex(0.8, -0.3)),
                            make_quasi_bell(i, Complex(0.8, -0.3)))
                    .real() -
                1.0) < 1e-12);
}

TEST_CASE("make_quasi_bell at alpha = 0 degenerates only for 2 and 4",
          "[quasibell]") {
  const CatState psi1 = make_quasi_bell(1, Complex(0.0));
  REQUIRE(std::abs(cat_overlap(psi1, psi1).real() - 1.0) < 1e-12);
  REQUIRE_THROWS_AS(make_quasi_bell(2, Complex(0.0)), DomainError);
  REQUIRE_THROWS_AS(make_quasi_bell(4, Complex(0.0)), DomainError);
  REQUIRE_THROWS_AS(make_quasi_bell(0, Complex(1.0)), DomainError);
  REQUIRE_THROWS_AS(make_quasi_bell(5, Complex(1.0)), DomainError);
}

TEST_CASE("gram matrix matches the sparse pattern with coupling D",
          "[quasibell]") {
  const GramMatrix g = gram_matrix(Complex(1.0));
  const double k = std::exp(-2.0);
  const double d = 2.0 * k / (1.0 + k * k);
  REQUIRE(std::abs(d - 0.26580222883407969) < 1e-15);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex expect = i == j ? Complex(1.0)
                             : ((i == 0 && j == 2) || (i == 2 && j == 0))
                                 ? Complex(d)
                                 : Complex(0.0);
      REQUIRE(std::abs(g.entries(i, j) - expect) < 1e-12);
    }
}

TEST_CASE("gram matrix pattern holds for complex alpha", "[quasibell]") {
  for (Complex alpha : {Complex(0.4, 0.9), Complex(-1.2, 0.3),
                        Complex(0.0, 1.5), Complex(2.0, -2.0)}) {
    const GramMatrix g = gram_matrix(alpha);
    const double d = psi13_overlap(alpha);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const Complex expect = i == j ? Complex(1.0)
                               : ((i == 0 && j == 2) || (i == 2 && j == 0))
                                   ? Complex(d)
                                   : Complex(0.0);
        REQUIRE(std::abs(g.entries(i, j) - expect) < 1e-12);
      }
  }
}

TEST_CASE("gram matrix tends to the identity for large alpha", "[quasibell]") {
  const GramMatrix g = gram_matrix(Complex(5.0));
  REQUIRE((g.entries - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("gram matrix eigenvalues are {1, 1, 1 +- D}", "[quasibell]") {
  const GramMatrix g = gram_matrix(Complex(1.0));
  const Eigen::VectorXd ev = hermitian_eigenvalues(g.entries);
  const double d = psi13_overlap(Complex(1.0));
  REQUIRE(std::abs(ev[0] - (1.0 - d)) < 1e-12);
  REQUIRE(std::abs(ev[1] - 1.0) < 1e-12);
  REQUIRE(std::abs(ev[2] - 1.0) < 1e-12);
  REQUIRE(std::abs(ev[3] - (1.0 + d)) < 1e-12);
  REQUIRE(ev[0] >= -1e-10);  // PSD
}

TEST_CASE("gram matrix rejects the degenerate amplitude", "[quasibell]") {
  REQUIRE_THROWS_AS(gram_matrix(Complex(0.0)), DomainError);
}

TEST_CASE("entropy closed form boundary values", "[quasibell]") {
  REQUIRE(entropy_closed_form(0.0) == 1.0);
  REQUIRE(entropy_closed_form(1.0) == 0.0);
  REQUIRE_THROWS_AS(entropy_closed_form(-0.1), DomainError);
  REQUIRE_THROWS_AS(entropy_closed_form(1.1), DomainError);
}

TEST_CASE("entanglement entropy of psi2 and psi4 is one bit", "[quasibell]") {
  REQUIRE(std::abs(entanglement_entropy(make_quasi_bell(2, Complex(0.8)),
                                        1e-14) -
                   1.0) < 1e-8);
  REQUIRE(std::abs(entanglement_entropy(make_quasi_bell(4, Complex(2.0)),
                                        1e-14) -
                   1.0) < 1e-8);
}

TEST_CASE("entanglement entropy of a product state vanishes", "[quasibell]") {
  const CatState product({{Complex(1.0), Complex(0.9), Complex(0.9)}});
  REQUIRE(std::abs(entanglement_entropy(product, 1e-14)) < 1e-9);
}

TEST_CASE("psi1 and psi3 entropies match the closed form", "[quasibell]") {
  for (double a : {0.2, 0.5, 1.0, 2.0}) {
    const double expect = entropy_closed_form(psi13_overlap(Complex(a)));
    const double e1 =
        entanglement_entropy(make_quasi_bell(1, Complex(a)), 1e-14);
    const double e3 =
        entanglement_entropy(make_quasi_bell(3, Complex(a)), 1e-14);
    REQUIRE(std::abs(e1 - expect) < 1e-8);
    REQUIRE(std::abs(e3 - expect) < 1e-8);
    REQUIRE(std::abs(e1 - e3) < 1e-10);
  }
  // frozen value at alpha = 1
  REQUIRE(std::abs(entanglement_entropy(make_quasi_bell(1, Complex(1.0)),
                                        1e-14) -
                   0.94841846623666144) < 1e-8);
}

TEST_CASE("all four entropies approach one bit for large alpha",
          "[quasibell]") {
  for (int i = 1; i <= 4; ++i)
    REQUIRE(std::abs(entanglement_entropy(make_quasi_bell(i, Complex(4.0)),
                                          1e-14) -
                     1.0) < 1e-6);
}
