// Copyright 2026 The qcckit authors
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

#include <doctest.h>

#include "qcc/matrix.hpp"
#include "qcc/random.hpp"

using namespace qcc;

TEST_CASE("kron identity and diagonal cases") {
  CHECK(max_abs_diff(kron(cidentity(2), cidentity(2)), cidentity(4)) == 0.0);

  CMatrix d(2, 2);
  d << cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(2, 0);
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 0) = 1;
  expected(1, 1) = 1;
  expected(2, 2) = 2;
  expected(3, 3) = 2;
  CHECK(max_abs_diff(kron(d, cidentity(2)), expected) == 0.0);
}

TEST_CASE("kron(X,X) maps e0 to e3") {
  const CMatrix xx = kron(pauli_x(), pauli_x());
  CVector e0 = CVector::Zero(4);
  e0(0) = 1.0;
  const CVector out = xx * e0;
  CVector e3 = CVector::Zero(4);
  e3(3) = 1.0;
  CHECK((out - e3).norm() == 0.0);
}

TEST_CASE("kron associativity") {
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const CMatrix a = random_hermitian(2, rng);
    const CMatrix b = random_hermitian(3, rng);
    const CMatrix c = random_hermitian(2, rng);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-14);
  }
}

TEST_CASE("partial trace of the identity") {
  CHECK(max_abs_diff(partial_trace(cidentity(4), 2, 2, Subsystem::B),
                     2.0 * cidentity(2)) == 0.0);
}

TEST_CASE("partial trace of a maximally entangled state") {
  CVector phi = CVector::Zero(4);
  phi(0) = M_SQRT1_2;
  phi(3) = M_SQRT1_2;
  const CMatrix rho = phi * phi.adjoint();
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Subsystem::A),
                     0.5 * cidentity(2)) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Subsystem::B),
                     0.5 * cidentity(2)) <= 1e-15);
}

TEST_CASE("partial trace factorizes product states") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const CMatrix rho = random_density(2, rng);
    const CMatrix sigma = random_density(3, rng);
    const CMatrix both = kron(rho, sigma);
    CHECK(max_abs_diff(partial_trace(both, 2, 3, Subsystem::B), rho) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(both, 2, 3, Subsystem::A), sigma) <=
          1e-12);
  }
}

TEST_CASE("partial trace rejects bad factorizations") {
  CHECK_THROWS_AS(partial_trace(cidentity(4), 3, 2, Subsystem::B),
                  DimensionError);
  CHECK_THROWS_AS(partial_trace(czeros(2, 3), 2, 3, Subsystem::B),
                  DimensionError);
}

TEST_CASE("hermitian_eig on known spectra") {
  CMatrix d(2, 2);
  d << cplx(2, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0);
  const HermitianEigen eg = hermitian_eig(d);
  CHECK(eg.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(eg.eigenvalues(1) == doctest::Approx(2.0));

  const HermitianEigen ex = hermitian_eig(pauli_x());
  CHECK(ex.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ex.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstructs random input") {
  Rng rng(11);
  const CMatrix h = random_hermitian(5, rng);
  const HermitianEigen eg = hermitian_eig(h);
  const CMatrix back = CMatrix(eg.eigenvectors *
                               eg.eigenvalues.cast<cplx>().asDiagonal() *
                               eg.eigenvectors.adjoint());
  const double tol = 1e-10 * (1.0 + max_abs(h));
  CHECK(max_abs_diff(back, h) <= tol);
  CHECK(max_abs_diff(CMatrix(eg.eigenvectors.adjoint() * eg.eigenvectors),
                     cidentity(5)) <= 1e-10);
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(czeros(2, 3)), DimensionError);
  CMatrix m(2, 2);
  m << cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0);
  CHECK_THROWS_AS(hermitian_eig(m), ValidationError);
}

TEST_CASE("trace norm basics") {
  CMatrix d(2, 2);
  d << cplx(3, 0), cplx(0, 0), cplx(0, 0), cplx(-4, 0);
  CHECK(trace_norm(d) == doctest::Approx(7.0));

  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    CHECK(trace_norm(random_density(3, rng)) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(trace_norm(czeros(2, 3)), DimensionError);
}

TEST_CASE("trace norm of psi - I/2 is 1 for any qubit pure state") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    const CVector psi = random_pure_state(2, rng);
    const CMatrix m = CMatrix(psi * psi.adjoint()) - 0.5 * cidentity(2);
    CHECK(trace_norm(m) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("trace norm dominates the trace") {
  Rng rng(19);
  for (int i = 0; i < 20; ++i) {
    CMatrix g(3, 3);
    for (Eigen::Index r = 0; r < 3; ++r)
      for (Eigen::Index c = 0; c < 3; ++c) g(r, c) = rng.normal_cplx();
    CHECK(trace_norm(g) >= std::abs(g.trace()) - 1e-12);
  }
}

TEST_CASE("trace norm of non-Hermitian input matches the SVD oracle") {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    CMatrix g(4, 4);
    for (Eigen::Index r = 0; r < 4; ++r)
      for (Eigen::Index c = 0; c < 4; ++c) g(r, c) = rng.normal_cplx();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd{Eigen::MatrixXcd(g)};
    const double expected = svd.singularValues().sum();
    CHECK(trace_norm(g) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("matrix_exp of a nilpotent matrix") {
  CMatrix n = czeros(2, 2);
  n(0, 1) = cplx(1.3, -0.4);
  const CMatrix expected = cidentity(2) + n;  // n^2 = 0
  CHECK(max_abs_diff(matrix_exp(n), expected) <= 1e-14);
}

TEST_CASE("matrix_exp closed forms") {
  CHECK(max_abs_diff(matrix_exp(czeros(3, 3)), cidentity(3)) == 0.0);

  CMatrix d(2, 2);
  d << cplx(1.5, 0), cplx(0, 0), cplx(0, 0), cplx(-0.5, 0.25);
  const CMatrix e = matrix_exp(d);
  CHECK(std::abs(e(0, 0) - std::exp(cplx(1.5, 0))) <= 1e-12);
  CHECK(std::abs(e(1, 1) - std::exp(cplx(-0.5, 0.25))) <= 1e-12);
  CHECK(std::abs(e(0, 1)) <= 1e-15);

  // exp(i theta X) = cos(theta) I + i sin(theta) X
  const double theta = 0.7;
  const CMatrix rot = matrix_exp(cplx(0, theta) * pauli_x());
  const CMatrix expected =
      std::cos(theta) * cidentity(2) + cplx(0, std::sin(theta)) * pauli_x();
  CHECK(max_abs_diff(rot, expected) <= 1e-14);
}

TEST_CASE("matrix_exp semigroup law") {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    CMatrix a(4, 4);
    for (Eigen::Index r = 0; r < 4; ++r)
      for (Eigen::Index c = 0; c < 4; ++c) a(r, c) = rng.normal_cplx();
    a *= 5.0 / std::max(one_norm(a), 1.0);
    const double s = 0.3 + rng.uniform();
    const double t = 0.2 + rng.uniform();
    const CMatrix lhs = CMatrix(matrix_exp(s * a) * matrix_exp(t * a));
    const CMatrix rhs = matrix_exp((s + t) * a);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("matrix_exp is accurate at norm 50 against the spectral oracle") {
  Rng rng(29);
  CMatrix h = random_hermitian(4, rng);
  h *= 50.0 / one_norm(h);
  const HermitianEigen eg = hermitian_eig(h);
  RVector exps = eg.eigenvalues.array().exp();
  const CMatrix expected = CMatrix(
      eg.eigenvectors * exps.cast<cplx>().asDiagonal() *
      eg.eigenvectors.adjoint());
  const CMatrix got = matrix_exp(h);
  CHECK(max_abs_diff(got, expected) <= 1e-10 * max_abs(expected));
}

TEST_CASE("solve basics and spectral-inverse oracle") {
  CMatrix b(2, 2);
  b << cplx(1, 2), cplx(3, 0), cplx(0, -1), cplx(2, 2);
  CHECK(max_abs_diff(solve(cidentity(2), b), b) == 0.0);
  CHECK(max_abs_diff(solve(2.0 * cidentity(2), cidentity(2)),
                     0.5 * cidentity(2)) == 0.0);

  Rng rng(31);
  CMatrix l(4, 4);
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) l(r, c) = rng.normal_cplx();
  const double lambda = 7.0;
  const CMatrix a = lambda * cidentity(4) - l;
  const CMatrix x = solve(a, cidentity(4));

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(l)};
  Eigen::VectorXcd inv_vals(4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    inv_vals(i) = 1.0 / (lambda - es.eigenvalues()(i));
  }
  const Eigen::MatrixXcd oracle = es.eigenvectors() *
                                  inv_vals.asDiagonal() *
                                  es.eigenvectors().inverse();
  CHECK(max_abs_diff(x, CMatrix(oracle)) <= 1e-8);
}

TEST_CASE("solve rejects singular matrices with a condition estimate") {
  CMatrix s = czeros(2, 2);
  s(0, 0) = 1.0;
  try {
    solve(s, cidentity(2));
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("condition estimate") !=
          std::string::npos);
  }
}

TEST_CASE("vec follows the column-stacking convention") {
  CMatrix m(2, 2);
  m << cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0);
  const CVector v = vec(m);
  CHECK(v(0) == cplx(1, 0));  // (0,0)
  CHECK(v(1) == cplx(3, 0));  // (1,0)
  CHECK(v(2) == cplx(2, 0));  // (0,1)
  CHECK(v(3) == cplx(4, 0));  // (1,1)
  CHECK(max_abs_diff(unvec(v, 2, 2), m) == 0.0);
}
