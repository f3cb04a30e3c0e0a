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

#include <cmath>

#include "qcc/channel.hpp"

using namespace qcc;

namespace {

// apply through the Choi form: Phi(X) = Tr_A[(X^T (x) I) C]
CMatrix apply_via_choi(const QuantumChannel& c, const CMatrix& x) {
  const CMatrix lifted =
      CMatrix(kron(CMatrix(x.transpose()), cidentity(c.dim_out)) * c.choi);
  return partial_trace(lifted, c.dim_in, c.dim_out, Subsystem::A);
}

CMatrix apply_via_liouville(const QuantumChannel& c, const CMatrix& x) {
  return unvec(CVector(Eigen::MatrixXcd(c.liouville) * vec(x)), c.dim_out,
               c.dim_out);
}

// three-way representation agreement on the full matrix-unit basis
double representation_disagreement(const QuantumChannel& c) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < c.dim_in; ++i) {
    for (Eigen::Index j = 0; j < c.dim_in; ++j) {
      const CMatrix e = matrix_unit(c.dim_in, i, j);
      const CMatrix via_kraus = apply_to_operator(c, e);
      worst = std::max(worst, max_abs_diff(via_kraus, apply_via_choi(c, e)));
      worst =
          std::max(worst, max_abs_diff(via_kraus, apply_via_liouville(c, e)));
    }
  }
  return worst;
}

void check_channel_invariants(const QuantumChannel& c) {
  CMatrix sum = czeros(c.dim_in, c.dim_in);
  for (const CMatrix& k : c.kraus) sum += dagger(k) * k;
  CHECK(max_abs_diff(sum, cidentity(c.dim_in)) <= kTpTol);
  CHECK(hermitian_eig(c.choi).eigenvalues(0) >= -kCpTol);
  CHECK(representation_disagreement(c) <= 1e-9);
}

DensityMatrix ground_state() {
  CVector e0 = CVector::Zero(2);
  e0(0) = 1.0;
  return pure_state(e0);
}

DensityMatrix excited_state() {
  CVector e1 = CVector::Zero(2);
  e1(1) = 1.0;
  return pure_state(e1);
}

}  // namespace

TEST_CASE("from_kraus identity channel") {
  const QuantumChannel c = from_kraus({cidentity(2)});
  check_channel_invariants(c);
  Rng rng(1);
  const CMatrix rho = random_density(2, rng);
  CHECK(max_abs_diff(apply_to_operator(c, rho), rho) == 0.0);
}

TEST_CASE("bit flip Choi spectrum at q = 0.25") {
  const QuantumChannel c = bit_flip(0.25);
  const HermitianEigen eg = hermitian_eig(c.choi);
  CHECK(eg.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eg.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eg.eigenvalues(2) == doctest::Approx(2.0 * 0.25));
  CHECK(eg.eigenvalues(3) == doctest::Approx(2.0 * 0.75));
}

TEST_CASE("full amplitude damping sends everything to the ground state") {
  const QuantumChannel c = amplitude_damping(1.0);
  Rng rng(2);
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix rho{2, random_density(2, rng)};
    const DensityMatrix out = apply(c, rho);
    CHECK(max_abs_diff(out.matrix, ground_state().matrix) <= 1e-12);
  }
}

TEST_CASE("from_kraus rejects incomplete and mixed sets") {
  try {
    from_kraus({0.5 * cidentity(2)});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("deviates") != std::string::npos);
  }
  CHECK_THROWS_AS(from_kraus({cidentity(2), cidentity(3)}), DimensionError);
}

TEST_CASE("from_kraus repair renormalizes mild completeness defects") {
  std::vector<CMatrix> ops{std::sqrt(0.9) * cidentity(2)};
  ChannelOptions repair;
  repair.repair = true;
  const QuantumChannel c = from_kraus(ops, repair);
  check_channel_invariants(c);
}

TEST_CASE("choi_to_kraus recovers the identity channel") {
  const QuantumChannel id = identity_channel(2);
  const QuantumChannel back = choi_to_kraus(id.choi, 2, 2);
  CHECK(back.kraus.size() == 1);
  CHECK(representation_disagreement(back) <= 1e-9);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      const CMatrix e = matrix_unit(2, i, j);
      CHECK(max_abs_diff(apply_to_operator(back, e), e) <= 1e-12);
    }
}

TEST_CASE("choi_to_kraus of the completely depolarizing qubit channel") {
  const QuantumChannel cd = completely_depolarizing(2);
  const QuantumChannel back = choi_to_kraus(cd.choi, 2, 2);
  CHECK(back.kraus.size() == 4);
  for (const CMatrix& k : back.kraus) {
    // rank one: second singular value vanishes
    const HermitianEigen eg = hermitian_eig(CMatrix(dagger(k) * k));
    CHECK(eg.eigenvalues(0) <= 1e-12);
    CHECK(eg.eigenvalues(1) > 1e-3);
  }
}

TEST_CASE("kraus -> choi -> kraus round trip preserves the action") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const QuantumChannel c = random_channel(2, 3, rng);
    const QuantumChannel back = choi_to_kraus(c.choi, 2, 2);
    for (Eigen::Index a = 0; a < 2; ++a)
      for (Eigen::Index b = 0; b < 2; ++b) {
        const CMatrix e = matrix_unit(2, a, b);
        CHECK(max_abs_diff(apply_to_operator(c, e),
                           apply_to_operator(back, e)) <= 1e-9);
      }
  }
}

TEST_CASE("choi_to_kraus rejects CP and TP violations") {
  // negative eigenvalue: not completely positive
  CMatrix bad = cidentity(4);
  bad(3, 3) = -1.0;
  CHECK_THROWS_AS(choi_to_kraus(bad, 2, 2), ValidationError);
  // wrong normalization: not trace preserving
  CHECK_THROWS_AS(choi_to_kraus(CMatrix(3.0 * identity_channel(2).choi), 2, 2),
                  ValidationError);
}

TEST_CASE("apply matches closed forms") {
  const QuantumChannel cd = completely_depolarizing(2);
  Rng rng(4);
  const DensityMatrix rho{2, random_density(2, rng)};
  CHECK(max_abs_diff(apply(cd, rho).matrix, 0.5 * cidentity(2)) <= 1e-12);

  const double q = 0.3;
  const DensityMatrix out = apply(bit_flip(q), ground_state());
  CHECK(std::abs(out.matrix(0, 0) - cplx(1 - q, 0)) <= 1e-12);
  CHECK(std::abs(out.matrix(1, 1) - cplx(q, 0)) <= 1e-12);
}

TEST_CASE("compose with the identity is neutral") {
  const QuantumChannel c = amplitude_damping(0.4);
  const QuantumChannel left = compose(identity_channel(2), c);
  const QuantumChannel right = compose(c, identity_channel(2));
  CHECK(max_abs_diff(left.liouville, c.liouville) <= 1e-12);
  CHECK(max_abs_diff(right.liouville, c.liouville) <= 1e-12);
}

TEST_CASE("bit flips compose by probability convolution") {
  const double q1 = 0.1, q2 = 0.25;
  const QuantumChannel composed = compose(bit_flip(q1), bit_flip(q2));
  const QuantumChannel direct = bit_flip(q1 + q2 - 2 * q1 * q2);
  CHECK(max_abs_diff(composed.liouville, direct.liouville) <= 1e-12);
}

TEST_CASE("compose matches direct triple application") {
  const LinkingMapPair links = repetition_code_pair();
  const QuantumChannel noise = iid_noise(bit_flip(0.1), 3);
  const QuantumChannel dressed =
      compose(links.decode, compose(noise, links.encode));
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      const CMatrix e = matrix_unit(2, i, j);
      const CMatrix direct = apply_to_operator(
          links.decode,
          apply_to_operator(noise, apply_to_operator(links.encode, e)));
      CHECK(max_abs_diff(apply_to_operator(dressed, e), direct) <= 1e-12);
    }
}

TEST_CASE("compose Liouville equals the product of Liouvilles") {
  Rng rng(5);
  const QuantumChannel a = random_channel(2, 2, rng);
  const QuantumChannel b = random_channel(2, 3, rng);
  CHECK(max_abs_diff(compose(a, b).liouville,
                     CMatrix(a.liouville * b.liouville)) <= 1e-12);
}

TEST_CASE("compose is associative") {
  Rng rng(6);
  for (int i = 0; i < 5; ++i) {
    const QuantumChannel a = random_channel(2, 2, rng);
    const QuantumChannel b = random_channel(2, 3, rng);
    const QuantumChannel c = random_channel(2, 2, rng);
    CHECK(max_abs_diff(compose(compose(a, b), c).liouville,
                       compose(a, compose(b, c)).liouville) <= 1e-11);
  }
}

TEST_CASE("tensor basics and the interchange law") {
  CHECK(max_abs_diff(tensor(identity_channel(2), identity_channel(2)).liouville,
                     identity_channel(4).liouville) == 0.0);

  Rng rng(7);
  const CMatrix rho = random_density(2, rng);
  const CMatrix sigma = random_density(2, rng);
  const QuantumChannel bf = bit_flip(0.2);
  const CMatrix out = apply_to_operator(tensor(bf, identity_channel(2)),
                                        kron(rho, sigma));
  CHECK(max_abs_diff(out, kron(apply_to_operator(bf, rho), sigma)) <= 1e-12);

  // (a (x) b) o (c (x) d) = (a o c) (x) (b o d)
  const QuantumChannel a = random_channel(2, 2, rng);
  const QuantumChannel b = random_channel(2, 3, rng);
  const QuantumChannel c = random_channel(2, 2, rng);
  const QuantumChannel d = random_channel(2, 2, rng);
  CHECK(max_abs_diff(compose(tensor(a, b), tensor(c, d)).liouville,
                     tensor(compose(a, c), compose(b, d)).liouville) <= 1e-11);
}

TEST_CASE("iid_noise matches the explicit tensor cube") {
  const QuantumChannel one = bit_flip(0.15);
  const QuantumChannel three = iid_noise(one, 3);
  const QuantumChannel direct = tensor(tensor(one, one), one);
  CHECK(max_abs_diff(three.liouville, direct.liouville) <= 1e-12);
}

TEST_CASE("builder edge cases") {
  CHECK(max_abs_diff(unitary_channel(cidentity(2)).liouville,
                     identity_channel(2).liouville) == 0.0);

  Rng rng(8);
  const DensityMatrix rho{2, random_density(2, rng)};
  CHECK(max_abs_diff(apply(depolarizing(1.0), rho).matrix,
                     0.5 * cidentity(2)) <= 1e-12);

  const double gamma = 0.35;
  const DensityMatrix out = apply(amplitude_damping(gamma), excited_state());
  CHECK(std::abs(out.matrix(0, 0) - cplx(gamma, 0)) <= 1e-12);
  CHECK(std::abs(out.matrix(1, 1) - cplx(1 - gamma, 0)) <= 1e-12);

  CHECK_THROWS_AS(bit_flip(-0.1), ValidationError);
  CHECK_THROWS_AS(depolarizing(1.5), ValidationError);
  CHECK_THROWS_AS(amplitude_damping(2.0), ValidationError);
  CHECK_THROWS_AS(unitary_channel(CMatrix(2.0 * cidentity(2))),
                  ValidationError);
}

TEST_CASE("all builders produce valid channels across parameter draws") {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const double p = rng.uniform();
    QuantumChannel c;
    switch (i % 5) {
      case 0: c = bit_flip(p); break;
      case 1: c = phase_flip(p); break;
      case 2: c = depolarizing(p); break;
      case 3: c = amplitude_damping(p); break;
      default: c = random_channel(2, 1 + (i % 3), rng); break;
    }
    const DensityMatrix out = apply(c, DensityMatrix{2, random_density(2, rng)});
    // apply() validated hermiticity/trace/positivity; spot-check trace
    CHECK(std::abs(out.matrix.trace().real() - 1.0) <= 1e-10);
    if (i % 20 == 0) check_channel_invariants(c);
  }
}

TEST_CASE("repetition code round trip is the identity") {
  const LinkingMapPair links = repetition_code_pair();
  const QuantumChannel round = compose(links.decode, links.encode);
  CHECK(max_abs_diff(round.liouville, identity_channel(2).liouville) <= 1e-12);
  check_channel_invariants(links.encode);
  check_channel_invariants(links.decode);
}

TEST_CASE("repetition code under iid bit flips is a logical bit flip") {
  for (double q : {0.05, 0.1, 0.3, 0.5}) {
    const LinkingMapPair links = repetition_code_pair();
    const QuantumChannel noisy = compose(
        links.decode, compose(iid_noise(bit_flip(q), 3), links.encode));
    const double f = 3 * q * q - 2 * q * q * q;
    const DensityMatrix out = apply(noisy, ground_state());
    CHECK(std::abs(out.matrix(0, 0).real() - (1 - f)) <= 1e-12);
    CHECK(std::abs(out.matrix(1, 1).real() - f) <= 1e-12);
  }
}

TEST_CASE("povm_sqrt on projective and diagonal effects") {
  const Povm comp = computational_readout({"0", "1"});
  const std::vector<CMatrix> roots = povm_sqrt(comp);
  CHECK(max_abs_diff(roots[0], comp.effects[0]) <= 1e-12);
  CHECK(max_abs_diff(roots[1], comp.effects[1]) <= 1e-12);

  CMatrix e(2, 2);
  e << cplx(0.25, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0);
  CMatrix rest = cidentity(2) - e;
  const Povm p = make_povm({"a", "b"}, {e, rest});
  const CMatrix root = povm_sqrt(p)[0];
  CHECK(std::abs(root(0, 0) - cplx(0.5, 0)) <= 1e-12);
  CHECK(std::abs(root(1, 1) - cplx(1.0, 0)) <= 1e-12);
}

TEST_CASE("povm_sqrt squares back to the effect") {
  Rng rng(10);
  for (int i = 0; i < 10; ++i) {
    CMatrix g(3, 3);
    for (Eigen::Index r = 0; r < 3; ++r)
      for (Eigen::Index c = 0; c < 3; ++c) g(r, c) = rng.normal_cplx();
    CMatrix e = g * dagger(g);
    e *= 0.9 / e.trace().real();  // spectral norm now below 1
    const CMatrix rest = cidentity(3) - e;
    const Povm p = make_povm({"x", "y"}, {e, rest});
    const std::vector<CMatrix> roots = povm_sqrt(p);
    CHECK(max_abs_diff(CMatrix(roots[0] * roots[0]), e) <= 1e-9);
  }
}

TEST_CASE("povm validation") {
  CMatrix neg = cidentity(2);
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(make_povm({"a", "b"}, {neg, CMatrix(cidentity(2) - neg)}),
                  ValidationError);
  CHECK_THROWS_AS(
      make_povm({"a", "b"}, {0.5 * cidentity(2), 0.4 * cidentity(2)}),
      ValidationError);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(density_matrix(CMatrix(2.0 * cidentity(2))),
                  ValidationError);
  CMatrix nonherm(2, 2);
  nonherm << cplx(0.5, 0), cplx(0.1, 0), cplx(0.3, 0), cplx(0.5, 0);
  CHECK_THROWS_AS(density_matrix(nonherm), ValidationError);
  CMatrix neg(2, 2);
  neg << cplx(1.5, 0), cplx(0, 0), cplx(0, 0), cplx(-0.5, 0);
  CHECK_THROWS_AS(density_matrix(neg), ValidationError);
}

TEST_CASE("linking pair validation") {
  CHECK_THROWS_AS(
      make_linking_pair(identity_channel(2), identity_channel(3)),
      DimensionError);
}

TEST_CASE("liouville/choi reshuffles agree for rectangular channels") {
  const LinkingMapPair links = repetition_code_pair();
  for (const QuantumChannel* c : {&links.encode, &links.decode}) {
    CHECK(max_abs_diff(liouville_to_choi(c->liouville, c->dim_in, c->dim_out),
                       c->choi) <= 1e-13);
    CHECK(max_abs_diff(choi_to_liouville(c->choi, c->dim_in, c->dim_out),
                       c->liouville) <= 1e-13);
  }
}
