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

#include "qcc/lindblad.hpp"

using namespace qcc;

namespace {

OptBudget quick_budget() {
  OptBudget b;
  b.restarts = 16;
  b.iters = 200;
  return b;
}

LindbladGenerator damping_generator(double gamma) {
  CMatrix jump = czeros(2, 2);
  jump(0, 1) = std::sqrt(gamma);
  return make_generator(czeros(2, 2), {jump});
}

}  // namespace

TEST_CASE("trivial generator gives the zero Liouville matrix") {
  const LindbladGenerator g = make_generator(czeros(2, 2), {});
  CHECK(max_abs(generator_liouville(g)) == 0.0);
}

TEST_CASE("pure Hamiltonian evolution of the coherence") {
  const double omega = 1.3;
  const LindbladGenerator g =
      make_generator(CMatrix(0.5 * omega * pauli_z()), {});
  const CMatrix a = generator_liouville(g);
  // coherence rho_01 evolves with eigenvalue -i omega: column of vec index 2
  const CVector col = CVector(Eigen::MatrixXcd(a) * vec(matrix_unit(2, 0, 1)));
  const CMatrix out = unvec(col, 2, 2);
  CHECK(std::abs(out(0, 1) - cplx(0, -omega)) <= 1e-12);
  CHECK(std::abs(out(0, 0)) <= 1e-14);
  CHECK(std::abs(out(1, 1)) <= 1e-14);
}

TEST_CASE("damping generator decays the excited population at rate gamma") {
  const double gamma = 0.8;
  const LindbladGenerator g = damping_generator(gamma);
  const CMatrix a = generator_liouville(g);
  const CMatrix out =
      unvec(CVector(Eigen::MatrixXcd(a) * vec(matrix_unit(2, 1, 1))), 2, 2);
  // d/dt rho_11 = -gamma rho_11 and the population moves to rho_00
  CHECK(std::abs(out(1, 1) - cplx(-gamma, 0)) <= 1e-12);
  CHECK(std::abs(out(0, 0) - cplx(gamma, 0)) <= 1e-12);
}

TEST_CASE("generator validation") {
  CMatrix nonherm(2, 2);
  nonherm << cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0);
  CHECK_THROWS_AS(make_generator(nonherm, {}), ValidationError);
  CHECK_THROWS_AS(make_generator(czeros(2, 2), {czeros(3, 3)}),
                  DimensionError);
}

TEST_CASE("propagator at t = 0 is the identity channel") {
  const QuantumChannel p = propagator(damping_generator(0.7), 0.0);
  CHECK(max_abs_diff(p.liouville, identity_channel(2).liouville) <= 1e-12);
}

TEST_CASE("damping propagator matches the amplitude damping builder") {
  for (double gt : {0.1, 0.5, 1.0, 2.0}) {
    const double gamma = 0.9;
    const double t = gt / gamma;
    const QuantumChannel p = propagator(damping_generator(gamma), t);
    const QuantumChannel expected = amplitude_damping(1.0 - std::exp(-gt));
    CHECK(max_abs_diff(p.liouville, expected.liouville) <= 1e-9);
  }
}

TEST_CASE("pure Hamiltonian propagator is the unitary channel") {
  Rng rng(200);
  const CMatrix h = random_hermitian(2, rng);
  const double t = 0.9;
  const QuantumChannel p = propagator(make_generator(h, {}), t);
  const CMatrix u = matrix_exp(CMatrix(cplx(0, -t) * h));
  CHECK(max_abs_diff(p.liouville, unitary_channel(u).liouville) <= 1e-9);
}

TEST_CASE("propagators of random generators are CPTP and form a semigroup") {
  Rng rng(201);
  for (int i = 0; i < 5; ++i) {
    const CMatrix h = random_hermitian(2, rng);
    CMatrix jump(2, 2);
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index c = 0; c < 2; ++c) jump(r, c) = 0.7 * rng.normal_cplx();
    const LindbladGenerator g = make_generator(h, {jump});

    const double s = 0.4, t = 0.7;
    const QuantumChannel ps = propagator(g, s);   // validated CPTP inside
    const QuantumChannel pt = propagator(g, t);
    const QuantumChannel pst = propagator(g, s + t);
    CHECK(max_abs_diff(compose(ps, pt).liouville, pst.liouville) <= 1e-9);
  }
}

TEST_CASE("propagator rejects negative times") {
  CHECK_THROWS_AS(propagator(damping_generator(0.5), -0.1), ValidationError);
}

TEST_CASE("resolvent of the zero generator is I/lambda") {
  const LindbladGenerator g = make_generator(czeros(2, 2), {});
  for (double lambda : {0.1, 1.0, 10.0}) {
    CHECK(max_abs_diff(resolvent(g, lambda),
                       CMatrix(cidentity(4) / lambda)) <= 1e-12);
  }
}

TEST_CASE("resolvent satisfies its defining identity") {
  Rng rng(202);
  for (int i = 0; i < 5; ++i) {
    const CMatrix h = random_hermitian(2, rng);
    CMatrix jump(2, 2);
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index c = 0; c < 2; ++c) jump(r, c) = rng.normal_cplx();
    const LindbladGenerator g = make_generator(h, {jump});
    const double lambda = 0.5 + rng.uniform();
    const CMatrix a = generator_liouville(g);
    const CMatrix r = resolvent(g, lambda);
    CHECK(max_abs_diff(CMatrix((lambda * cidentity(4) - a) * r),
                       cidentity(4)) <= 1e-9);
  }
}

TEST_CASE("resolvent diagonal matches the scalar formula for damping") {
  const double gamma = 0.6;
  const CMatrix r = resolvent(damping_generator(gamma), 1.0);
  // the rho_11 sector evolves with eigenvalue -gamma: resolvent 1/(1+gamma)
  const CVector mapped =
      CVector(Eigen::MatrixXcd(r) * vec(matrix_unit(2, 1, 1)));
  const CMatrix out = unvec(mapped, 2, 2);
  CHECK(out(1, 1).real() == doctest::Approx(1.0 / (1.0 + gamma)));
  CHECK_THROWS_AS(resolvent(damping_generator(gamma), 0.0), ValidationError);
}

TEST_CASE("constant family has zero gaps everywhere") {
  const GeneratorFamily fam =
      constant_family(damping_generator(0.5), {0.0, 0.5, 1.0});
  const ContinuityReport cont =
      resolvent_continuity_scan(fam, default_lambda_grid(), quick_budget());
  for (const auto& row : cont.rows) CHECK(row.resolvent_gap <= 1e-12);
  const StabilityReport stab = stability_sweep(fam, 1.0, 0.0, quick_budget());
  for (const auto& row : stab.rows) CHECK(row.so_gap <= 1e-12);
}

TEST_CASE("damping family resolvent gaps shrink linearly with the grid") {
  const GeneratorFamily coarse = damping_family({0.2, 0.6, 1.0});
  const GeneratorFamily fine = damping_family({0.2, 0.4, 0.6, 0.8, 1.0});
  const std::vector<double> lambdas{1.0};
  const double coarse_max =
      resolvent_continuity_scan(coarse, lambdas, quick_budget())
          .modulus_estimate;
  const double fine_max =
      resolvent_continuity_scan(fine, lambdas, quick_budget())
          .modulus_estimate;
  // the modulus estimate (gap / dz) stabilizes while the gaps themselves halve
  CHECK(fine_max <= coarse_max * 1.25);

  ContinuityReport c = resolvent_continuity_scan(coarse, lambdas,
                                                 quick_budget());
  ContinuityReport f = resolvent_continuity_scan(fine, lambdas,
                                                 quick_budget());
  double cg = 0, fg = 0;
  for (const auto& row : c.rows) cg = std::max(cg, row.resolvent_gap);
  for (const auto& row : f.rows) fg = std::max(fg, row.resolvent_gap);
  CHECK(fg <= cg / 1.5);
}

TEST_CASE("resolvent gaps shrink as lambda grows") {
  const GeneratorFamily fam = damping_family({0.2, 0.7});
  const ContinuityReport cont = resolvent_continuity_scan(
      fam, default_lambda_grid(), quick_budget());
  // rows ordered by (pair, lambda); one pair here
  REQUIRE(cont.rows.size() == 3);
  CHECK(cont.rows[0].resolvent_gap > cont.rows[1].resolvent_gap);
  CHECK(cont.rows[1].resolvent_gap > cont.rows[2].resolvent_gap);
}

TEST_CASE("stability sweep: baseline row is zero, gaps grow monotonically") {
  const GeneratorFamily fam = bit_flip_rate_family({0.1, 0.2, 0.4, 0.8});
  const StabilityReport rep = stability_sweep(fam, 1.0, 0.1, quick_budget());
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.rows[0].so_gap == 0.0);
  for (std::size_t i = 2; i < rep.rows.size(); ++i) {
    CHECK(rep.rows[i].so_gap >= rep.rows[i - 1].so_gap - 1e-9);
  }
  // closed form: gap = 2 |q(z) - q(z0)| with q = (1 - exp(-2 r t)) / 2
  const auto q = [](double r) { return 0.5 * (1.0 - std::exp(-2.0 * r)); };
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const double expected = 2.0 * std::abs(q(rep.rows[i].z) - q(0.1));
    CHECK(rep.rows[i].so_gap == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("stability sweep respects the Duhamel-type bound") {
  const GeneratorFamily fam = damping_family({0.2, 0.5, 0.8});
  const double t = 0.9;
  const StabilityReport rep = stability_sweep(fam, t, 0.2, quick_budget());
  const CMatrix a_base = generator_liouville(fam.generator_at(0.2));
  for (const auto& row : rep.rows) {
    const CMatrix a_z = generator_liouville(fam.generator_at(row.z));
    const double gen_gap = so_norm_sa(
        delta_from_liouville(CMatrix(a_z - a_base)), quick_budget()).value;
    CHECK(row.so_gap <= t * gen_gap + 1e-8);
  }
}

TEST_CASE("stability sweep requires the baseline on the grid") {
  const GeneratorFamily fam = damping_family({0.2, 0.5});
  CHECK_THROWS_AS(stability_sweep(fam, 1.0, 0.3, quick_budget()),
                  ValidationError);
}

TEST_CASE("family construction validation") {
  CHECK_THROWS_AS(damping_family({0.5}), ValidationError);
  CHECK_THROWS_AS(damping_family({0.5, 0.2}), ValidationError);
}
