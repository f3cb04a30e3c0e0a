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

#include "qcc/lindblad.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qcc {

namespace {

// trace of A(E_ij) for every matrix unit, all must vanish
void check_trace_preserving_flow(const CMatrix& liouville, Eigen::Index dim) {
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const CVector mapped =
          Eigen::MatrixXcd(liouville) * vec(matrix_unit(dim, i, j));
      const CMatrix out = unvec(mapped, dim, dim);
      if (std::abs(out.trace()) > 1e-10) {
        std::ostringstream os;
        os << "lindblad generator: flow is not trace preserving on unit ("
           << i << "," << j << "), trace " << std::abs(out.trace());
        throw ValidationError(os.str());
      }
    }
  }
}

}  // namespace

LindbladGenerator make_generator(CMatrix hamiltonian,
                                 std::vector<CMatrix> jumps) {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
    throw DimensionError("lindblad generator: Hamiltonian not square");
  }
  if (!is_hermitian(hamiltonian, 1e-10)) {
    throw ValidationError(
        "lindblad generator: Hamiltonian not Hermitian within 1e-10");
  }
  const Eigen::Index dim = hamiltonian.rows();
  for (const CMatrix& l : jumps) {
    if (l.rows() != dim || l.cols() != dim) {
      throw DimensionError("lindblad generator: jump dimension mismatch");
    }
    if (!is_finite(l)) {
      throw ValidationError("lindblad generator: non-finite jump entries");
    }
  }
  LindbladGenerator g{dim, std::move(hamiltonian), std::move(jumps)};
  check_trace_preserving_flow(generator_liouville(g), dim);
  return g;
}

CMatrix generator_liouville(const LindbladGenerator& g) {
  const Eigen::Index d = g.dim;
  const CMatrix eye = cidentity(d);
  const cplx mi(0.0, -1.0);
  // vec(H rho) = (I (x) H) vec(rho), vec(rho H) = (H^T (x) I) vec(rho)
  CMatrix a = mi * (kron(eye, g.hamiltonian) -
                    kron(CMatrix(g.hamiltonian.transpose()), eye));
  for (const CMatrix& l : g.jumps) {
    const CMatrix ll = dagger(l) * l;
    a += kron(l.conjugate(), l) -
         0.5 * (kron(eye, ll) + kron(CMatrix(ll.transpose()), eye));
  }
  return a;
}

QuantumChannel propagator(const LindbladGenerator& g, double t) {
  if (!(t >= 0.0)) {
    throw ValidationError("propagator: time must be >= 0");
  }
  const CMatrix a = generator_liouville(g);
  const CMatrix p = matrix_exp(t * a);
  try {
    return channel_from_liouville(p, g.dim, g.dim);
  } catch (const ValidationError& e) {
    std::ostringstream os;
    os << "propagator: exp(tA) failed CPTP validation (invalid generator or "
          "tolerance breach): "
       << e.what();
    throw ValidationError(os.str());
  }
}

CMatrix resolvent(const LindbladGenerator& g, double lambda) {
  if (!(lambda > 0.0)) {
    throw ValidationError("resolvent: lambda must be > 0");
  }
  const CMatrix a = generator_liouville(g);
  const Eigen::Index d2 = a.rows();
  return solve(lambda * cidentity(d2) - a, cidentity(d2));
}

GeneratorFamily make_family(std::string parameter_name,
                            std::vector<double> grid,
                            std::function<LindbladGenerator(double)> at) {
  if (grid.size() < 2) {
    throw ValidationError("generator family: need at least 2 grid points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ValidationError(
          "generator family: grid must be strictly increasing");
    }
  }
  GeneratorFamily f;
  f.parameter_name = std::move(parameter_name);
  f.parameter_grid = std::move(grid);
  f.generator_at = std::move(at);
  f.dim = f.generator_at(f.parameter_grid.front()).dim;
  return f;
}

GeneratorFamily damping_family(std::vector<double> gammas) {
  auto at = [](double gamma) {
    CMatrix jump = CMatrix::Zero(2, 2);
    jump(0, 1) = std::sqrt(std::max(gamma, 0.0));
    return make_generator(czeros(2, 2), {jump});
  };
  return make_family("gamma", std::move(gammas), at);
}

GeneratorFamily bit_flip_rate_family(std::vector<double> rates) {
  auto at = [](double rate) {
    const CMatrix jump = std::sqrt(std::max(rate, 0.0)) * pauli_x();
    return make_generator(czeros(2, 2), {jump});
  };
  return make_family("rate", std::move(rates), at);
}

GeneratorFamily constant_family(const LindbladGenerator& g,
                                std::vector<double> grid,
                                std::string parameter_name) {
  auto at = [g](double) { return g; };
  return make_family(std::move(parameter_name), std::move(grid), at);
}

ContinuityReport resolvent_continuity_scan(const GeneratorFamily& family,
                                           const std::vector<double>& lambdas,
                                           const OptBudget& budget) {
  if (family.parameter_grid.size() < 2) {
    throw ValidationError("resolvent scan: need at least 2 grid points");
  }
  ContinuityReport report;
  std::vector<std::vector<CMatrix>> resolvents;  // [grid][lambda]
  for (double z : family.parameter_grid) {
    const LindbladGenerator g = family.generator_at(z);
    std::vector<CMatrix> row;
    for (double lambda : lambdas) {
      try {
        row.push_back(resolvent(g, lambda));
      } catch (const Error& e) {
        std::ostringstream os;
        os << "resolvent scan failed at z=" << z << ", lambda=" << lambda
           << ": " << e.what();
        throw NumericalError(os.str());
      }
    }
    resolvents.push_back(std::move(row));
  }
  for (std::size_t i = 0; i + 1 < family.parameter_grid.size(); ++i) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const SuperoperatorDelta delta = delta_from_liouville(
          resolvents[i][j] - resolvents[i + 1][j], "resolvent gap");
      ContinuityReport::Row row;
      row.z_lo = family.parameter_grid[i];
      row.z_hi = family.parameter_grid[i + 1];
      row.lambda = lambdas[j];
      row.resolvent_gap = so_norm_sa(delta, budget).value;
      report.modulus_estimate = std::max(
          report.modulus_estimate, row.resolvent_gap / (row.z_hi - row.z_lo));
      report.rows.push_back(row);
    }
  }
  return report;
}

StabilityReport stability_sweep(const GeneratorFamily& family, double t,
                                double baseline_z, const OptBudget& budget) {
  if (!(t >= 0.0)) {
    throw ValidationError("stability_sweep: time must be >= 0");
  }
  bool on_grid = false;
  for (double z : family.parameter_grid) {
    if (z == baseline_z) on_grid = true;
  }
  if (!on_grid) {
    throw ValidationError("stability_sweep: baseline must be a grid point");
  }
  const QuantumChannel base = propagator(family.generator_at(baseline_z), t);
  StabilityReport report;
  report.t = t;
  report.baseline_z = baseline_z;
  for (double z : family.parameter_grid) {
    StabilityReport::Row row;
    row.z = z;
    if (z == baseline_z) {
      row.so_gap = 0.0;
    } else {
      const QuantumChannel p = propagator(family.generator_at(z), t);
      row.so_gap =
          so_norm_sa(delta_between(p, base, "propagator gap"), budget).value;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace qcc
