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

#include "qcc/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace qcc {

namespace {

constexpr std::uint64_t kSoSalt = 0x501;
constexpr std::uint64_t kDiamondSalt = 0xD1A;
constexpr std::uint64_t kPovmSalt = 0x907;

// Apply a superoperator with Liouville matrix `lv` (acting on C^d), extended
// by an identity ancilla of dimension n, to the (d*n)-dimensional operator x.
// Index convention: row (a*n + b) is system a, ancilla b. The extension works
// blockwise: each ancilla slice Y[bb'](a,a') = x(a*n+b, a'*n+b') is mapped
// through lv on its own.
CMatrix apply_extended(const Eigen::MatrixXcd& lv, Eigen::Index d,
                       Eigen::Index n, const CMatrix& x) {
  if (n == 1) {
    Eigen::VectorXcd out = lv * vec(x);
    const Eigen::Index dout =
        static_cast<Eigen::Index>(std::llround(std::sqrt(double(lv.rows()))));
    return unvec(out, dout, dout);
  }
  CMatrix out = CMatrix::Zero(d * n, d * n);
  CMatrix slice(d, d);
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index bp = 0; bp < n; ++bp) {
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index ap = 0; ap < d; ++ap)
          slice(a, ap) = x(a * n + b, ap * n + bp);
      const Eigen::VectorXcd mapped = lv * vec(slice);
      const CMatrix z = unvec(mapped, d, d);
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index ap = 0; ap < d; ++ap)
          out(a * n + b, ap * n + bp) = z(a, ap);
    }
  }
  return out;
}

struct AscentProblem {
  Eigen::MatrixXcd lv;      // scaled Liouville, column-major for fast matvec
  Eigen::MatrixXcd lv_adj;  // its adjoint (the dual map)
  Eigen::Index d = 0;       // system dimension
  Eigen::Index n = 1;       // ancilla dimension (1 = plain SO norm)
};

// Objective f(psi) = ||(Delta (x) I)(psi psi^dag)||_1 and, optionally, the
// dual certificate G = Delta^dag(S), where S is the sign matrix of the
// output's eigendecomposition (zero eigenvalues get sign 0, which is a
// valid subgradient choice at non-smooth points). The Euclidean ascent
// direction is 2 * G * psi.
double eval_objective(const AscentProblem& p, const CVector& psi,
                      CMatrix* dual) {
  const CMatrix x = psi * psi.adjoint();
  CMatrix m = apply_extended(p.lv, p.d, p.n, x);
  m = 0.5 * (m + CMatrix(m.adjoint()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const RVector& lam = es.eigenvalues();
  const double f = lam.cwiseAbs().sum();
  if (dual != nullptr) {
    const double ztol = 1e-13 * std::max(1.0, lam.cwiseAbs().maxCoeff());
    RVector signs(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      signs(i) = (lam(i) > ztol) ? 1.0 : ((lam(i) < -ztol) ? -1.0 : 0.0);
    }
    const Eigen::MatrixXcd s = es.eigenvectors() * signs.asDiagonal() *
                               es.eigenvectors().adjoint();
    CMatrix g = apply_extended(p.lv_adj, p.d, p.n, CMatrix(s));
    *dual = 0.5 * (g + CMatrix(g.adjoint()));
  }
  return f;
}

CVector basis_state(Eigen::Index dim, Eigen::Index i) {
  CVector v = CVector::Zero(dim);
  v(i) = 1.0;
  return v;
}

// Seeded multistart projected gradient ascent on the unit sphere in
// C^(d*n). `starts` seeds the first restarts; the remainder are random.
// Reduction over restarts is by index with strict improvement, so the
// result does not depend on any execution interleaving.
NormResult run_ascent(const SuperoperatorDelta& delta, Eigen::Index n,
                      const OptBudget& budget, std::uint64_t salt,
                      const std::vector<CVector>& starts) {
  const Eigen::Index d = delta.dim;
  const Eigen::Index dn = d * n;
  const double scale = delta.liouville.norm();

  NormResult res;
  res.method = NormMethod::optimized;
  if (scale == 0.0) {
    res.witness = basis_state(dn, 0);
    return res;
  }

  AscentProblem prob;
  prob.lv = Eigen::MatrixXcd(delta.liouville) / scale;
  prob.lv_adj = prob.lv.adjoint();
  prob.d = d;
  prob.n = n;

  // mandatory starts are always evaluated, whatever the restart budget
  const int restarts = std::max({budget.restarts, 1,
                                 static_cast<int>(starts.size())});
  const int iters = std::max(budget.iters, 0);
  const double step0 = (budget.step > 0.0) ? budget.step : 0.3;

  double best_f = -1.0;
  CVector best_psi;

  for (int r = 0; r < restarts; ++r) {
    CVector psi;
    if (r < static_cast<int>(starts.size())) {
      psi = starts[r];
    } else {
      Rng rng(derive_seed(budget.seed, salt * 0x10000 + r));
      psi = random_pure_state(dn, rng);
    }
    CMatrix dual;
    double f = 0.0;
    for (int t = 0;; ++t) {
      f = eval_objective(prob, psi, &dual);
      if (f > best_f) {
        best_f = f;
        best_psi = psi;
      }
      if (t >= iters) break;
      const CVector grad = 2.0 * (dual * psi);
      CVector dir = grad - cplx(psi.dot(grad).real(), 0.0) * psi;
      if (dir.norm() < 1e-14) break;  // stationary
      const double eta = std::max(step0 * std::pow(0.98, t), 0.01);
      psi = psi + eta * dir;
      psi.normalize();
    }
    // Polish: jump to the top eigenvector of the dual certificate. Each jump
    // maximizes the linearization tr(S Delta(rho)) exactly, so the objective
    // is non-decreasing; near-flat optima (where the gradient scale
    // collapses) converge in a handful of jumps.
    for (int t = 0; t < iters; ++t) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{
          Eigen::MatrixXcd(dual)};
      const CVector cand = es.eigenvectors().col(dn - 1);
      CMatrix cand_dual;
      const double cand_f = eval_objective(prob, cand, &cand_dual);
      if (cand_f > best_f) {
        best_f = cand_f;
        best_psi = cand;
      }
      if (cand_f <= f + 1e-15) break;
      f = cand_f;
      dual = std::move(cand_dual);
    }
  }

  // certify by exact evaluation on the unscaled delta
  AscentProblem exact;
  exact.lv = Eigen::MatrixXcd(delta.liouville);
  exact.lv_adj = exact.lv;  // unused
  exact.d = d;
  exact.n = n;
  const double f_exact = eval_objective(exact, best_psi, nullptr);
  res.value = f_exact;
  res.certified_lower_bound = f_exact;
  res.witness = best_psi;
  return res;
}

double halton(long index, int base) {
  double f = 1.0, r = 0.0;
  long i = index;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

}  // namespace

SuperoperatorDelta delta_from_liouville(CMatrix liouville, std::string tag) {
  if (liouville.rows() != liouville.cols() || liouville.rows() == 0) {
    throw DimensionError("superoperator delta: Liouville matrix not square");
  }
  if (!is_finite(liouville)) {
    throw ValidationError("superoperator delta: non-finite entries");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(
      std::llround(std::sqrt(static_cast<double>(liouville.rows()))));
  if (d * d != liouville.rows()) {
    throw DimensionError(
        "superoperator delta: Liouville side is not a perfect square");
  }
  const CMatrix choi = liouville_to_choi(liouville, d, d);
  const double dev = max_abs_diff(choi, dagger(choi));
  if (dev > 1e-10 * (1.0 + max_abs(choi))) {
    std::ostringstream os;
    os << "superoperator delta: not Hermiticity-preserving "
       << "(Choi asymmetry " << dev << ")";
    throw ValidationError(os.str());
  }
  return SuperoperatorDelta{d, std::move(liouville), std::move(tag)};
}

SuperoperatorDelta delta_between(const QuantumChannel& a,
                                 const QuantumChannel& b, std::string tag) {
  if (a.dim_in != a.dim_out || b.dim_in != b.dim_out ||
      a.dim_in != b.dim_in) {
    throw DimensionError(
        "delta_between: channels must be square maps on the same space");
  }
  return delta_from_liouville(a.liouville - b.liouville, std::move(tag));
}

CMatrix delta_apply(const SuperoperatorDelta& d, const CMatrix& x) {
  if (x.rows() != d.dim || x.cols() != d.dim) {
    throw DimensionError("delta_apply: operator dimension mismatch");
  }
  return unvec(CVector(Eigen::MatrixXcd(d.liouville) * vec(x)), d.dim, d.dim);
}

NormResult so_norm_sa(const SuperoperatorDelta& delta,
                      const OptBudget& budget) {
  // basis states make good deterministic seeds; diagonal deltas peak there
  std::vector<CVector> starts;
  for (Eigen::Index i = 0; i < delta.dim && i < budget.restarts; ++i) {
    starts.push_back(basis_state(delta.dim, i));
  }
  return run_ascent(delta, 1, budget, kSoSalt, starts);
}

NormResult diamond_norm(const SuperoperatorDelta& delta,
                        const OptBudget& budget) {
  const Eigen::Index d = delta.dim;

  // the embedded SO witness guarantees diamond >= so up to roundoff
  const NormResult so = so_norm_sa(delta, budget);

  CVector maxent = CVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    maxent(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  }
  CVector embedded = CVector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) embedded(i * d + 0) = so.witness(i);

  return run_ascent(delta, d, budget, kDiamondSalt, {maxent, embedded});
}

NormResult so_norm_bruteforce(const SuperoperatorDelta& delta,
                              long grid_points) {
  const Eigen::Index d = delta.dim;
  if (d > 4) {
    throw DimensionError("so_norm_bruteforce: only dims <= 4 are supported");
  }
  if (grid_points < 1 || grid_points > 10'000'000) {
    throw Error("so_norm_bruteforce: grid density out of range [1, 1e7]");
  }

  NormResult res;
  res.method = NormMethod::brute_force;
  const double scale = delta.liouville.norm();
  if (scale == 0.0) {
    res.witness = basis_state(d, 0);
    return res;
  }

  AscentProblem prob;
  prob.lv = Eigen::MatrixXcd(delta.liouville);
  prob.lv_adj = prob.lv;  // unused
  prob.d = d;
  prob.n = 1;

  double best = -1.0;
  CVector best_psi;
  CVector psi(d);
  if (d == 2) {
    // Fibonacci lattice on the Bloch sphere; global phase drops out
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    for (long k = 0; k < grid_points; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / static_cast<double>(grid_points);
      const double theta = std::acos(std::min(1.0, std::max(-1.0, z)));
      const double phi = golden_angle * static_cast<double>(k);
      psi(0) = cplx(std::cos(0.5 * theta), 0.0);
      psi(1) = std::polar(std::sin(0.5 * theta), phi);
      const double f = eval_objective(prob, psi, nullptr);
      if (f > best) {
        best = f;
        best_psi = psi;
      }
    }
  } else {
    // Halton-driven Gaussian points, deterministic and quasi-uniform on the
    // projective sphere after normalization
    static const int primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
    for (long k = 1; k <= grid_points; ++k) {
      for (Eigen::Index i = 0; i < d; ++i) {
        const double u1 =
            std::max(halton(k, primes[2 * i]), 1e-12);
        const double u2 = halton(k, primes[2 * i + 1]);
        const double r = std::sqrt(-2.0 * std::log(u1));
        psi(i) = std::polar(r, 2.0 * M_PI * u2);
      }
      psi.normalize();
      const double f = eval_objective(prob, psi, nullptr);
      if (f > best) {
        best = f;
        best_psi = psi;
      }
    }
  }
  res.value = best;
  res.certified_lower_bound = best;
  res.witness = best_psi;
  return res;
}

double povm_distinguishability(const QuantumChannel& p1,
                               const QuantumChannel& p2, int trials,
                               std::uint64_t seed) {
  if (p1.dim_in != p2.dim_in || p1.dim_out != p2.dim_out) {
    throw DimensionError("povm_distinguishability: channel dims differ");
  }
  const SuperoperatorDelta delta = delta_between(p1, p2);
  const Eigen::Index d = delta.dim;

  Rng rng(derive_seed(seed, kPovmSalt));
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CVector psi = random_pure_state(d, rng);
    const CMatrix rho = psi * psi.adjoint();
    CMatrix m = delta_apply(delta, rho);
    m = 0.5 * (m + CMatrix(m.adjoint()));
    const HermitianEigen eg = hermitian_eig(m);

    // optimal POVM for this input: the eigenprojectors of the difference
    const CMatrix out1 = apply_to_operator(p1, rho);
    const CMatrix out2 = apply_to_operator(p2, rho);
    double total = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      const CVector v = eg.eigenvectors.col(i);
      const cplx q1 = v.dot(CVector(out1 * v));
      const cplx q2 = v.dot(CVector(out2 * v));
      total += std::abs(q1.real() - q2.real());
    }
    const double direct = eg.eigenvalues.cwiseAbs().sum();
    if (std::abs(total - direct) > 1e-9 * (1.0 + direct)) {
      throw NumericalError(
          "povm_distinguishability: sandwich and spectral sums disagree");
    }
    best = std::max(best, total);
  }
  return best;
}

}  // namespace qcc
