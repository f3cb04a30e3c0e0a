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

#include "qcc/channel.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qcc {

namespace {

void check_kraus_dims(const std::vector<CMatrix>& ops) {
  if (ops.empty()) throw DimensionError("channel: empty Kraus set");
  const Eigen::Index r = ops.front().rows();
  const Eigen::Index c = ops.front().cols();
  if (r == 0 || c == 0) throw DimensionError("channel: empty Kraus operator");
  for (const CMatrix& k : ops) {
    if (k.rows() != r || k.cols() != c) {
      throw DimensionError("channel: mixed Kraus operator dimensions");
    }
    if (!is_finite(k)) {
      throw ValidationError("channel: non-finite Kraus entries");
    }
  }
}

// completeness defect sum_k K^dag K - I
double completeness_deviation(const std::vector<CMatrix>& ops) {
  const Eigen::Index din = ops.front().cols();
  CMatrix s = CMatrix::Zero(din, din);
  for (const CMatrix& k : ops) s += dagger(k) * k;
  return max_abs_diff(s, cidentity(din));
}

std::vector<CMatrix> renormalize_kraus(std::vector<CMatrix> ops) {
  const Eigen::Index din = ops.front().cols();
  CMatrix s = CMatrix::Zero(din, din);
  for (const CMatrix& k : ops) s += dagger(k) * k;
  const HermitianEigen eg = hermitian_eig(s);
  // s^{-1/2}
  CMatrix inv_sqrt = CMatrix::Zero(din, din);
  for (Eigen::Index i = 0; i < din; ++i) {
    const double lam = eg.eigenvalues(i);
    if (lam <= 0.0) {
      throw ValidationError("channel repair: completeness sum is singular");
    }
    inv_sqrt += (1.0 / std::sqrt(lam)) * eg.eigenvectors.col(i) *
                eg.eigenvectors.col(i).adjoint();
  }
  for (CMatrix& k : ops) k = k * inv_sqrt;
  return ops;
}

QuantumChannel finish_from_kraus(std::vector<CMatrix> ops) {
  QuantumChannel c;
  c.dim_out = ops.front().rows();
  c.dim_in = ops.front().cols();
  c.kraus = std::move(ops);
  c.choi = kraus_to_choi(c.kraus);
  c.liouville = kraus_to_liouville(c.kraus);
  return c;
}

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " must lie in [0, 1], got " << v;
    throw ValidationError(os.str());
  }
}

}  // namespace

CMatrix kraus_to_liouville(const std::vector<CMatrix>& ops) {
  check_kraus_dims(ops);
  const Eigen::Index dout = ops.front().rows();
  const Eigen::Index din = ops.front().cols();
  CMatrix l = CMatrix::Zero(dout * dout, din * din);
  for (const CMatrix& k : ops) l += kron(k.conjugate(), k);
  return l;
}

CMatrix kraus_to_choi(const std::vector<CMatrix>& ops) {
  check_kraus_dims(ops);
  const Eigen::Index dout = ops.front().rows();
  const Eigen::Index din = ops.front().cols();
  CMatrix c = CMatrix::Zero(din * dout, din * dout);
  for (const CMatrix& k : ops) {
    const CVector w = vec(k);  // w[i*dout + j] = K(j, i)
    c += w * w.adjoint();
  }
  return c;
}

CMatrix liouville_to_choi(const CMatrix& liouville, Eigen::Index dim_in,
                          Eigen::Index dim_out) {
  if (liouville.rows() != dim_out * dim_out ||
      liouville.cols() != dim_in * dim_in) {
    throw DimensionError("liouville_to_choi: shape mismatch");
  }
  // C[(i*dout + j), (k*dout + l)] = L[(l*dout + j), (k*din + i)]
  CMatrix c(dim_in * dim_out, dim_in * dim_out);
  for (Eigen::Index i = 0; i < dim_in; ++i)
    for (Eigen::Index j = 0; j < dim_out; ++j)
      for (Eigen::Index k = 0; k < dim_in; ++k)
        for (Eigen::Index l = 0; l < dim_out; ++l)
          c(i * dim_out + j, k * dim_out + l) =
              liouville(l * dim_out + j, k * dim_in + i);
  return c;
}

CMatrix choi_to_liouville(const CMatrix& choi, Eigen::Index dim_in,
                          Eigen::Index dim_out) {
  if (choi.rows() != dim_in * dim_out || choi.cols() != dim_in * dim_out) {
    throw DimensionError("choi_to_liouville: shape mismatch");
  }
  CMatrix l(dim_out * dim_out, dim_in * dim_in);
  for (Eigen::Index i = 0; i < dim_in; ++i)
    for (Eigen::Index j = 0; j < dim_out; ++j)
      for (Eigen::Index k = 0; k < dim_in; ++k)
        for (Eigen::Index l2 = 0; l2 < dim_out; ++l2)
          l(l2 * dim_out + j, k * dim_in + i) =
              choi(i * dim_out + j, k * dim_out + l2);
  return l;
}

QuantumChannel from_kraus(const std::vector<CMatrix>& ops,
                          const ChannelOptions& opts) {
  check_kraus_dims(ops);
  const double dev = completeness_deviation(ops);
  if (dev > kTpTol) {
    if (!opts.repair) {
      std::ostringstream os;
      os << "from_kraus: completeness sum deviates from identity by " << dev
         << " (tolerance " << kTpTol << ")";
      throw ValidationError(os.str());
    }
    return finish_from_kraus(renormalize_kraus(ops));
  }
  return finish_from_kraus(ops);
}

QuantumChannel choi_to_kraus(const CMatrix& choi, Eigen::Index dim_in,
                             Eigen::Index dim_out, const ChannelOptions& opts) {
  if (choi.rows() != dim_in * dim_out || choi.cols() != dim_in * dim_out) {
    throw DimensionError("choi_to_kraus: shape mismatch");
  }
  const HermitianEigen eg = hermitian_eig(choi);
  const double min_eig = eg.eigenvalues(0);
  if (min_eig < -kCpTol && !opts.repair) {
    std::ostringstream os;
    os << "choi_to_kraus: Choi matrix is not PSD (min eigenvalue " << min_eig
       << ")";
    throw ValidationError(os.str());
  }
  const CMatrix reduced =
      partial_trace(choi, dim_in, dim_out, Subsystem::B);
  const double tp_dev = max_abs_diff(reduced, cidentity(dim_in));
  if (tp_dev > kTpTol && !opts.repair) {
    std::ostringstream os;
    os << "choi_to_kraus: partial trace deviates from identity by " << tp_dev;
    throw ValidationError(os.str());
  }

  std::vector<CMatrix> ops;
  for (Eigen::Index r = eg.eigenvalues.size() - 1; r >= 0; --r) {
    const double lam = eg.eigenvalues(r);
    if (lam < kKrausDropTol) continue;
    const double coeff = std::sqrt(lam);
    CMatrix k(dim_out, dim_in);
    for (Eigen::Index i = 0; i < dim_in; ++i)
      for (Eigen::Index j = 0; j < dim_out; ++j)
        k(j, i) = coeff * eg.eigenvectors(i * dim_out + j, r);
    ops.push_back(std::move(k));
  }
  if (ops.empty()) {
    throw ValidationError("choi_to_kraus: all Choi eigenvalues below cutoff");
  }
  ChannelOptions inner = opts;
  return from_kraus(ops, inner);
}

QuantumChannel channel_from_liouville(const CMatrix& liouville,
                                      Eigen::Index dim_in,
                                      Eigen::Index dim_out,
                                      const ChannelOptions& opts) {
  return choi_to_kraus(liouville_to_choi(liouville, dim_in, dim_out), dim_in,
                       dim_out, opts);
}

CMatrix apply_to_operator(const QuantumChannel& c, const CMatrix& x) {
  if (x.rows() != c.dim_in || x.cols() != c.dim_in) {
    throw DimensionError("apply: operator dimension mismatch");
  }
  CMatrix out = CMatrix::Zero(c.dim_out, c.dim_out);
  for (const CMatrix& k : c.kraus) out += k * x * dagger(k);
  return out;
}

DensityMatrix density_matrix(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("density_matrix: not square");
  }
  if (!is_hermitian(m, 1e-10)) {
    throw ValidationError("density_matrix: not Hermitian within 1e-10");
  }
  const double tr_dev = std::abs(m.trace() - cplx(1.0, 0.0));
  if (tr_dev > 1e-10) {
    std::ostringstream os;
    os << "density_matrix: trace deviates from 1 by " << tr_dev;
    throw ValidationError(os.str());
  }
  const HermitianEigen eg = hermitian_eig(m);
  if (eg.eigenvalues(0) < -1e-10) {
    std::ostringstream os;
    os << "density_matrix: negative eigenvalue " << eg.eigenvalues(0);
    throw ValidationError(os.str());
  }
  return DensityMatrix{m.rows(), m};
}

DensityMatrix pure_state(const CVector& psi) {
  const double n = psi.norm();
  if (!(std::abs(n - 1.0) <= 1e-9)) {
    std::ostringstream os;
    os << "pure_state: vector norm " << n << " is not 1 within 1e-9";
    throw ValidationError(os.str());
  }
  CMatrix m = psi * psi.adjoint();
  return DensityMatrix{psi.size(), std::move(m)};
}

DensityMatrix apply(const QuantumChannel& c, const DensityMatrix& rho) {
  if (rho.dim != c.dim_in) {
    throw DimensionError("apply: state dimension mismatch");
  }
  return density_matrix(apply_to_operator(c, rho.matrix));
}

Povm make_povm(std::vector<std::string> outcomes,
               std::vector<CMatrix> effects) {
  if (outcomes.size() != effects.size() || outcomes.empty()) {
    throw DimensionError("povm: outcome/effect count mismatch");
  }
  const Eigen::Index d = effects.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const CMatrix& e = effects[i];
    if (e.rows() != d || e.cols() != d) {
      throw DimensionError("povm: mixed effect dimensions");
    }
    const HermitianEigen eg = hermitian_eig(e);
    if (eg.eigenvalues(0) < -1e-10) {
      std::ostringstream os;
      os << "povm: effect '" << outcomes[i] << "' has negative eigenvalue "
         << eg.eigenvalues(0);
      throw ValidationError(os.str());
    }
    sum += e;
  }
  const double dev = max_abs_diff(sum, cidentity(d));
  if (dev > 1e-9) {
    std::ostringstream os;
    os << "povm: effects sum deviates from identity by " << dev;
    throw ValidationError(os.str());
  }
  return Povm{std::move(outcomes), std::move(effects)};
}

Povm computational_readout(std::vector<std::string> labels) {
  const Eigen::Index d = static_cast<Eigen::Index>(labels.size());
  std::vector<CMatrix> effects;
  for (Eigen::Index i = 0; i < d; ++i) effects.push_back(matrix_unit(d, i, i));
  return make_povm(std::move(labels), std::move(effects));
}

std::vector<CMatrix> povm_sqrt(const Povm& p) {
  std::vector<CMatrix> roots;
  roots.reserve(p.effects.size());
  for (std::size_t i = 0; i < p.effects.size(); ++i) {
    const HermitianEigen eg = hermitian_eig(p.effects[i]);
    if (eg.eigenvalues(0) < -1e-10) {
      std::ostringstream os;
      os << "povm_sqrt: effect '" << p.outcomes[i]
         << "' is not PSD within tolerance";
      throw ValidationError(os.str());
    }
    const Eigen::Index d = p.effects[i].rows();
    CMatrix root = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
      const double lam = std::max(eg.eigenvalues(k), 0.0);
      root += std::sqrt(lam) * eg.eigenvectors.col(k) *
              eg.eigenvectors.col(k).adjoint();
    }
    roots.push_back(std::move(root));
  }
  return roots;
}

QuantumChannel compose(const QuantumChannel& after,
                       const QuantumChannel& before) {
  if (before.dim_out != after.dim_in) {
    std::ostringstream os;
    os << "compose: inner dimensions do not chain (" << before.dim_out
       << " -> " << after.dim_in << ")";
    throw DimensionError(os.str());
  }
  std::vector<CMatrix> ops;
  ops.reserve(after.kraus.size() * before.kraus.size());
  for (const CMatrix& a : after.kraus)
    for (const CMatrix& b : before.kraus) ops.push_back(a * b);
  return finish_from_kraus(std::move(ops));
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<CMatrix> ops;
  ops.reserve(a.kraus.size() * b.kraus.size());
  for (const CMatrix& ka : a.kraus)
    for (const CMatrix& kb : b.kraus) ops.push_back(kron(ka, kb));
  return finish_from_kraus(std::move(ops));
}

QuantumChannel identity_channel(Eigen::Index dim) {
  return from_kraus({cidentity(dim)});
}

QuantumChannel unitary_channel(const CMatrix& u) {
  if (!is_unitary(u, 1e-10)) {
    throw ValidationError("unitary_channel: matrix is not unitary within 1e-10");
  }
  return from_kraus({u});
}

QuantumChannel bit_flip(double q) {
  check_probability(q, "bit_flip q");
  std::vector<CMatrix> ops;
  if (q < 1.0) ops.push_back(std::sqrt(1.0 - q) * cidentity(2));
  if (q > 0.0) ops.push_back(std::sqrt(q) * pauli_x());
  return from_kraus(ops);
}

QuantumChannel phase_flip(double q) {
  check_probability(q, "phase_flip q");
  std::vector<CMatrix> ops;
  if (q < 1.0) ops.push_back(std::sqrt(1.0 - q) * cidentity(2));
  if (q > 0.0) ops.push_back(std::sqrt(q) * pauli_z());
  return from_kraus(ops);
}

QuantumChannel depolarizing(double p) {
  check_probability(p, "depolarizing p");
  std::vector<CMatrix> ops;
  if (p < 4.0 / 3.0)
    ops.push_back(std::sqrt(1.0 - 0.75 * p) * cidentity(2));
  if (p > 0.0) {
    ops.push_back(std::sqrt(0.25 * p) * pauli_x());
    ops.push_back(std::sqrt(0.25 * p) * pauli_y());
    ops.push_back(std::sqrt(0.25 * p) * pauli_z());
  }
  return from_kraus(ops);
}

QuantumChannel completely_depolarizing(Eigen::Index dim) {
  if (dim <= 0) throw DimensionError("completely_depolarizing: dim <= 0");
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<CMatrix> ops;
  ops.reserve(dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      ops.push_back(s * matrix_unit(dim, i, j));
  return from_kraus(ops);
}

QuantumChannel amplitude_damping(double gamma) {
  check_probability(gamma, "amplitude_damping gamma");
  CMatrix k0(2, 2), k1(2, 2);
  k0 << cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(std::sqrt(1.0 - gamma), 0);
  k1 << cplx(0, 0), cplx(std::sqrt(gamma), 0), cplx(0, 0), cplx(0, 0);
  std::vector<CMatrix> ops{k0};
  if (gamma > 0.0) ops.push_back(k1);
  return from_kraus(ops);
}

QuantumChannel iid_noise(const QuantumChannel& c, int copies) {
  if (copies < 1) throw DimensionError("iid_noise: copies < 1");
  QuantumChannel out = c;
  for (int i = 1; i < copies; ++i) out = tensor(out, c);
  return out;
}

QuantumChannel random_channel(Eigen::Index dim, int kraus_count, Rng& rng) {
  if (dim <= 0 || kraus_count < 1) {
    throw DimensionError("random_channel: bad dimensions");
  }
  // thin QR of a Gaussian block column gives a Haar isometry; its dim x dim
  // blocks are a complete Kraus set
  const Eigen::Index rows = dim * kraus_count;
  Eigen::MatrixXcd g(rows, dim);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = rng.normal_cplx();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd v =
      qr.householderQ() * Eigen::MatrixXcd::Identity(rows, dim);
  std::vector<CMatrix> ops;
  ops.reserve(kraus_count);
  for (int k = 0; k < kraus_count; ++k) {
    ops.push_back(CMatrix(v.block(k * dim, 0, dim, dim)));
  }
  return from_kraus(ops);
}

LinkingMapPair make_linking_pair(QuantumChannel encode, QuantumChannel decode) {
  if (encode.dim_out != decode.dim_in || encode.dim_in != decode.dim_out) {
    throw DimensionError(
        "linking maps: encode/decode dimensions do not chain");
  }
  return LinkingMapPair{std::move(encode), std::move(decode)};
}

LinkingMapPair trivial_links(Eigen::Index dim) {
  return LinkingMapPair{identity_channel(dim), identity_channel(dim)};
}

LinkingMapPair repetition_code_pair() {
  // encoding isometry, |0> -> |000>, |1> -> |111>
  CMatrix v = CMatrix::Zero(8, 2);
  v(0, 0) = 1.0;
  v(7, 1) = 1.0;
  QuantumChannel encode = from_kraus({v});

  // decode Kraus set: un-encode after each correctable flip,
  // D_e = V^dag X_e with X_e in {III, XII, IXI, IIX}
  const CMatrix x = pauli_x();
  const CMatrix i2 = cidentity(2);
  const std::vector<CMatrix> corrections = {
      kron(kron(i2, i2), i2),
      kron(kron(x, i2), i2),
      kron(kron(i2, x), i2),
      kron(kron(i2, i2), x),
  };
  std::vector<CMatrix> ops;
  ops.reserve(corrections.size());
  for (const CMatrix& c : corrections) ops.push_back(dagger(v) * c);
  QuantumChannel decode = from_kraus(ops);

  return make_linking_pair(std::move(encode), std::move(decode));
}

}  // namespace qcc
