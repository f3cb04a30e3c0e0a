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

#pragma once

#include <string>
#include <vector>

#include "qcc/matrix.hpp"
#include "qcc/random.hpp"

namespace qcc {

// Validation tolerances shared by all channel constructors.
inline constexpr double kTpTol = 1e-9;    // trace preservation, per entry
inline constexpr double kCpTol = 1e-10;   // Choi minimum eigenvalue
inline constexpr double kKrausDropTol = 1e-10;  // Choi eigenvalues kept

struct ChannelOptions {
  // When set, inputs that fail CP/TP by less than the tolerances are
  // projected back (eigenvalue clamping plus completeness renormalization)
  // instead of rejected. Off by default: silent repair hides modeling
  // errors.
  bool repair = false;
};

//=========================================================================
// Quantum channel: Kraus canonical, Choi and Liouville cached
//=========================================================================

// A completely positive trace-preserving map held in all three standard
// representations. The Kraus set is canonical; choi and liouville are
// derived from it at construction and kept consistent.
//
// Conventions (fixed globally):
//   vec        column stacking, vec(m)[i + j*rows] = m(i,j)
//   liouville  sum_k conj(K_k) (x) K_k, shape dim_out^2 x dim_in^2
//   choi       sum_k vec(K_k) vec(K_k)^dag on H_in (x) H_out,
//              index (i*dim_out + j) <-> input i, output j
struct QuantumChannel {
  Eigen::Index dim_in = 0;
  Eigen::Index dim_out = 0;
  std::vector<CMatrix> kraus;  // each dim_out x dim_in
  CMatrix choi;                // (dim_in*dim_out) square
  CMatrix liouville;           // dim_out^2 x dim_in^2
};

// Build a channel from a Kraus set (rectangular operators allowed).
// Rejects mixed dimensions and completeness violations beyond kTpTol.
QuantumChannel from_kraus(const std::vector<CMatrix>& ops,
                          const ChannelOptions& opts = {});

// Recover a Kraus set from a Choi matrix by eigendecomposition; eigenvalues
// below kKrausDropTol are dropped. CP/TP are validated first.
QuantumChannel choi_to_kraus(const CMatrix& choi, Eigen::Index dim_in,
                             Eigen::Index dim_out,
                             const ChannelOptions& opts = {});

// Build a channel from its Liouville matrix (goes through the Choi form).
QuantumChannel channel_from_liouville(const CMatrix& liouville,
                                      Eigen::Index dim_in,
                                      Eigen::Index dim_out,
                                      const ChannelOptions& opts = {});

// Representation conversions (no validation).
CMatrix kraus_to_liouville(const std::vector<CMatrix>& ops);
CMatrix kraus_to_choi(const std::vector<CMatrix>& ops);
CMatrix liouville_to_choi(const CMatrix& liouville, Eigen::Index dim_in,
                          Eigen::Index dim_out);
CMatrix choi_to_liouville(const CMatrix& choi, Eigen::Index dim_in,
                          Eigen::Index dim_out);

// Raw channel action on an operator (no density-matrix validation).
CMatrix apply_to_operator(const QuantumChannel& c, const CMatrix& x);

//=========================================================================
// States and measurements
//=========================================================================

struct DensityMatrix {
  Eigen::Index dim = 0;
  CMatrix matrix;
};

// Validates hermiticity (1e-10), unit trace (1e-10) and positivity
// (min eigenvalue >= -1e-10).
DensityMatrix density_matrix(const CMatrix& m);

// |psi><psi| from a normalized state vector.
DensityMatrix pure_state(const CVector& psi);

DensityMatrix apply(const QuantumChannel& c, const DensityMatrix& rho);

struct Povm {
  std::vector<std::string> outcomes;
  std::vector<CMatrix> effects;
};

// Validates PSD effects (min eigenvalue >= -1e-10) and closure
// sum_y E_y = I within 1e-9 per entry.
Povm make_povm(std::vector<std::string> outcomes, std::vector<CMatrix> effects);

// Projective readout in the computational basis with the given labels.
Povm computational_readout(std::vector<std::string> labels);

// Principal square roots of the effects, by Hermitian eigendecomposition
// with negative eigenvalues clamped at zero.
std::vector<CMatrix> povm_sqrt(const Povm& p);

//=========================================================================
// Channel algebra
//=========================================================================

// after o before; Kraus set is the pairwise product set.
QuantumChannel compose(const QuantumChannel& after,
                       const QuantumChannel& before);

// a (x) b; Kraus set is all Kronecker pairs.
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

//=========================================================================
// Builders
//=========================================================================

QuantumChannel identity_channel(Eigen::Index dim);
QuantumChannel unitary_channel(const CMatrix& u);
QuantumChannel bit_flip(double q);
QuantumChannel phase_flip(double q);
QuantumChannel depolarizing(double p);
QuantumChannel completely_depolarizing(Eigen::Index dim);
QuantumChannel amplitude_damping(double gamma);
QuantumChannel iid_noise(const QuantumChannel& c, int copies);

// Random CPTP map via a Haar isometry with kraus_count Kraus operators.
QuantumChannel random_channel(Eigen::Index dim, int kraus_count, Rng& rng);

//=========================================================================
// Linking maps between logical and computational spaces
//=========================================================================

struct LinkingMapPair {
  QuantumChannel encode;  // dim_logical -> dim_comp
  QuantumChannel decode;  // dim_comp -> dim_logical
};

LinkingMapPair make_linking_pair(QuantumChannel encode, QuantumChannel decode);

// Identity links on one space (dim_comp == dim_logical).
LinkingMapPair trivial_links(Eigen::Index dim);

// Three-qubit repetition code: encode is the isometry |0> -> |000>,
// |1> -> |111|; decode applies majority-vote correction and un-encodes.
// Both members are exactly CPTP.
LinkingMapPair repetition_code_pair();

}  // namespace qcc
