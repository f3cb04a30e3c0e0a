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

#include <complex>

#include <Eigen/Dense>

#include "qcc/errors.hpp"

namespace qcc {

using cplx = std::complex<double>;

// Dense complex matrix, row-major storage. States, operators and
// superoperator matrices are all carried by this one type.
using CMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

//=========================================================================
// Construction helpers
//=========================================================================

CMatrix czeros(Eigen::Index rows, Eigen::Index cols);
CMatrix cidentity(Eigen::Index n);

// Matrix unit E_ij = |i><j| on C^dim.
CMatrix matrix_unit(Eigen::Index dim, Eigen::Index i, Eigen::Index j);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

inline CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

//=========================================================================
// Predicates and scalar reductions
//=========================================================================

bool is_finite(const CMatrix& m);
double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Per-entry tolerance scaled by the matrix magnitude, tol * (1 + max|entry|).
bool is_hermitian(const CMatrix& m, double tol = 1e-10);
bool is_unitary(const CMatrix& m, double tol = 1e-10);

// Maximum column sum of absolute values (the induced 1-norm).
double one_norm(const CMatrix& m);

//=========================================================================
// Vectorization (column stacking, fixed globally)
//=========================================================================

// vec(m)[i + j*rows] = m(i, j)
CVector vec(const CMatrix& m);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

//=========================================================================
// Core operations
//=========================================================================

// Kronecker product, dims (a.rows*b.rows) x (a.cols*b.cols).
CMatrix kron(const CMatrix& a, const CMatrix& b);

enum class Subsystem { A, B };

// Trace over one factor of C^dim_a (x) C^dim_b; m must be square with side
// dim_a*dim_b. Output side is the dimension of the surviving subsystem.
CMatrix partial_trace(const CMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b,
                      Subsystem which);

struct HermitianEigen {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // unitary, columns matching eigenvalues
};

// Spectral decomposition of a Hermitian matrix. Inputs within the scaled
// hermiticity tolerance are symmetrized as (m + m^dag)/2; anything further
// off is rejected rather than silently decomposed.
HermitianEigen hermitian_eig(const CMatrix& m);

// Schatten-1 norm: sum of singular values. Hermitian inputs go through
// hermitian_eig; otherwise singular values come from the eigenvalues of
// m^dag m with negatives clamped at zero.
double trace_norm(const CMatrix& m);

// exp(m) by scaling-and-squaring with a degree-13 Pade approximant.
CMatrix matrix_exp(const CMatrix& m);

// Solve a*x = b for square nonsingular a. Rejects condition estimates above
// 1e12 and enforces a residual of at most 1e-9 * ||b||_F (one refinement
// pass is attempted first).
CMatrix solve(const CMatrix& a, const CMatrix& b);

}  // namespace qcc
