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

#include "qcc/matrix.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qcc {

namespace {

void require_square(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << who << ": expected a nonempty square matrix, got " << m.rows() << "x"
       << m.cols();
    throw DimensionError(os.str());
  }
}

double entry_tol(const CMatrix& m, double tol) {
  return tol * (1.0 + max_abs(m));
}

}  // namespace

CMatrix czeros(Eigen::Index rows, Eigen::Index cols) {
  return CMatrix::Zero(rows, cols);
}

CMatrix cidentity(Eigen::Index n) { return CMatrix::Identity(n, n); }

CMatrix matrix_unit(Eigen::Index dim, Eigen::Index i, Eigen::Index j) {
  CMatrix e = CMatrix::Zero(dim, dim);
  e(i, j) = cplx(1.0, 0.0);
  return e;
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0);
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0);
  return m;
}

bool is_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const cplx v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, dagger(m)) <= entry_tol(m, tol);
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const CMatrix g = dagger(m) * m;
  return max_abs_diff(g, cidentity(m.rows())) <= entry_tol(m, tol);
}

double one_norm(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    best = std::max(best, m.col(j).cwiseAbs().sum());
  }
  return best;
}

CVector vec(const CMatrix& m) {
  CVector v(m.rows() * m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionError("unvec: length does not match requested shape");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix partial_trace(const CMatrix& m, Eigen::Index dim_a, Eigen::Index dim_b,
                      Subsystem which) {
  if (dim_a <= 0 || dim_b <= 0 || m.rows() != m.cols() ||
      m.rows() != dim_a * dim_b) {
    std::ostringstream os;
    os << "partial_trace: matrix side " << m.rows()
       << " does not factor as " << dim_a << "*" << dim_b;
    throw DimensionError(os.str());
  }
  if (which == Subsystem::B) {
    CMatrix out = CMatrix::Zero(dim_a, dim_a);
    for (Eigen::Index a = 0; a < dim_a; ++a)
      for (Eigen::Index ap = 0; ap < dim_a; ++ap)
        for (Eigen::Index b = 0; b < dim_b; ++b)
          out(a, ap) += m(a * dim_b + b, ap * dim_b + b);
    return out;
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index b = 0; b < dim_b; ++b)
    for (Eigen::Index bp = 0; bp < dim_b; ++bp)
      for (Eigen::Index a = 0; a < dim_a; ++a)
        out(b, bp) += m(a * dim_b + b, a * dim_b + bp);
  return out;
}

HermitianEigen hermitian_eig(const CMatrix& m) {
  require_square(m, "hermitian_eig");
  if (!is_finite(m)) throw ValidationError("hermitian_eig: non-finite entries");
  const double dev = max_abs_diff(m, dagger(m));
  if (dev > entry_tol(m, 1e-10)) {
    std::ostringstream os;
    os << "hermitian_eig: input is not Hermitian (max deviation " << dev
       << ")";
    throw ValidationError(os.str());
  }
  const CMatrix sym = 0.5 * (m + dagger(m));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
  if (es.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver failed to converge");
  }
  HermitianEigen out;
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  return out;
}

double trace_norm(const CMatrix& m) {
  require_square(m, "trace_norm");
  if (is_hermitian(m)) {
    return hermitian_eig(m).eigenvalues.cwiseAbs().sum();
  }
  const CMatrix gram = dagger(m) * m;
  const HermitianEigen eg = hermitian_eig(gram);
  return eg.eigenvalues.cwiseMax(0.0).cwiseSqrt().sum();
}

CMatrix matrix_exp(const CMatrix& m) {
  require_square(m, "matrix_exp");
  if (!is_finite(m)) throw ValidationError("matrix_exp: non-finite entries");

  // Pade-13 coefficients (Higham 2005), theta_13 switching radius.
  static const double b[] = {64764752532480000.0,
                             32382376266240000.0,
                             7771770303897600.0,
                             1187353796428800.0,
                             129060195264000.0,
                             10559470521600.0,
                             670442572800.0,
                             33522128640.0,
                             1323241920.0,
                             40840800.0,
                             960960.0,
                             16380.0,
                             182.0,
                             1.0};
  const double theta13 = 5.371920351148152;

  const Eigen::Index n = m.rows();
  const double norm = one_norm(m);
  if (norm == 0.0) return cidentity(n);
  int squarings = 0;
  CMatrix a = m;
  if (norm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    a = m * std::pow(2.0, -squarings);
  }

  const CMatrix eye = cidentity(n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a2 * a4;
  const CMatrix u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * eye);
  const CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                    b[4] * a4 + b[2] * a2 + b[0] * eye;

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(Eigen::MatrixXcd(v - u));
  CMatrix r = lu.solve(Eigen::MatrixXcd(v + u));
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  require_square(a, "solve");
  if (a.rows() != b.rows()) {
    throw DimensionError("solve: right-hand side row count mismatch");
  }
  if (!is_finite(a) || !is_finite(b)) {
    throw ValidationError("solve: non-finite entries");
  }

  Eigen::FullPivLU<Eigen::MatrixXcd> lu{Eigen::MatrixXcd(a)};
  // full pivoting orders the U diagonal by decreasing magnitude; the pivot
  // ratio is a cheap condition estimate
  const Eigen::Index n = a.rows();
  const double pivot_max = std::abs(lu.matrixLU()(0, 0));
  const double pivot_min = std::abs(lu.matrixLU()(n - 1, n - 1));
  const double cond_est = (pivot_min > 0.0)
                              ? pivot_max / pivot_min
                              : std::numeric_limits<double>::infinity();
  if (pivot_max == 0.0 || !(cond_est < 1e12)) {
    std::ostringstream os;
    os << "solve: matrix is singular or ill-conditioned (condition estimate "
       << cond_est << ")";
    throw NumericalError(os.str());
  }

  CMatrix x = lu.solve(Eigen::MatrixXcd(b));
  const double bnorm = b.norm();
  double resid = (a * x - b).norm();
  // negated comparisons so NaN residuals cannot slip through
  if (!(resid <= 1e-9 * bnorm)) {
    // one pass of iterative refinement
    x += CMatrix(lu.solve(Eigen::MatrixXcd(b - a * x)));
    resid = (a * x - b).norm();
    if (!(resid <= 1e-9 * bnorm) || !is_finite(x)) {
      std::ostringstream os;
      os << "solve: residual " << resid << " exceeds 1e-9 * ||b|| = "
         << 1e-9 * bnorm;
      throw NumericalError(os.str());
    }
  }
  return x;
}

}  // namespace qcc
