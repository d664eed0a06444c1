// Copyright 2026 The hrec Authors
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

#include "hrec/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hrec/errors.h"

namespace hrec {

namespace {

constexpr int kMaxJacobiSweeps = 100;

}  // namespace

void CheckDim(int dim) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw DimensionError("unsupported dimension " + std::to_string(dim) +
                         " (expected 2..4)");
  }
}

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(int dim) : dim_(dim) { CheckDim(dim); }

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : dim_(static_cast<int>(entries.size())) {
  CheckDim(dim_);
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexVector ComplexVector::Basis(int dim, int k) {
  ComplexVector v(dim);
  if (k < 0 || k >= dim) throw DimensionError("basis index out of range");
  v[k] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::norm(data_[i]);
  return std::sqrt(s);
}

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  ComplexVector out = *this;
  out *= 1.0 / n;
  return out;
}

Complex ComplexVector::dot(const ComplexVector& other) const {
  if (other.dim_ != dim_) throw DimensionError("dot: dimension mismatch");
  Complex s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::conj(data_[i]) * other.data_[i];
  return s;
}

ComplexVector& ComplexVector::operator*=(Complex s) {
  for (int i = 0; i < dim_; ++i) data_[i] *= s;
  return *this;
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim_ != b.dim_) throw DimensionError("vector +: dimension mismatch");
  ComplexVector out = a;
  for (int i = 0; i < a.dim_; ++i) out.data_[i] += b.data_[i];
  return out;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { CheckDim(dim); }

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
  CheckDim(dim_);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) {
      throw DimensionError("matrix literal is not square");
    }
    int c = 0;
    for (const Complex& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

ComplexMatrix ComplexMatrix::Identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::Diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix m(static_cast<int>(diag.size()));
  int i = 0;
  for (const Complex& v : diag) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::Outer(const ComplexVector& u,
                                   const ComplexVector& v) {
  if (u.dim() != v.dim()) throw DimensionError("outer: dimension mismatch");
  ComplexMatrix m(u.dim());
  for (int r = 0; r < u.dim(); ++r) {
    for (int c = 0; c < u.dim(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::Unit(int dim, int k, int l) {
  ComplexMatrix m(dim);
  if (k < 0 || k >= dim || l < 0 || l >= dim) {
    throw DimensionError("unit matrix index out of range");
  }
  m(k, l) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) s += std::norm((*this)(r, c));
  }
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) m = std::max(m, std::abs((*this)(r, c)));
  }
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  return (*this - adjoint()).frobenius_norm();
}

double ComplexMatrix::unitarity_defect() const {
  return (adjoint() * *this - Identity(dim_)).frobenius_norm();
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  if (other.dim_ != dim_) throw DimensionError("compare: dimension mismatch");
  return (*this - other).max_abs() <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("+: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("-: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("*: dimension mismatch");
  ComplexMatrix out(a.dim_);
  for (int r = 0; r < a.dim_; ++r) {
    for (int k = 0; k < a.dim_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0)) continue;
      for (int c = 0; c < a.dim_; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.dim() != v.dim()) throw DimensionError("M*v: dimension mismatch");
  ComplexVector out(v.dim());
  for (int r = 0; r < a.dim(); ++r) {
    Complex s = 0.0;
    for (int c = 0; c < a.dim(); ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexMatrix Conjugate(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b * a.adjoint();
}

// ---------------------------------------------------------------------------
// Eigen / sqrt / SVD

HermitianEigen HermitianEig(const ComplexMatrix& h, double hermiticity_tol) {
  const int n = h.dim();
  if (h.hermiticity_defect() > hermiticity_tol) {
    throw ValidationError("hermitian_eig: matrix is not Hermitian");
  }
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= std::numeric_limits<double>::epsilon() * scale) {
      break;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq == 0.0) continue;
        // Phase-rotate column q so that a(p,q) is real, then apply the real
        // symmetric Jacobi rotation.
        const Complex phase = a(p, q) / apq;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        ComplexMatrix j = ComplexMatrix::Identity(n);
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * std::conj(phase);
        j(q, q) = c * std::conj(phase);
        a = j.adjoint() * a * j;
        v = v * j;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a(x, x).real() < a(y, y).real();
  });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix PsdSqrt(const ComplexMatrix& p, double hermiticity_tol,
                      double clamp_tol) {
  const HermitianEigen eig = HermitianEig(p, hermiticity_tol);
  const int n = p.dim();
  double largest = 0.0;
  for (double l : eig.eigenvalues) largest = std::max(largest, std::abs(l));
  // Below this the eigenvalue is rounding noise from the solver.
  const double resolution =
      8.0 * n * std::numeric_limits<double>::epsilon() * largest;

  ComplexMatrix s(n);
  for (int k = 0; k < n; ++k) {
    double l = eig.eigenvalues[k];
    if (l < -clamp_tol) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(l) +
                        " below clamp window");
    }
    if (l <= resolution) continue;
    const double root = std::sqrt(l);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        s(r, c) += root * eig.eigenvectors(r, k) *
                   std::conj(eig.eigenvectors(c, k));
      }
    }
  }
  return s;
}

std::vector<double> SingularValues(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix u = a;  // columns are orthogonalized in place
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (int r = 0; r < n; ++r) {
          alpha += std::norm(u(r, p));
          beta += std::norm(u(r, q));
          gamma += std::conj(u(r, p)) * u(r, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Complex phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int r = 0; r < n; ++r) {
          const Complex up = u(r, p);
          const Complex uq = u(r, q) * std::conj(phase);
          u(r, p) = c * up - s * uq;
          u(r, q) = s * up + c * uq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (int c = 0; c < n; ++c) {
    double s = 0.0;
    for (int r = 0; r < n; ++r) s += std::norm(u(r, c));
    sv[c] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double TraceNorm(const ComplexMatrix& h, double hermiticity_tol) {
  const HermitianEigen eig = HermitianEig(h, hermiticity_tol);
  double s = 0.0;
  for (double l : eig.eigenvalues) s += std::abs(l);
  return s;
}

}  // namespace hrec
