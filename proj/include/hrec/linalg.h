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

// Dense complex linear algebra for the small fixed dimensions used by the
// simulator (qubit = 2, qubit plus leakage level = 3, two qubits = 4).

#ifndef HREC_LINALG_H_
#define HREC_LINALG_H_

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace hrec {

using Complex = std::complex<double>;

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 4;

// Default tolerances. Every function that compares against one of these takes
// it as a defaulted argument so callers can tighten or relax it.
inline constexpr double kValidationTol = 1e-9;
inline constexpr double kAssertionTol = 1e-10;
inline constexpr double kEqualityTol = 1e-12;

// Eigenvalues of a PSD input in [-kPsdClampTol, 0] are treated as zero.
inline constexpr double kPsdClampTol = 1e-10;

// Throws DimensionError unless kMinDim <= dim <= kMaxDim.
void CheckDim(int dim);

class ComplexVector {
 public:
  explicit ComplexVector(int dim);
  ComplexVector(std::initializer_list<Complex> entries);

  // Unit vector |k> of the given dimension.
  static ComplexVector Basis(int dim, int k);

  int dim() const { return dim_; }
  Complex& operator[](int i) { return data_[i]; }
  const Complex& operator[](int i) const { return data_[i]; }

  double norm() const;
  ComplexVector normalized() const;
  // <this|other>
  Complex dot(const ComplexVector& other) const;

  ComplexVector& operator*=(Complex s);
  friend ComplexVector operator*(Complex s, ComplexVector v) { return v *= s; }
  friend ComplexVector operator+(const ComplexVector& a,
                                 const ComplexVector& b);

 private:
  int dim_;
  std::array<Complex, kMaxDim> data_{};
};

class ComplexMatrix {
 public:
  // Zero matrix.
  explicit ComplexMatrix(int dim);
  // Row-major nested list; must be square.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix Identity(int dim);
  static ComplexMatrix Diagonal(std::initializer_list<Complex> diag);
  // |u><v|
  static ComplexMatrix Outer(const ComplexVector& u, const ComplexVector& v);
  // |k><l| in the given dimension.
  static ComplexMatrix Unit(int dim, int k, int l);

  int dim() const { return dim_; }
  Complex& operator()(int r, int c) { return data_[r * kMaxDim + c]; }
  const Complex& operator()(int r, int c) const {
    return data_[r * kMaxDim + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  // Largest |entry|.
  double max_abs() const;
  // ||A - A^dagger||_F
  double hermiticity_defect() const;
  // ||A^dagger A - I||_F
  double unitarity_defect() const;

  // Entrywise |a_jk - b_jk| <= tol. Dimensions must agree.
  bool approx_equal(const ComplexMatrix& other,
                    double tol = kEqualityTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a,
                                 const ComplexVector& v);

 private:
  int dim_;
  std::array<Complex, kMaxDim * kMaxDim> data_{};
};

// A B A^dagger
ComplexMatrix Conjugate(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

// Cyclic Jacobi diagonalization. The input is symmetrized as (H + H^dagger)/2
// after checking ||H - H^dagger||_F <= hermiticity_tol.
HermitianEigen HermitianEig(const ComplexMatrix& h,
                            double hermiticity_tol = kValidationTol);

// Hermitian PSD square root S with S S = P. Eigenvalues below -clamp_tol
// raise NotPsdError.
ComplexMatrix PsdSqrt(const ComplexMatrix& p,
                      double hermiticity_tol = kValidationTol,
                      double clamp_tol = kPsdClampTol);

// Singular values (descending) by one-sided Jacobi. Small singular values are
// accurate in absolute terms, unlike sqrt(eig(A^dagger A)).
std::vector<double> SingularValues(const ComplexMatrix& a);

// Sum of |eigenvalues| of a Hermitian matrix (trace norm).
double TraceNorm(const ComplexMatrix& h,
                 double hermiticity_tol = kValidationTol);

}  // namespace hrec

#endif  // HREC_LINALG_H_
