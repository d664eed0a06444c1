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

#include "hrec/states.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hrec/errors.h"

namespace hrec {

DensityMatrix::DensityMatrix(const ComplexMatrix& mat, double tol)
    : mat_(mat) {
  if (mat.hermiticity_defect() > tol) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (std::abs(mat.trace() - 1.0) > tol) {
    throw ValidationError("density matrix trace " +
                          std::to_string(mat.trace().real()) + " != 1");
  }
  if (min_eigenvalue() < -tol) {
    throw ValidationError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::Pure(const ComplexVector& psi) {
  if (std::abs(psi.norm() - 1.0) > kAssertionTol) {
    throw ValidationError("pure state is not normalized");
  }
  return DensityMatrix(ComplexMatrix::Outer(psi, psi));
}

DensityMatrix DensityMatrix::MaximallyMixed(int dim) {
  return DensityMatrix((1.0 / dim) * ComplexMatrix::Identity(dim));
}

double DensityMatrix::min_eigenvalue() const {
  return HermitianEig(mat_).eigenvalues.front();
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double BlochVector::component(int axis) const {
  switch (axis) {
    case 0: return x;
    case 1: return y;
    case 2: return z;
  }
  throw ValidationError("Bloch component index out of range");
}

BlochVector BlochFromRho(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("bloch_from_rho needs dim 2");
  return {2.0 * rho(0, 1).real(), 2.0 * rho(1, 0).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

DensityMatrix RhoFromBloch(const BlochVector& b, double tol) {
  if (b.norm() > 1.0 + tol) {
    throw ValidationError("Bloch vector longer than 1");
  }
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + b.z);
  m(1, 1) = 0.5 * (1.0 - b.z);
  m(0, 1) = Complex(0.5 * b.x, -0.5 * b.y);
  m(1, 0) = Complex(0.5 * b.x, 0.5 * b.y);
  // Vectors within tol of the sphere may carry a -tol/2 eigenvalue.
  return DensityMatrix(m, std::max(tol, kAssertionTol));
}

double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError("trace distance: dimension mismatch");
  }
  return 0.5 * TraceNorm(rho.mat() - sigma.mat());
}

ComplexVector EmbedQubit(const ComplexVector& psi) {
  if (psi.dim() != 2) throw DimensionError("embed: expected a qubit ket");
  ComplexVector out(3);
  out[0] = psi[0];
  out[1] = psi[1];
  return out;
}

DensityMatrix EmbedQubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("embed: expected a qubit state");
  ComplexMatrix m(3);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = rho(r, c);
  }
  return DensityMatrix(m);
}

std::string_view AxisName(Axis axis) {
  switch (axis) {
    case Axis::kX: return "x";
    case Axis::kY: return "y";
    case Axis::kZ: return "z";
  }
  return "?";
}

Axis ParseAxis(std::string_view name) {
  if (name == "x") return Axis::kX;
  if (name == "y") return Axis::kY;
  if (name == "z") return Axis::kZ;
  throw ValidationError("invalid measurement axis '" + std::string(name) + "'");
}

std::string_view InputStateName(InputState s) {
  switch (s) {
    case InputState::kZero: return "0";
    case InputState::kOne: return "1";
    case InputState::kPlusX: return "x";
    case InputState::kPlusY: return "y";
  }
  return "?";
}

InputState ParseInputState(std::string_view name) {
  for (InputState s : kReferenceInputs) {
    if (InputStateName(s) == name) return s;
  }
  throw ValidationError("unknown input state '" + std::string(name) + "'");
}

ComplexVector InputKet(InputState s) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (s) {
    case InputState::kZero: return {1.0, 0.0};
    case InputState::kOne: return {0.0, 1.0};
    case InputState::kPlusX: return {h, h};
    case InputState::kPlusY: return {h, Complex(0.0, h)};
  }
  throw ValidationError("unknown input state");
}

}  // namespace hrec
