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

// Density matrices and Bloch-sphere geometry.
//
// Bloch convention used throughout the project:
//   |0> is the north pole (z = +1),
//   x = 2 Re rho_01,  y = 2 Im rho_10,  z = rho_00 - rho_11,
// so that rho = (I + x X + y Y + z Z) / 2 and |y> = (|0> + i|1>)/sqrt(2)
// sits at (0, 1, 0).

#ifndef HREC_STATES_H_
#define HREC_STATES_H_

#include <string>
#include <string_view>

#include "hrec/linalg.h"

namespace hrec {

// Hermitian, unit-trace, PSD matrix of dimension 2 (qubit), 3 (qubit plus the
// leakage level |2>), or 4 (two qubits). Construction validates.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& mat,
                         double tol = kAssertionTol);

  static DensityMatrix Pure(const ComplexVector& psi);
  static DensityMatrix MaximallyMixed(int dim);

  int dim() const { return mat_.dim(); }
  const ComplexMatrix& mat() const { return mat_; }
  Complex operator()(int r, int c) const { return mat_(r, c); }

  double min_eigenvalue() const;

 private:
  ComplexMatrix mat_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double component(int axis) const;
};

BlochVector BlochFromRho(const DensityMatrix& rho);
// Throws ValidationError if |b| > 1 + tol.
DensityMatrix RhoFromBloch(const BlochVector& b, double tol = kValidationTol);

// ½ ||rho - sigma||_1
double TraceDistance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Qubit state padded with a zero leakage amplitude/block.
ComplexVector EmbedQubit(const ComplexVector& psi);
DensityMatrix EmbedQubit(const DensityMatrix& rho);

// Measurement axes; also used as the analysis setting of a pulse sequence.
enum class Axis { kX = 0, kY = 1, kZ = 2 };
std::string_view AxisName(Axis axis);
// Accepts "x", "y", "z"; throws ValidationError otherwise.
Axis ParseAxis(std::string_view name);

// The four reference inputs |0>, |1>, |x>, |y>.
enum class InputState { kZero, kOne, kPlusX, kPlusY };
inline constexpr InputState kReferenceInputs[] = {
    InputState::kZero, InputState::kOne, InputState::kPlusX,
    InputState::kPlusY};
std::string_view InputStateName(InputState s);
InputState ParseInputState(std::string_view name);
ComplexVector InputKet(InputState s);

}  // namespace hrec

#endif  // HREC_STATES_H_
