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

// Single-qubit state tomography by linear inversion with a radial projection
// back into the Bloch ball, affine Bloch-map process tomography, and
// bootstrap error bars.

#ifndef HREC_TOMOGRAPHY_H_
#define HREC_TOMOGRAPHY_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hrec/rng.h"
#include "hrec/states.h"

namespace hrec {

struct CountRecord {
  Axis axis = Axis::kZ;
  std::int64_t n_up = 0;  // +1 outcomes along axis
  std::int64_t n_total = 0;

  void Validate() const;
};

// Born-rule probability of the +1 outcome along the axis: (1 + b_axis) / 2.
double MeasurementProbability(const DensityMatrix& rho, Axis axis);

// Binomial(n, MeasurementProbability(rho, axis)).
CountRecord SimulateCounts(const DensityMatrix& rho, Axis axis, std::int64_t n,
                           SplitMix64& rng);

// Counts for all three axes, n per axis, each axis on its own stream.
std::array<CountRecord, 3> SimulateTomography(const DensityMatrix& rho,
                                              std::int64_t n_per_axis,
                                              std::uint64_t seed);

// Linear-inversion Bloch estimate before the physicality projection.
BlochVector RawBlochEstimate(std::span<const CountRecord> records);

// b_k = 2 n_up / n_total - 1 per axis, rescaled onto the sphere when |b| > 1.
// Needs exactly one record per axis.
DensityMatrix ReconstructState(std::span<const CountRecord> records);

// b_out = a * b_in + c
struct ProcessMap {
  std::array<std::array<double, 3>, 3> a{};
  std::array<double, 3> c{};

  BlochVector Apply(const BlochVector& b) const;
  static ProcessMap Identity();
};

// Least-squares affine fit b_out ~ a b_in + c. At least four inputs, which
// must span the Bloch ball affinely.
ProcessMap ReconstructProcess(std::span<const DensityMatrix> inputs,
                              std::span<const DensityMatrix> outputs);
// Bloch vectors of |0>, |1>, |x>, |y>.
std::array<DensityMatrix, 4> ReferenceInputStates();

struct FidelityEstimate {
  double mean;
  double sigma;
};

inline constexpr int kMinBootstrap = 100;

// Parametric bootstrap: resample every record binomially at its observed
// frequency, reconstruct, and take the Uhlmann fidelity with `truth`.
FidelityEstimate FidelityWithErrorbars(const DensityMatrix& truth,
                                       std::span<const CountRecord> records,
                                       int n_bootstrap, std::uint64_t seed);

}  // namespace hrec

#endif  // HREC_TOMOGRAPHY_H_
