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

#include "hrec/tomography.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "hrec/channels.h"
#include "hrec/errors.h"

namespace hrec {

namespace {

// Affine span check on the augmented input matrix.
constexpr double kDegenerateInputTol = 1e-8;

std::int64_t Binomial(std::int64_t n, double prob, SplitMix64& rng) {
  if (prob <= 0.0) return 0;
  if (prob >= 1.0) return n;
  return std::binomial_distribution<std::int64_t>(n, prob)(rng);
}

}  // namespace

void CountRecord::Validate() const {
  if (n_total < 1 || n_up < 0 || n_up > n_total) {
    throw ValidationError("count record needs 0 <= n_up <= n_total, n_total >= 1");
  }
}

double MeasurementProbability(const DensityMatrix& rho, Axis axis) {
  const BlochVector b = BlochFromRho(rho);
  return 0.5 * (1.0 + b.component(static_cast<int>(axis)));
}

CountRecord SimulateCounts(const DensityMatrix& rho, Axis axis, std::int64_t n,
                           SplitMix64& rng) {
  if (n < 1) throw ValidationError("shot count must be >= 1");
  return {axis, Binomial(n, MeasurementProbability(rho, axis), rng), n};
}

std::array<CountRecord, 3> SimulateTomography(const DensityMatrix& rho,
                                              std::int64_t n_per_axis,
                                              std::uint64_t seed) {
  std::array<CountRecord, 3> out;
  for (int k = 0; k < 3; ++k) {
    SplitMix64 rng = Stream(seed, k);
    out[k] = SimulateCounts(rho, static_cast<Axis>(k), n_per_axis, rng);
  }
  return out;
}

BlochVector RawBlochEstimate(std::span<const CountRecord> records) {
  std::array<bool, 3> seen{};
  std::array<double, 3> b{};
  if (records.size() != 3) {
    throw ValidationError("state reconstruction needs one record per axis");
  }
  for (const CountRecord& r : records) {
    r.Validate();
    const int k = static_cast<int>(r.axis);
    if (seen[k]) throw ValidationError("duplicate tomography axis");
    seen[k] = true;
    b[k] = 2.0 * static_cast<double>(r.n_up) / static_cast<double>(r.n_total) - 1.0;
  }
  return {b[0], b[1], b[2]};
}

DensityMatrix ReconstructState(std::span<const CountRecord> records) {
  BlochVector b = RawBlochEstimate(records);
  const double n = b.norm();
  if (n > 1.0) {
    b.x /= n;
    b.y /= n;
    b.z /= n;
  }
  return RhoFromBloch(b);
}

BlochVector ProcessMap::Apply(const BlochVector& b) const {
  const std::array<double, 3> in{b.x, b.y, b.z};
  std::array<double, 3> out = c;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) out[r] += a[r][k] * in[k];
  }
  return {out[0], out[1], out[2]};
}

ProcessMap ProcessMap::Identity() {
  ProcessMap m;
  for (int k = 0; k < 3; ++k) m.a[k][k] = 1.0;
  return m;
}

ProcessMap ReconstructProcess(std::span<const DensityMatrix> inputs,
                              std::span<const DensityMatrix> outputs) {
  if (inputs.size() != outputs.size() || inputs.size() < 4) {
    throw ValidationError("process fit needs >= 4 matched input/output states");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(inputs.size());
  // Rows: samples. Columns: (b_x, b_y, b_z, 1).
  Eigen::MatrixXd design(n, 4);
  Eigen::MatrixXd targets(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const BlochVector bi = BlochFromRho(inputs[i]);
    const BlochVector bo = BlochFromRho(outputs[i]);
    design.row(i) << bi.x, bi.y, bi.z, 1.0;
    targets.row(i) << bo.x, bo.y, bo.z;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  const Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
  if (qr.rank() < 4 || diag.minCoeff() < kDegenerateInputTol * diag.maxCoeff()) {
    throw ValidationError("process inputs do not span the Bloch ball");
  }
  const Eigen::MatrixXd coef = qr.solve(targets);  // 4 x 3
  ProcessMap m;
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) m.a[r][k] = coef(k, r);
    m.c[r] = coef(3, r);
  }
  return m;
}

std::array<DensityMatrix, 4> ReferenceInputStates() {
  return {DensityMatrix::Pure(InputKet(InputState::kZero)),
          DensityMatrix::Pure(InputKet(InputState::kOne)),
          DensityMatrix::Pure(InputKet(InputState::kPlusX)),
          DensityMatrix::Pure(InputKet(InputState::kPlusY))};
}

FidelityEstimate FidelityWithErrorbars(const DensityMatrix& truth,
                                       std::span<const CountRecord> records,
                                       int n_bootstrap, std::uint64_t seed) {
  if (n_bootstrap < kMinBootstrap) {
    throw ValidationError("bootstrap needs at least 100 resamples");
  }
  RawBlochEstimate(records);  // validates the record set
  std::vector<double> samples;
  samples.reserve(n_bootstrap);
  std::vector<CountRecord> resampled(records.begin(), records.end());
  for (int b = 0; b < n_bootstrap; ++b) {
    SplitMix64 rng = Stream(seed, static_cast<std::uint64_t>(b));
    for (std::size_t k = 0; k < records.size(); ++k) {
      const double freq = static_cast<double>(records[k].n_up) /
                          static_cast<double>(records[k].n_total);
      resampled[k].n_up = Binomial(records[k].n_total, freq, rng);
    }
    samples.push_back(Fidelity(truth, ReconstructState(resampled)));
  }
  double mean = 0.0;
  for (double f : samples) mean += f;
  mean /= n_bootstrap;
  double var = 0.0;
  for (double f : samples) var += (f - mean) * (f - mean);
  return {mean, std::sqrt(var / (n_bootstrap - 1.0))};
}

}  // namespace hrec
