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

// Run configuration and the CSV / JSON / SVG artifacts written by the CLI.

#ifndef HREC_REPORT_H_
#define HREC_REPORT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hrec/experiments.h"

namespace hrec {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ExperimentKind { kSweep, kAverage, kRepeat, kDfs, kTomoDemo };
std::string_view ExperimentName(ExperimentKind kind);
ExperimentKind ParseExperiment(std::string_view name);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kSweep;
  std::vector<double> p_values = DefaultStrengthGrid();
  double epsilon = kDefaultBranchingRatio;
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 20130607;
  NoiseModel noise{PhaseDistribution::kGaussian, 0.2, 0.0, 0.0, 0.0};
  bool cpmg = true;
  std::string output_path = "hrec_out";
  int bootstrap = 200;
  Quadrature quadrature = Quadrature::kFibonacci;
  std::int64_t nodes = 10000;
  std::int64_t max_nodes = 4'096'000;
  Weighting weighting = Weighting::kHeralded;
  double gamma_t = 1.0;
  std::vector<int> repeats{1, 10, 100, 1000};
  int dfs_states = 100;
  unsigned workers = 0;

  // Throws ValidationError on out-of-range fields.
  void Validate() const;
};

// Flat key/value document; keys are the field names above, with the noise
// model flattened to noise, noise_sigma, noise_width, phi_offset and
// pi_pulse_angle_error. Unknown keys are rejected.
void ApplyConfigJson(const nlohmann::json& doc, ExperimentConfig& cfg);
ExperimentConfig LoadConfigFile(const std::string& path);
nlohmann::json ConfigToJson(const ExperimentConfig& cfg);

// Metadata wrapper written next to every result set.
nlohmann::json RunMetadata(const ExperimentConfig& cfg,
                           const nlohmann::json& results);

// CSV with header state,p,predicted_F,predicted_F_M,mc_F,mc_sigma_F,acceptance
// and floats at 12 significant digits.
std::string FormatSweepCsv(std::span<const SweepRow> rows);
std::vector<SweepRow> ParseSweepCsv(std::string_view text);

// 12 significant digits, as used by every CSV writer.
std::string FormatDouble(double v);

// Orthographic Bloch-sphere drawing with one marker per point and a guide
// polyline through them.
std::string RenderBlochSvg(std::span<const BlochVector> points,
                           std::string_view title = "");

// Screen position of a Bloch vector in RenderBlochSvg's viewport.
struct SvgPoint {
  double x;
  double y;
};
SvgPoint ProjectBloch(const BlochVector& b);

// Throws FileError if the file cannot be written.
void WriteTextFile(const std::string& path, std::string_view contents);
void WriteBlochSvg(std::span<const BlochVector> points, const std::string& path,
                   std::string_view title = "");

}  // namespace hrec

#endif  // HREC_REPORT_H_
