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

// Single-shot Monte Carlo of the recovery pulse sequence.
//
// A shot carries a pure state of the qubit-plus-leakage system. Deshelving
// pulses pick one Kraus branch by the Born rule; the detection intervals A and
// B project onto "leaked" (fluorescence, shot rejected) or "not leaked"; the
// final detection C measures the qubit after the analysis rotation. A single
// quasi-static phase phi is drawn per shot and accrues as exp(i w phi sigma_z)
// during each Wait of weight w.

#ifndef HREC_TRAJECTORIES_H_
#define HREC_TRAJECTORIES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hrec/linalg.h"
#include "hrec/rng.h"
#include "hrec/states.h"

namespace hrec {

enum class PulseRole { kPrep, kPi, kAnalysis, kOther };
enum class DetectLabel { kA, kB, kC };

struct PrepareElement {
  ComplexVector ket;  // qubit state
};
struct UnitaryElement {
  ComplexMatrix u;  // qubit operator
  PulseRole role = PulseRole::kOther;
};
struct DeshelveElement {
  double p;
  double eps;
};
struct DetectElement {
  DetectLabel label;
};
struct WaitElement {
  double weight;
};

using PulseElement = std::variant<PrepareElement, UnitaryElement,
                                  DeshelveElement, DetectElement, WaitElement>;

struct PulseSequence {
  std::vector<PulseElement> elements;
  // Axis mapped to z by the analysis rotation before Detect(C).
  Axis analysis = Axis::kZ;

  // Throws ValidationError on out-of-range Deshelve/Wait parameters or a
  // sequence that does not start with Prepare.
  void Validate() const;
  // Sum of wait weights with the sign flipped by every pi-pulse; zero means
  // a quasi-static phase cancels.
  double NetPhaseWeight() const;
  int PiPulseCount() const;
};

enum class SequenceStage {
  kFull,  // through the recovery and decoupling pulses
  kMid,   // stop after Detect(A) and the first pi-pulse
};

struct SequenceOptions {
  double p = 0.0;
  double eps = 0.0355;
  Axis analysis = Axis::kZ;
  bool cpmg = true;
  SequenceStage stage = SequenceStage::kFull;
};

// Prepare |0>, state-preparation pulse, Deshelve, Detect(A), pi, Deshelve,
// Detect(B), [three decoupling pi-pulses], analysis rotation, Detect(C).
// Wait weights 0.5 | 1 | 1 | 1 | 0.5 between the four pi-pulses with CPMG;
// without CPMG the final pi-pulse closes a 0.5 | 3.5 split.
PulseSequence BuildRecoverySequence(InputState initial, const SequenceOptions& opt);
// Same, starting from an arbitrary qubit ket (no preparation pulse).
PulseSequence BuildRecoverySequence(const ComplexVector& initial,
                                const SequenceOptions& opt);

// n ideal recoveries [Deshelve(p_seg), Detect, pi, Deshelve(p_seg), Detect,
// pi] in a row, followed by the analysis rotation and Detect(C).
PulseSequence BuildRepeatedRecoverySequence(const ComplexVector& initial,
                                            double p_seg, int n, Axis analysis);

enum class PhaseDistribution { kNone, kGaussian, kUniform };

struct NoiseModel {
  PhaseDistribution distribution = PhaseDistribution::kNone;
  double sigma = 0.0;       // Gaussian standard deviation (rad)
  double width = 0.0;       // Uniform half-width (rad)
  double phi_offset = 0.0;  // deterministic mean phase (rad)
  double pi_pulse_angle_error = 0.0;  // added to every pi-pulse angle (rad)

  void Validate() const;
};

struct TrajectoryOutcome {
  bool herald_a = false;  // true = no fluorescence = accept
  bool herald_b = false;
  bool detect_c = false;  // true = +1 along the analysis axis
  double sampled_phi = 0.0;

  bool accepted() const { return herald_a && herald_b; }
};

struct ShotRecord {
  TrajectoryOutcome outcome;
  // Qubit state right before the analysis rotation (accepted shots only).
  std::optional<ComplexVector> pre_analysis;
};

// A sequence with the noise model's pulse errors folded in; build once and
// reuse for many shots.
class CompiledSequence {
 public:
  CompiledSequence(const PulseSequence& seq, const NoiseModel& noise);

  ShotRecord Run(SplitMix64& rng) const;
  Axis analysis() const { return analysis_; }

 private:
  struct Step {
    enum class Kind { kPrepare, kUnitary, kDeshelve, kDetect, kWait } kind;
    ComplexVector ket = ComplexVector(2);
    ComplexMatrix u = ComplexMatrix(2);
    bool analysis = false;
    double a = 0.0;  // p or wait weight
    double b = 0.0;  // eps
    DetectLabel label = DetectLabel::kA;
  };
  std::vector<Step> steps_;
  NoiseModel noise_;
  Axis analysis_;
};

TrajectoryOutcome SampleShot(const PulseSequence& seq, const NoiseModel& noise,
                             SplitMix64& rng);

struct BatchStats {
  std::uint64_t n_shots = 0;
  std::uint64_t accept_count = 0;
  // Detect(C) counts over accepted shots, indexed by analysis axis.
  std::array<std::uint64_t, 3> c_up{};
  std::array<std::uint64_t, 3> c_total{};
  // Sum of |psi><psi| over accepted shots, taken before the analysis rotation.
  ComplexMatrix conditioned_sum = ComplexMatrix(2);

  double acceptance_fraction() const;
  // Binomial standard error of acceptance_fraction.
  double acceptance_sigma() const;
  // Mean herald-conditioned state; throws DegenerateHeraldError when no shot
  // was accepted.
  DensityMatrix conditioned_state() const;
  void Merge(const BatchStats& other);
};

inline constexpr std::uint64_t kShotsPerChunk = 2048;

// Shot i uses Stream(seed, i); chunks are reduced in index order, so the
// result is identical for every worker count.
BatchStats RunBatch(const PulseSequence& seq, const NoiseModel& noise,
                    std::uint64_t n_shots, std::uint64_t seed,
                    unsigned workers = 0);

}  // namespace hrec

#endif  // HREC_TRAJECTORIES_H_
