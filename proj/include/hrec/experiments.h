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

// End-to-end experiments: strength sweeps with simulated tomography,
// Bloch-sphere averaged fidelities, repeated recovery, and the two-qubit
// encoding.

#ifndef HREC_EXPERIMENTS_H_
#define HREC_EXPERIMENTS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrec/channels.h"
#include "hrec/states.h"
#include "hrec/tomography.h"
#include "hrec/trajectories.h"

namespace hrec {

// Ten strengths evenly spaced on [0.01, 0.94].
std::vector<double> DefaultStrengthGrid();

// Total repetitions per data point: 5000 at p = 0.1 rising linearly to 12000
// at p = 0.9, clamped outside that range.
std::int64_t ScheduledShots(double p);
inline constexpr std::int64_t kBaselineShots = 12000;

// Tomography of the output of one pulse sequence configuration. The shots are
// split equally over the three analysis axes; only heralded shots contribute
// counts.
struct SequenceTomography {
  std::array<CountRecord, 3> records;
  std::uint64_t shots = 0;
  std::uint64_t accepted = 0;
  // Mean herald-conditioned state from the exact per-shot states.
  std::optional<DensityMatrix> conditioned;

  double acceptance() const;
};
SequenceTomography RunSequenceTomography(InputState initial,
                                         const SequenceOptions& options,
                                         const NoiseModel& noise,
                                         std::int64_t total_shots,
                                         std::uint64_t seed,
                                         unsigned workers = 0);

// ---------------------------------------------------------------------------
// Sweep

struct SweepRow {
  std::string state;
  double p = 0.0;
  double predicted_f = 0.0;    // recovery with branching, closed form
  double predicted_f_m = 0.0;  // single projection, closed form
  double mc_f = 0.0;
  double mc_sigma_f = 0.0;
  double acceptance = 0.0;
};

struct SweepOptions {
  std::vector<double> p_values = DefaultStrengthGrid();
  double epsilon = kDefaultBranchingRatio;
  std::optional<std::int64_t> shots;  // overrides the schedule
  std::uint64_t seed = 1;
  NoiseModel noise;
  bool cpmg = true;
  int n_bootstrap = 200;
  unsigned workers = 0;
  std::vector<InputState> states{std::begin(kReferenceInputs),
                                 std::end(kReferenceInputs)};
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // Reconstructed Bloch vectors per input state, one per p, after the partial
  // collapse (mid) and after recovery (final).
  std::map<std::string, std::vector<BlochVector>> mid_trajectory;
  std::map<std::string, std::vector<BlochVector>> final_trajectory;
};

// Fidelities are taken against the p = 0 tomography output of each input.
SweepResult SweepStrength(const SweepOptions& opt);

// ---------------------------------------------------------------------------
// Bloch-sphere average

enum class Protocol { kPartialMeasurement, kRecovery };
enum class Quadrature { kFibonacci, kRandom };
// kUniform: plain mean over input states. kHeralded: each input weighted by
// its herald probability, i.e. the mean over accepted runs.
enum class Weighting { kUniform, kHeralded };

struct AverageOptions {
  Quadrature quadrature = Quadrature::kFibonacci;
  std::int64_t nodes = 10000;
  Weighting weighting = Weighting::kHeralded;
  std::uint64_t seed = 1;  // random quadrature only
  std::int64_t max_nodes = 4'096'000;  // give up beyond this many nodes
};

inline constexpr double kAverageConvergenceTol = 1e-4;

// Fidelity and herald probability of one pure input under the protocol. The
// kRecovery protocol uses the branching deshelve channel with ratio eps.
struct ProtocolOutcome {
  double fidelity;
  double success_prob;
};
ProtocolOutcome EvaluateProtocol(const ComplexVector& psi, double p,
                                 Protocol protocol, double eps);

// Mean at a fixed node count, no convergence check.
double AverageFidelityAtNodes(double p, Protocol protocol, double eps,
                              const AverageOptions& opt);

// Evaluates at n and 4n nodes and quadruples n until the two agree within
// 1e-4; returns the 4n value. AccuracyError beyond opt.max_nodes.
double AverageFidelity(double p, Protocol protocol, double eps,
                       const AverageOptions& opt = {});

// ---------------------------------------------------------------------------
// Repeated recovery

struct RepeatedRecoveryResult {
  double p_segment;
  double success_prob;   // (1 - p_segment)^n
  double asymptote;      // exp(-gamma_t / 2)
  double min_fidelity;   // worst fidelity with the input over the n rounds
};

// n ideal recoveries within time t, each half-interval leaking with
// probability 1 - exp(-gamma_t / (2 n)).
RepeatedRecoveryResult RepeatedRecovery(double gamma_t, int n,
                                        const ComplexVector& initial);
RepeatedRecoveryResult RepeatedRecovery(double gamma_t, int n);

BatchStats RepeatedRecoveryMonteCarlo(double gamma_t, int n,
                                      std::uint64_t shots, std::uint64_t seed,
                                      unsigned workers = 0);

// ---------------------------------------------------------------------------
// Two-qubit encoding

struct DfsResult {
  double fidelity;  // post-selected logical state vs. the input
  double survival;  // probability both qubits stay in span{|0>,|1>}
};

// Leakage of strength p on each qubit of a|01> + b|10>, post-selected on no
// leakage.
DfsResult DfsTwoQubit(double p, Complex a, Complex b);

}  // namespace hrec

#endif  // HREC_EXPERIMENTS_H_
