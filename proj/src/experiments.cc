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

#include "hrec/experiments.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hrec/errors.h"

namespace hrec {

namespace {

constexpr double kGoldenAngle = 2.0 * std::numbers::pi * (2.0 - std::numbers::phi);

void CheckStrength(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("p must lie in [0, 1], got " + std::to_string(p));
  }
}

ComplexVector SphereKet(double cos_theta, double azimuth) {
  const double theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), azimuth)};
}

}  // namespace

std::vector<double> DefaultStrengthGrid() {
  std::vector<double> grid(10);
  for (int k = 0; k < 10; ++k) grid[k] = 0.01 + (0.94 - 0.01) * k / 9.0;
  return grid;
}

std::int64_t ScheduledShots(double p) {
  const double t = std::clamp((p - 0.1) / 0.8, 0.0, 1.0);
  return static_cast<std::int64_t>(std::llround(5000.0 + t * 7000.0));
}

// ---------------------------------------------------------------------------
// Sequence tomography

double SequenceTomography::acceptance() const {
  return shots == 0 ? 0.0 : static_cast<double>(accepted) / shots;
}

SequenceTomography RunSequenceTomography(InputState initial,
                                         const SequenceOptions& options,
                                         const NoiseModel& noise,
                                         std::int64_t total_shots,
                                         std::uint64_t seed, unsigned workers) {
  if (total_shots < 3) {
    throw ValidationError("tomography needs at least one shot per axis");
  }
  const std::int64_t per_axis = total_shots / 3;
  SequenceTomography out;
  BatchStats all;
  for (int k = 0; k < 3; ++k) {
    SequenceOptions opt = options;
    opt.analysis = static_cast<Axis>(k);
    const BatchStats st =
        RunBatch(BuildRecoverySequence(initial, opt), noise,
                 static_cast<std::uint64_t>(per_axis), SubSeed(seed, k), workers);
    out.records[k] = {opt.analysis, static_cast<std::int64_t>(st.c_up[k]),
                      static_cast<std::int64_t>(st.c_total[k])};
    all.Merge(st);
  }
  out.shots = all.n_shots;
  out.accepted = all.accept_count;
  if (all.accept_count > 0) out.conditioned = all.conditioned_state();
  for (const CountRecord& r : out.records) {
    if (r.n_total == 0) {
      throw DegenerateHeraldError("no heralded shots on tomography axis " +
                                  std::string(AxisName(r.axis)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

SweepResult SweepStrength(const SweepOptions& opt) {
  if (opt.p_values.empty()) throw ValidationError("empty p grid");
  for (double p : opt.p_values) CheckStrength(p);
  if (opt.shots && *opt.shots < 3) throw ValidationError("shots must be >= 3");

  SweepResult result;
  for (std::size_t si = 0; si < opt.states.size(); ++si) {
    const InputState state = opt.states[si];
    const std::string name(InputStateName(state));
    const ComplexVector ket = InputKet(state);
    const DensityMatrix rho_in = DensityMatrix::Pure(ket);

    SequenceOptions base;
    base.eps = opt.epsilon;
    base.cpmg = opt.cpmg;
    base.p = 0.0;
    const std::uint64_t state_seed = SubSeed(opt.seed, si);
    const SequenceTomography baseline =
        RunSequenceTomography(state, base, opt.noise,
                              opt.shots.value_or(kBaselineShots),
                              SubSeed(state_seed, 0), opt.workers);
    const DensityMatrix rho_i = ReconstructState(baseline.records);

    for (std::size_t pi = 0; pi < opt.p_values.size(); ++pi) {
      const double p = opt.p_values[pi];
      const std::int64_t shots = opt.shots.value_or(ScheduledShots(p));
      const std::uint64_t cell_seed = SubSeed(state_seed, 1 + pi);

      SequenceOptions cell = base;
      cell.p = p;
      const SequenceTomography final_tomo = RunSequenceTomography(
          state, cell, opt.noise, shots, SubSeed(cell_seed, 0), opt.workers);
      cell.stage = SequenceStage::kMid;
      const SequenceTomography mid_tomo = RunSequenceTomography(
          state, cell, opt.noise, shots, SubSeed(cell_seed, 1), opt.workers);

      const FidelityEstimate est = FidelityWithErrorbars(
          rho_i, final_tomo.records, opt.n_bootstrap, SubSeed(cell_seed, 2));

      SweepRow row;
      row.state = name;
      row.p = p;
      row.predicted_f =
          Fidelity(rho_in, RecoverWithBranching(rho_in, p, opt.epsilon).state);
      row.predicted_f_m = PartialMeasurementFidelity(ket[0], ket[1], p);
      row.mc_f = est.mean;
      row.mc_sigma_f = est.sigma;
      row.acceptance = final_tomo.acceptance();
      result.rows.push_back(row);

      result.final_trajectory[name].push_back(
          BlochFromRho(ReconstructState(final_tomo.records)));
      result.mid_trajectory[name].push_back(
          BlochFromRho(ReconstructState(mid_tomo.records)));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Averages

ProtocolOutcome EvaluateProtocol(const ComplexVector& psi, double p,
                                 Protocol protocol, double eps) {
  const DensityMatrix rho = DensityMatrix::Pure(psi);
  const HeraldedResult r = protocol == Protocol::kPartialMeasurement
                               ? PartialMeasure(rho, p)
                               : RecoverWithBranching(rho, p, eps);
  return {Fidelity(rho, r.state), r.success_prob};
}

double AverageFidelityAtNodes(double p, Protocol protocol, double eps,
                              const AverageOptions& opt) {
  if (!(p >= 0.0 && p < 1.0)) throw ValidationError("p must lie in [0, 1)");
  if (opt.nodes < 100) throw ValidationError("need at least 100 nodes");
  double weighted = 0.0;
  double weights = 0.0;
  const double n = static_cast<double>(opt.nodes);
  for (std::int64_t k = 0; k < opt.nodes; ++k) {
    ComplexVector psi(2);
    if (opt.quadrature == Quadrature::kFibonacci) {
      psi = SphereKet(1.0 - (2.0 * k + 1.0) / n,
                      std::fmod(kGoldenAngle * k, 2.0 * std::numbers::pi));
    } else {
      SplitMix64 rng = Stream(opt.seed, static_cast<std::uint64_t>(k));
      const double z = 2.0 * rng.uniform() - 1.0;
      psi = SphereKet(z, 2.0 * std::numbers::pi * rng.uniform());
    }
    const ProtocolOutcome o = EvaluateProtocol(psi, p, protocol, eps);
    const double w = opt.weighting == Weighting::kHeralded ? o.success_prob : 1.0;
    weighted += w * o.fidelity;
    weights += w;
  }
  return weighted / weights;
}

double AverageFidelity(double p, Protocol protocol, double eps,
                       const AverageOptions& opt) {
  AverageOptions cur = opt;
  double coarse = AverageFidelityAtNodes(p, protocol, eps, cur);
  while (true) {
    AverageOptions fine = cur;
    fine.nodes = cur.nodes * 4;
    if (fine.nodes > opt.max_nodes) {
      throw AccuracyError("average fidelity did not converge to 1e-4 within " +
                          std::to_string(opt.max_nodes) + " nodes");
    }
    const double value = AverageFidelityAtNodes(p, protocol, eps, fine);
    if (std::abs(value - coarse) <= kAverageConvergenceTol) return value;
    cur = fine;
    coarse = value;
  }
}

// ---------------------------------------------------------------------------
// Repeated recovery

RepeatedRecoveryResult RepeatedRecovery(double gamma_t, int n,
                                        const ComplexVector& initial) {
  if (!(gamma_t >= 0.0)) throw ValidationError("gamma_t must be >= 0");
  if (n < 1) throw ValidationError("repeat count must be >= 1");
  const double x = gamma_t / (2.0 * n);
  const double p_seg = -std::expm1(-x);

  const DensityMatrix rho0 = DensityMatrix::Pure(initial);
  DensityMatrix rho = rho0;
  double min_f = 1.0;
  for (int k = 0; k < n; ++k) {
    rho = Recover(rho, p_seg).state;
    min_f = std::min(min_f, Fidelity(rho0, rho));
  }
  // (1 - p_seg)^n evaluated as exp(n log(1 - p_seg)) = exp(-gamma_t / 2 ...).
  const double success = std::exp(n * std::log1p(-p_seg));
  return {p_seg, success, std::exp(-gamma_t / 2.0), min_f};
}

RepeatedRecoveryResult RepeatedRecovery(double gamma_t, int n) {
  return RepeatedRecovery(gamma_t, n, InputKet(InputState::kPlusX));
}

BatchStats RepeatedRecoveryMonteCarlo(double gamma_t, int n,
                                      std::uint64_t shots, std::uint64_t seed,
                                      unsigned workers) {
  const RepeatedRecoveryResult r = RepeatedRecovery(gamma_t, n);
  const PulseSequence seq = BuildRepeatedRecoverySequence(
      InputKet(InputState::kPlusX), r.p_segment, n, Axis::kX);
  return RunBatch(seq, NoiseModel{}, shots, seed, workers);
}

// ---------------------------------------------------------------------------
// Two-qubit encoding

DfsResult DfsTwoQubit(double p, Complex a, Complex b) {
  CheckStrength(p);
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kAssertionTol) {
    throw ValidationError("logical amplitudes are not normalized");
  }
  // Product state space (dim 3) x (dim 3), index 3 i + j.
  std::array<Complex, 9> psi{};
  psi[3 * 0 + 1] = a;
  psi[3 * 1 + 0] = b;

  const HeraldedChannel leak = DeshelveChannel(p, 0.0);
  std::vector<ComplexMatrix> kraus;
  for (const auto* set : {&leak.accept, &leak.reject}) {
    for (const KrausOperator& k : *set) kraus.push_back(k.op);
  }

  // Post-selected (unnormalized) state on span{|0>,|1>} x span{|0>,|1>}.
  ComplexMatrix kept(4);
  for (const ComplexMatrix& k1 : kraus) {
    for (const ComplexMatrix& k2 : kraus) {
      ComplexVector v(4);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          Complex s = 0.0;
          for (int m = 0; m < 3; ++m) {
            for (int l = 0; l < 3; ++l) s += k1(i, m) * k2(j, l) * psi[3 * m + l];
          }
          v[2 * i + j] = s;
        }
      }
      kept += ComplexMatrix::Outer(v, v);
    }
  }
  const double survival = kept.trace().real();
  if (survival <= kDegenerateHeraldTol) {
    throw DegenerateHeraldError("encoded state leaked with certainty");
  }
  ComplexVector logical(4);
  logical[1] = a;
  logical[2] = b;
  const double f = Fidelity(DensityMatrix::Pure(logical),
                            DensityMatrix((1.0 / survival) * kept));
  return {f, survival};
}

}  // namespace hrec
