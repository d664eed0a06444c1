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

#include "hrec/trajectories.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hrec/channels.h"
#include "hrec/errors.h"

namespace hrec {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

UnitaryElement PiPulse() { return {Ry(kPi), PulseRole::kPi}; }

void AppendAnalysis(PulseSequence& seq, Axis axis) {
  switch (axis) {
    case Axis::kX:
      seq.elements.push_back(UnitaryElement{Ry(-kPi / 2), PulseRole::kAnalysis});
      break;
    case Axis::kY:
      seq.elements.push_back(UnitaryElement{Rx(kPi / 2), PulseRole::kAnalysis});
      break;
    case Axis::kZ:
      break;
  }
  seq.analysis = axis;
  seq.elements.push_back(DetectElement{DetectLabel::kC});
}

void AppendPreparation(PulseSequence& seq, InputState s) {
  seq.elements.push_back(PrepareElement{ComplexVector{1.0, 0.0}});
  switch (s) {
    case InputState::kZero:
      break;
    case InputState::kOne:
      seq.elements.push_back(UnitaryElement{Ry(kPi), PulseRole::kPrep});
      break;
    case InputState::kPlusX:
      seq.elements.push_back(UnitaryElement{Ry(kPi / 2), PulseRole::kPrep});
      break;
    case InputState::kPlusY:
      seq.elements.push_back(UnitaryElement{Rx(-kPi / 2), PulseRole::kPrep});
      break;
  }
}

void AppendProtocol(PulseSequence& seq, const SequenceOptions& opt) {
  auto& e = seq.elements;
  e.push_back(WaitElement{0.5});
  e.push_back(DeshelveElement{opt.p, opt.eps});
  e.push_back(DetectElement{DetectLabel::kA});
  e.push_back(PiPulse());
  if (opt.stage == SequenceStage::kMid) {
    AppendAnalysis(seq, opt.analysis);
    return;
  }
  e.push_back(WaitElement{1.0});
  e.push_back(DeshelveElement{opt.p, opt.eps});
  e.push_back(DetectElement{DetectLabel::kB});
  if (opt.cpmg) {
    e.push_back(PiPulse());
    e.push_back(WaitElement{1.0});
    e.push_back(PiPulse());
    e.push_back(WaitElement{1.0});
    e.push_back(PiPulse());
    e.push_back(WaitElement{0.5});
  } else {
    e.push_back(WaitElement{2.5});
    e.push_back(PiPulse());
  }
  AppendAnalysis(seq, opt.analysis);
}

double DrawPhase(const NoiseModel& noise, SplitMix64& rng) {
  switch (noise.distribution) {
    case PhaseDistribution::kNone:
      return noise.phi_offset;
    case PhaseDistribution::kGaussian:
      if (noise.sigma == 0.0) return noise.phi_offset;
      return std::normal_distribution<double>(noise.phi_offset, noise.sigma)(rng);
    case PhaseDistribution::kUniform:
      return noise.phi_offset + noise.width * (2.0 * rng.uniform() - 1.0);
  }
  return noise.phi_offset;
}

void Normalize(ComplexVector& v) { v = v.normalized(); }

ComplexVector QubitPart(const ComplexVector& v) {
  return ComplexVector{v[0], v[1]}.normalized();
}

}  // namespace

// ---------------------------------------------------------------------------
// PulseSequence

void PulseSequence::Validate() const {
  if (elements.empty() || !std::holds_alternative<PrepareElement>(elements[0])) {
    throw ValidationError("pulse sequence must start with Prepare");
  }
  for (const PulseElement& el : elements) {
    std::visit(
        Overloaded{
            [](const PrepareElement& e) {
              if (e.ket.dim() != 2 || std::abs(e.ket.norm() - 1.0) > kAssertionTol) {
                throw ValidationError("Prepare needs a normalized qubit ket");
              }
            },
            [](const UnitaryElement& e) {
              if (e.u.dim() != 2 || e.u.unitarity_defect() > kValidationTol) {
                throw ValidationError("Unitary element is not a qubit unitary");
              }
            },
            [](const DeshelveElement& e) {
              if (!(e.p >= 0.0 && e.p <= 1.0) || !(e.eps >= 0.0 && e.eps <= 1.0)) {
                throw ValidationError("Deshelve p and eps must lie in [0, 1]");
              }
            },
            [](const DetectElement&) {},
            [](const WaitElement& e) {
              if (!(e.weight >= 0.0)) {
                throw ValidationError("Wait weight must be non-negative");
              }
            },
        },
        el);
  }
}

double PulseSequence::NetPhaseWeight() const {
  double sign = 1.0;
  double net = 0.0;
  for (const PulseElement& el : elements) {
    if (const auto* w = std::get_if<WaitElement>(&el)) net += sign * w->weight;
    if (const auto* u = std::get_if<UnitaryElement>(&el)) {
      if (u->role == PulseRole::kPi) sign = -sign;
    }
  }
  return net;
}

int PulseSequence::PiPulseCount() const {
  int n = 0;
  for (const PulseElement& el : elements) {
    if (const auto* u = std::get_if<UnitaryElement>(&el)) {
      n += u->role == PulseRole::kPi;
    }
  }
  return n;
}

PulseSequence BuildRecoverySequence(InputState initial, const SequenceOptions& opt) {
  PulseSequence seq;
  AppendPreparation(seq, initial);
  AppendProtocol(seq, opt);
  seq.Validate();
  return seq;
}

PulseSequence BuildRecoverySequence(const ComplexVector& initial,
                                const SequenceOptions& opt) {
  PulseSequence seq;
  seq.elements.push_back(PrepareElement{initial});
  AppendProtocol(seq, opt);
  seq.Validate();
  return seq;
}

PulseSequence BuildRepeatedRecoverySequence(const ComplexVector& initial,
                                            double p_seg, int n,
                                            Axis analysis) {
  if (n < 1) throw ValidationError("repeat count must be >= 1");
  PulseSequence seq;
  seq.elements.push_back(PrepareElement{initial});
  for (int k = 0; k < n; ++k) {
    seq.elements.push_back(DeshelveElement{p_seg, 0.0});
    seq.elements.push_back(DetectElement{DetectLabel::kA});
    seq.elements.push_back(PiPulse());
    seq.elements.push_back(DeshelveElement{p_seg, 0.0});
    seq.elements.push_back(DetectElement{DetectLabel::kB});
    seq.elements.push_back(PiPulse());
  }
  AppendAnalysis(seq, analysis);
  seq.Validate();
  return seq;
}

void NoiseModel::Validate() const {
  if (!(sigma >= 0.0) || !(width >= 0.0)) {
    throw ValidationError("noise sigma and width must be non-negative");
  }
}

// ---------------------------------------------------------------------------
// Shots

CompiledSequence::CompiledSequence(const PulseSequence& seq,
                                   const NoiseModel& noise)
    : noise_(noise), analysis_(seq.analysis) {
  seq.Validate();
  noise.Validate();
  const ComplexMatrix pulse_error = Ry(noise.pi_pulse_angle_error);
  for (const PulseElement& el : seq.elements) {
    Step step{};
    std::visit(
        Overloaded{
            [&](const PrepareElement& e) {
              step.kind = Step::Kind::kPrepare;
              step.ket = e.ket;
            },
            [&](const UnitaryElement& e) {
              step.kind = Step::Kind::kUnitary;
              step.u = e.role == PulseRole::kPi ? pulse_error * e.u : e.u;
              step.analysis = e.role == PulseRole::kAnalysis;
            },
            [&](const DeshelveElement& e) {
              step.kind = Step::Kind::kDeshelve;
              step.a = e.p;
              step.b = e.eps;
            },
            [&](const DetectElement& e) {
              step.kind = Step::Kind::kDetect;
              step.label = e.label;
            },
            [&](const WaitElement& e) {
              step.kind = Step::Kind::kWait;
              step.a = e.weight;
            },
        },
        el);
    steps_.push_back(step);
  }
}

ShotRecord CompiledSequence::Run(SplitMix64& rng) const {
  ShotRecord rec;
  TrajectoryOutcome& out = rec.outcome;
  out.herald_a = true;
  out.herald_b = true;
  out.sampled_phi = DrawPhase(noise_, rng);

  ComplexVector psi(3);
  for (const Step& s : steps_) {
    switch (s.kind) {
      case Step::Kind::kPrepare:
        psi = EmbedQubit(s.ket);
        break;
      case Step::Kind::kUnitary: {
        if (s.analysis && !rec.pre_analysis) rec.pre_analysis = QubitPart(psi);
        const Complex a0 = psi[0];
        const Complex a1 = psi[1];
        psi[0] = s.u(0, 0) * a0 + s.u(0, 1) * a1;
        psi[1] = s.u(1, 0) * a0 + s.u(1, 1) * a1;
        break;
      }
      case Step::Kind::kDeshelve: {
        const double pop1 = std::norm(psi[1]);
        const double leak = (1.0 - s.b) * s.a * pop1;
        const double branch = s.b * s.a * pop1;
        const double u = rng.uniform();
        if (u < leak) {
          psi = ComplexVector::Basis(3, 2);
        } else if (u < leak + branch) {
          psi = ComplexVector::Basis(3, 0);
        } else {
          psi[1] *= std::sqrt(1.0 - s.a);
          Normalize(psi);
        }
        break;
      }
      case Step::Kind::kDetect: {
        if (s.label == DetectLabel::kC) {
          if (!rec.pre_analysis) rec.pre_analysis = QubitPart(psi);
          const double p0 = std::norm(psi[0]);
          const double p_up = p0 / (p0 + std::norm(psi[1]));
          out.detect_c = rng.uniform() < p_up;
          break;
        }
        const double leaked = std::norm(psi[2]);
        if (leaked > 0.0) {
          if (rng.uniform() < leaked) {
            if (s.label == DetectLabel::kA) out.herald_a = false;
            out.herald_b = false;
            rec.pre_analysis.reset();
            return rec;
          }
          psi[2] = 0.0;
          Normalize(psi);
        }
        break;
      }
      case Step::Kind::kWait: {
        const double angle = out.sampled_phi * s.a;
        psi[0] *= std::polar(1.0, angle);
        psi[1] *= std::polar(1.0, -angle);
        break;
      }
    }
  }
  if (!rec.pre_analysis) rec.pre_analysis = QubitPart(psi);
  return rec;
}

TrajectoryOutcome SampleShot(const PulseSequence& seq, const NoiseModel& noise,
                             SplitMix64& rng) {
  return CompiledSequence(seq, noise).Run(rng).outcome;
}

// ---------------------------------------------------------------------------
// Batches

double BatchStats::acceptance_fraction() const {
  if (n_shots == 0) return 0.0;
  return static_cast<double>(accept_count) / static_cast<double>(n_shots);
}

double BatchStats::acceptance_sigma() const {
  if (n_shots == 0) return 0.0;
  const double f = acceptance_fraction();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(n_shots));
}

DensityMatrix BatchStats::conditioned_state() const {
  if (accept_count == 0) {
    throw DegenerateHeraldError("no accepted shots in batch");
  }
  ComplexMatrix mean = (1.0 / static_cast<double>(accept_count)) * conditioned_sum;
  return DensityMatrix(mean, kValidationTol);
}

void BatchStats::Merge(const BatchStats& other) {
  n_shots += other.n_shots;
  accept_count += other.accept_count;
  for (int k = 0; k < 3; ++k) {
    c_up[k] += other.c_up[k];
    c_total[k] += other.c_total[k];
  }
  conditioned_sum += other.conditioned_sum;
}

BatchStats RunBatch(const PulseSequence& seq, const NoiseModel& noise,
                    std::uint64_t n_shots, std::uint64_t seed,
                    unsigned workers) {
  if (n_shots == 0) throw ValidationError("n_shots must be >= 1");
  const CompiledSequence compiled(seq, noise);
  const int axis = static_cast<int>(compiled.analysis());
  const std::uint64_t n_chunks = (n_shots + kShotsPerChunk - 1) / kShotsPerChunk;
  std::vector<BatchStats> partial(n_chunks);
  ParallelChunks(n_chunks, workers, [&](std::uint64_t chunk) {
    BatchStats& st = partial[chunk];
    const std::uint64_t begin = chunk * kShotsPerChunk;
    const std::uint64_t end = std::min(n_shots, begin + kShotsPerChunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      SplitMix64 rng = Stream(seed, i);
      const ShotRecord rec = compiled.Run(rng);
      ++st.n_shots;
      if (!rec.outcome.accepted()) continue;
      ++st.accept_count;
      ++st.c_total[axis];
      st.c_up[axis] += rec.outcome.detect_c;
      st.conditioned_sum += ComplexMatrix::Outer(*rec.pre_analysis, *rec.pre_analysis);
    }
  });
  BatchStats total;
  for (const BatchStats& st : partial) total.Merge(st);
  return total;
}

}  // namespace hrec
