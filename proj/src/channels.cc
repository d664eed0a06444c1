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

#include "hrec/channels.h"

#include <cmath>
#include <string>

#include "hrec/errors.h"

namespace hrec {

namespace {

void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0, 1], got " +
                          std::to_string(p));
  }
}

// Recovery needs p < 1; p = 1 is a certain herald failure, not bad input.
void CheckRecoverableStrength(double p) {
  CheckProbability(p, "p");
  if (p >= 1.0) {
    throw DegenerateHeraldError("recovery is undefined at p = 1");
  }
}

// Renormalized accept branch; the accept weight is returned separately.
HeraldedResult Renormalize(const ComplexMatrix& accepted) {
  const double prob = accepted.trace().real();
  if (prob <= kDegenerateHeraldTol) {
    throw DegenerateHeraldError("herald accept probability " +
                                std::to_string(prob) + " is zero");
  }
  return {DensityMatrix((1.0 / prob) * accepted), prob};
}

}  // namespace

// ---------------------------------------------------------------------------
// Unitaries

ComplexMatrix PauliX() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix PauliY() {
  return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}
ComplexMatrix PauliZ() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix PiPulseY() { return PauliY(); }

ComplexMatrix Dephase(double phi) {
  return ComplexMatrix::Diagonal({std::polar(1.0, phi), std::polar(1.0, -phi)});
}

ComplexMatrix Rx(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, Complex(0.0, -s)}, {Complex(0.0, -s), c}};
}

ComplexMatrix Ry(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {{c, -s}, {s, c}};
}

ComplexMatrix Rz(double theta) {
  return ComplexMatrix::Diagonal(
      {std::polar(1.0, -theta / 2.0), std::polar(1.0, theta / 2.0)});
}

ComplexMatrix EmbedQubitOperator(const ComplexMatrix& u) {
  if (u.dim() != 2) throw DimensionError("embed: expected a qubit operator");
  ComplexMatrix out(3);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = u(r, c);
  }
  out(2, 2) = 1.0;
  return out;
}

DensityMatrix ApplyUnitary(const DensityMatrix& rho, const ComplexMatrix& u,
                           double tol) {
  if (u.dim() != rho.dim()) {
    throw DimensionError("apply_unitary: dimension mismatch");
  }
  if (u.unitarity_defect() > tol) {
    throw ValidationError("apply_unitary: operator is not unitary");
  }
  return DensityMatrix(Conjugate(u, rho.mat()));
}

// ---------------------------------------------------------------------------
// HeraldedChannel

double HeraldedChannel::completeness_defect() const {
  ComplexMatrix sum(dim);
  for (const auto* set : {&accept, &reject}) {
    for (const KrausOperator& k : *set) sum += k.op.adjoint() * k.op;
  }
  return (sum - ComplexMatrix::Identity(dim)).frobenius_norm();
}

ComplexMatrix HeraldedChannel::AcceptBranch(const ComplexMatrix& rho) const {
  if (rho.dim() != dim) throw DimensionError("channel: dimension mismatch");
  ComplexMatrix out(dim);
  for (const KrausOperator& k : accept) out += Conjugate(k.op, rho);
  return out;
}

ComplexMatrix HeraldedChannel::ApplyAll(const ComplexMatrix& rho) const {
  ComplexMatrix out = AcceptBranch(rho);
  for (const KrausOperator& k : reject) out += Conjugate(k.op, rho);
  return out;
}

HeraldedResult HeraldedChannel::Herald(const DensityMatrix& rho) const {
  return Renormalize(AcceptBranch(rho.mat()));
}

HeraldedChannel DeshelveChannel(double p, double eps) {
  CheckProbability(p, "p");
  CheckProbability(eps, "eps");
  ComplexMatrix survive = ComplexMatrix::Diagonal({1.0, std::sqrt(1.0 - p), 1.0});
  return {3,
          {{"survive", survive},
           {"branch", std::sqrt(eps * p) * ComplexMatrix::Unit(3, 0, 1)}},
          {{"leak", std::sqrt((1.0 - eps) * p) * ComplexMatrix::Unit(3, 2, 1)}}};
}

HeraldedChannel PartialMeasurementChannel(double p) {
  CheckProbability(p, "p");
  return {2,
          {{"M", ComplexMatrix::Diagonal({1.0, std::sqrt(1.0 - p)})}},
          {{"leak", std::sqrt(p) * ComplexMatrix::Unit(2, 1, 1)}}};
}

HeraldedChannel LeakageDetection() {
  return {3,
          {{"dark", ComplexMatrix::Diagonal({1.0, 1.0, 0.0})}},
          {{"fluorescence", ComplexMatrix::Unit(3, 2, 2)}}};
}

// ---------------------------------------------------------------------------
// Maps

DensityMatrix ApplyLeakage(const DensityMatrix& rho, double p) {
  return ApplyDeshelve(rho, p, 0.0);
}

DensityMatrix ApplyDeshelve(const DensityMatrix& rho, double p, double eps) {
  if (rho.dim() != 3) throw DimensionError("deshelve acts on dimension 3");
  return DensityMatrix(DeshelveChannel(p, eps).ApplyAll(rho.mat()));
}

HeraldedResult PartialMeasure(const DensityMatrix& rho, double p) {
  if (rho.dim() != 2) throw DimensionError("partial measurement needs dim 2");
  return PartialMeasurementChannel(p).Herald(rho);
}

HeraldedResult Recover(const DensityMatrix& rho, double p) {
  if (rho.dim() != 2) throw DimensionError("recovery needs dim 2");
  CheckRecoverableStrength(p);
  const HeraldedChannel m = PartialMeasurementChannel(p);
  const ComplexMatrix y = PiPulseY();
  const HeraldedResult first = m.Herald(rho);
  const HeraldedResult second = m.Herald(ApplyUnitary(first.state, y));
  return {ApplyUnitary(second.state, y),
          first.success_prob * second.success_prob};
}

HeraldedResult RecoverWithBranching(const DensityMatrix& rho, double p,
                                    double eps) {
  if (rho.dim() != 2) throw DimensionError("recovery needs dim 2");
  CheckProbability(p, "p");
  CheckProbability(eps, "eps");
  const ComplexMatrix y = EmbedQubitOperator(PiPulseY());
  DensityMatrix s = EmbedQubit(rho);
  s = ApplyDeshelve(s, p, eps);
  s = ApplyUnitary(s, y);
  s = ApplyDeshelve(s, p, eps);
  s = ApplyUnitary(s, y);
  ComplexMatrix block(2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) block(r, c) = s(r, c);
  }
  return Renormalize(block);
}

HeraldNormalizations RecoveryNormalizations(const DensityMatrix& rho,
                                            double p) {
  if (rho.dim() != 2) throw DimensionError("recovery needs dim 2");
  CheckRecoverableStrength(p);
  const double n1 = 1.0 - rho(1, 1).real() * p;
  return {n1, 1.0 - rho(0, 0).real() * p / n1};
}

double KrausIdentityDeviation(const DensityMatrix& rho, double p, double phi) {
  const HeraldNormalizations n = RecoveryNormalizations(rho, p);
  const ComplexMatrix m = ComplexMatrix::Diagonal({1.0, std::sqrt(1.0 - p)});
  const ComplexMatrix step = m * Dephase(phi) * PiPulseY();
  const ComplexMatrix lhs = (1.0 / std::sqrt(n.n1 * n.n2)) * (step * step);
  return (lhs - ComplexMatrix::Identity(2)).frobenius_norm();
}

// ---------------------------------------------------------------------------
// Fidelity

double Fidelity(const DensityMatrix& rho_i, const DensityMatrix& rho_f) {
  if (rho_i.dim() != rho_f.dim()) {
    throw ValidationError("fidelity: dimension mismatch");
  }
  const ComplexMatrix product = PsdSqrt(rho_i.mat()) * PsdSqrt(rho_f.mat());
  double f = 0.0;
  for (double s : SingularValues(product)) f += s;
  return f;
}

double PartialMeasurementFidelity(Complex a, Complex b, double p) {
  const double a2 = std::norm(a);
  const double b2 = std::norm(b);
  if (std::abs(a2 + b2 - 1.0) > kAssertionTol) {
    throw ValidationError("amplitudes are not normalized");
  }
  if (!(p >= 0.0 && p < 1.0)) {
    throw ValidationError("p must lie in [0, 1)");
  }
  return (a2 + b2 * std::sqrt(1.0 - p)) / std::sqrt(1.0 - b2 * p);
}

}  // namespace hrec
