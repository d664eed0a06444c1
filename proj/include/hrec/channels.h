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

// Leakage channels, heralded partial measurement and the heralded recovery
// protocol built from them.
//
// Level |1> decays to the leakage level |2> with probability p. A deshelving
// pulse with branching ratio eps sends the fraction eps of that population to
// |0> instead. Projecting back onto span{|0>,|1>} (and discarding the runs
// that leaked) is the herald.

#ifndef HREC_CHANNELS_H_
#define HREC_CHANNELS_H_

#include <string>
#include <vector>

#include "hrec/linalg.h"
#include "hrec/states.h"

namespace hrec {

inline constexpr double kDefaultBranchingRatio = 0.0355;
// Accept probabilities at or below this raise DegenerateHeraldError.
inline constexpr double kDegenerateHeraldTol = 1e-12;

// ---------------------------------------------------------------------------
// Unitaries

ComplexMatrix PauliX();
ComplexMatrix PauliY();
ComplexMatrix PauliZ();
// sigma_y itself: the 180 degree rotation about y up to a global phase.
ComplexMatrix PiPulseY();
// exp(i phi sigma_z)
ComplexMatrix Dephase(double phi);
// exp(-i theta sigma_{x,y,z} / 2)
ComplexMatrix Rx(double theta);
ComplexMatrix Ry(double theta);
ComplexMatrix Rz(double theta);
// Qubit operator acting on span{|0>,|1>} of a qubit-plus-leakage system,
// identity on |2>.
ComplexMatrix EmbedQubitOperator(const ComplexMatrix& u);

// U rho U^dagger. Throws ValidationError unless ||U^dagger U - I||_F <= tol.
DensityMatrix ApplyUnitary(const DensityMatrix& rho, const ComplexMatrix& u,
                           double tol = kValidationTol);

// ---------------------------------------------------------------------------
// Heralded channels

struct KrausOperator {
  std::string label;
  ComplexMatrix op;
};

struct HeraldedResult {
  DensityMatrix state;  // conditioned on accept, renormalized
  double success_prob;
};

// Kraus operators split by herald outcome. The full (unconditioned) channel
// is the sum over both sets; Sum K^dagger K over both sets is the identity.
struct HeraldedChannel {
  int dim;
  std::vector<KrausOperator> accept;
  std::vector<KrausOperator> reject;

  // ||Sum K^dagger K - I||_F
  double completeness_defect() const;
  // Sum over accept K rho K^dagger, without renormalization.
  ComplexMatrix AcceptBranch(const ComplexMatrix& rho) const;
  // Full channel output (accept and reject branches summed).
  ComplexMatrix ApplyAll(const ComplexMatrix& rho) const;
  // Accepted output renormalized, with its probability. Throws
  // DegenerateHeraldError when the accept probability is <= 1e-12.
  HeraldedResult Herald(const DensityMatrix& rho) const;
};

// Dimension-3 deshelving channel. Accept: survival (|0><0| + sqrt(1-p)|1><1|
// + |2><2|) and the branching jump sqrt(eps p)|0><1|. Reject: the leakage jump
// sqrt((1-eps) p)|2><1|. eps = 0 is the plain leakage channel.
HeraldedChannel DeshelveChannel(double p, double eps);
// Dimension-2 partial measurement: accept M = |0><0| + sqrt(1-p)|1><1|,
// reject sqrt(p)|1><1|.
HeraldedChannel PartialMeasurementChannel(double p);
// Dimension-3 projective check for leakage: accept span{|0>,|1>}, reject |2>.
HeraldedChannel LeakageDetection();

// ---------------------------------------------------------------------------
// Channel maps on density matrices

// Leakage |1> -> |2> with probability p (dim 3).
DensityMatrix ApplyLeakage(const DensityMatrix& rho, double p);
// Leakage with branching ratio eps back to |0> (dim 3).
DensityMatrix ApplyDeshelve(const DensityMatrix& rho, double p,
                            double eps = kDefaultBranchingRatio);
// Post-selected partial measurement of strength p (dim 2).
HeraldedResult PartialMeasure(const DensityMatrix& rho, double p);
// sigma_y M_p(sigma_y M_p(rho) sigma_y) sigma_y; equals rho for p < 1 with
// success probability exactly 1 - p. Throws DegenerateHeraldError at p = 1.
HeraldedResult Recover(const DensityMatrix& rho, double p);
// The same protocol with the branching deshelve channel in place of the
// ideal leakage; success probability is the H_L trace before renormalizing.
HeraldedResult RecoverWithBranching(const DensityMatrix& rho, double p,
                                    double eps = kDefaultBranchingRatio);

// ||(N1 N2)^{-1/2} (M e^{i phi sigma_z} sigma_y)^2 - I||_F where N1, N2 are
// the two herald normalizations of Recover for the given state.
double KrausIdentityDeviation(const DensityMatrix& rho, double p, double phi);
// The two normalizations N1 = 1 - rho_11 p and N2 = 1 - rho_00 p / N1.
struct HeraldNormalizations {
  double n1;
  double n2;
};
HeraldNormalizations RecoveryNormalizations(const DensityMatrix& rho,
                                            double p);

// ---------------------------------------------------------------------------
// Fidelity

// Uhlmann fidelity tr sqrt(sqrt(rho_i) rho_f sqrt(rho_i)), evaluated as the
// sum of singular values of sqrt(rho_i) sqrt(rho_f).
double Fidelity(const DensityMatrix& rho_i, const DensityMatrix& rho_f);

// Fidelity |<i|d>| of a|0> + b|1> with its partially measured image:
// (|a|^2 + |b|^2 sqrt(1-p)) / sqrt(1 - |b|^2 p).
double PartialMeasurementFidelity(Complex a, Complex b, double p);

}  // namespace hrec

#endif  // HREC_CHANNELS_H_
