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

#include <cmath>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "hrec/channels.h"
#include "hrec/errors.h"
#include "test_util.h"

namespace hrec {
namespace {

using testing::RandomState;

// Effectively exact probabilities: the rounding error of n_up / n_total is
// below 1e-15.
constexpr std::int64_t kPseudoCounts = 1'000'000'000'000'000;

std::array<CountRecord, 3> ExactCounts(const DensityMatrix& rho) {
  std::array<CountRecord, 3> out;
  for (int k = 0; k < 3; ++k) {
    const Axis axis = static_cast<Axis>(k);
    const double prob = MeasurementProbability(rho, axis);
    out[k] = {axis, std::llround(prob * static_cast<double>(kPseudoCounts)),
              kPseudoCounts};
  }
  return out;
}


TEST(MeasurementProbabilityTest, Examples) {
  EXPECT_DOUBLE_EQ(MeasurementProbability(DensityMatrix::Pure(InputKet(InputState::kZero)),
                                          Axis::kZ), 1.0);
  for (int k = 0; k < 3; ++k) {
    EXPECT_DOUBLE_EQ(MeasurementProbability(DensityMatrix::MaximallyMixed(2),
                                            static_cast<Axis>(k)), 0.5);
  }
  EXPECT_NEAR(MeasurementProbability(DensityMatrix::Pure(InputKet(InputState::kPlusX)),
                                     Axis::kX), 1.0, 1e-15);
}

TEST(SimulateCountsTest, DeterministicLimits) {
  SplitMix64 rng(1);
  const DensityMatrix zero = DensityMatrix::Pure(InputKet(InputState::kZero));
  const DensityMatrix one = DensityMatrix::Pure(InputKet(InputState::kOne));
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(SimulateCounts(zero, Axis::kZ, 1000, rng).n_up, 1000);
    EXPECT_EQ(SimulateCounts(one, Axis::kZ, 1000, rng).n_up, 0);
  }
  EXPECT_THROW(SimulateCounts(zero, Axis::kZ, 0, rng), ValidationError);
}

TEST(SimulateCountsTest, BinomialSpread) {
  const DensityMatrix mixed = DensityMatrix::MaximallyMixed(2);
  const std::int64_t n = 10000;
  int inside = 0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) {
    SplitMix64 rng = Stream(5, s);
    const CountRecord r = SimulateCounts(mixed, Axis::kX, n, rng);
    inside += std::abs(static_cast<double>(r.n_up) - 5000.0) <= 3.0 * std::sqrt(n * 0.25);
  }
  EXPECT_GE(inside, 0.99 * seeds);
}

TEST(SimulateCountsTest, ReproducibleUnderSeed) {
  SplitMix64 rng(1);
  const DensityMatrix rho = RandomState(2, rng);
  const auto a = SimulateTomography(rho, 5000, 77);
  const auto b = SimulateTomography(rho, 5000, 77);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(a[k].n_up, b[k].n_up);
}

TEST(ReconstructStateTest, NoiselessRoundTrip) {
  SplitMix64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = RandomState(2, rng);
    const auto counts = ExactCounts(rho);
    EXPECT_TRUE(ReconstructState(counts).mat().approx_equal(rho.mat(), 1e-12));
  }
}

TEST(ReconstructStateTest, ProjectsOntoBall) {
  const std::array<CountRecord, 3> all_up{{{Axis::kX, 100, 100},
                                           {Axis::kY, 100, 100},
                                           {Axis::kZ, 100, 100}}};
  const BlochVector b = BlochFromRho(ReconstructState(all_up));
  const double c = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(b.x, c, 1e-12);
  EXPECT_NEAR(b.y, c, 1e-12);
  EXPECT_NEAR(b.z, c, 1e-12);
}

TEST(ReconstructStateTest, AlwaysPhysical) {
  SplitMix64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = DensityMatrix::Pure(testing::RandomKet(2, rng));
    const auto counts = SimulateTomography(rho, 50, 1000 + i);
    EXPECT_LE(BlochFromRho(ReconstructState(counts)).norm(), 1.0 + 1e-12);
  }
}

TEST(ReconstructStateTest, Validation) {
  const std::array<CountRecord, 3> dup{{{Axis::kX, 1, 2}, {Axis::kX, 1, 2}, {Axis::kZ, 1, 2}}};
  EXPECT_THROW(ReconstructState(dup), ValidationError);
  const std::array<CountRecord, 2> missing{{{Axis::kX, 1, 2}, {Axis::kY, 1, 2}}};
  EXPECT_THROW(ReconstructState(missing), ValidationError);
  const std::array<CountRecord, 3> bad{{{Axis::kX, 3, 2}, {Axis::kY, 1, 2}, {Axis::kZ, 1, 2}}};
  EXPECT_THROW(ReconstructState(bad), ValidationError);
}

TEST(ReconstructStateTest, ErrorScalesAsInverseSqrtN) {
  // Mean trace-distance error over many seeds at three decades of N; the
  // log-log slope should be -1/2.
  const DensityMatrix rho = RhoFromBloch({0.3, -0.4, 0.5});
  const std::vector<std::int64_t> ns{1000, 10000, 100000, 1000000};
  std::vector<double> err;
  for (std::int64_t n : ns) {
    double sum = 0.0;
    const int seeds = 400;
    for (int s = 0; s < seeds; ++s) {
      sum += TraceDistance(ReconstructState(SimulateTomography(rho, n, SubSeed(n, s))), rho);
    }
    err.push_back(sum / seeds);
  }
  const double slope = (std::log(err.back()) - std::log(err.front())) /
                       (std::log(static_cast<double>(ns.back())) -
                        std::log(static_cast<double>(ns.front())));
  EXPECT_NEAR(slope, -0.5, 0.1);
}

// --- Process maps -------------------------------------------------------------

std::array<DensityMatrix, 4> Apply(const std::array<DensityMatrix, 4>& in,
                                   const std::function<DensityMatrix(const DensityMatrix&)>& f) {
  return {f(in[0]), f(in[1]), f(in[2]), f(in[3])};
}

void ExpectMap(const ProcessMap& m, const std::array<std::array<double, 3>, 3>& a,
               const std::array<double, 3>& c, double tol) {
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(m.a[r][k], a[r][k], tol) << r << k;
    EXPECT_NEAR(m.c[r], c[r], tol) << r;
  }
}

TEST(ReconstructProcessTest, IdentityChannel) {
  const auto in = ReferenceInputStates();
  const ProcessMap m = ReconstructProcess(in, in);
  ExpectMap(m, ProcessMap::Identity().a, {0, 0, 0}, 1e-12);
}

TEST(ReconstructProcessTest, PiPulseChannel) {
  const auto in = ReferenceInputStates();
  const auto out = Apply(in, [](const DensityMatrix& r) { return ApplyUnitary(r, PiPulseY()); });
  ExpectMap(ReconstructProcess(in, out), {{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}, {0, 0, 0},
            1e-12);
}

TEST(ReconstructProcessTest, PartialMeasurementOutputsReproduced) {
  const auto in = ReferenceInputStates();
  const auto out = Apply(in, [](const DensityMatrix& r) { return PartialMeasure(r, 0.8).state; });
  const ProcessMap m = ReconstructProcess(in, out);
  for (int i = 0; i < 4; ++i) {
    const BlochVector got = m.Apply(BlochFromRho(in[i]));
    const BlochVector want = BlochFromRho(out[i]);
    EXPECT_NEAR(got.x, want.x, 1e-10);
    EXPECT_NEAR(got.y, want.y, 1e-10);
    EXPECT_NEAR(got.z, want.z, 1e-10);
  }
}

TEST(ReconstructProcessTest, IdealRecoveryIsIdentity) {
  const auto in = ReferenceInputStates();
  for (double p : {0.1, 0.5, 0.9}) {
    const auto out = Apply(in, [p](const DensityMatrix& r) { return Recover(r, p).state; });
    ExpectMap(ReconstructProcess(in, out), ProcessMap::Identity().a, {0, 0, 0}, 1e-10);
  }
}

TEST(ReconstructProcessTest, RotationIsOrthogonalUnderNoise) {
  const auto in = ReferenceInputStates();
  const ComplexMatrix u = Rx(0.7) * Rz(0.3);
  std::vector<DensityMatrix> out;
  for (int i = 0; i < 4; ++i) {
    out.push_back(ReconstructState(SimulateTomography(ApplyUnitary(in[i], u), 200000, 40 + i)));
  }
  const ProcessMap m = ReconstructProcess(in, out);
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += m.a[k][r] * m.a[k][s];
      EXPECT_NEAR(dot, r == s ? 1.0 : 0.0, 0.03);
    }
  }
}

TEST(ReconstructProcessTest, DegenerateInputsRejected) {
  const DensityMatrix zero = DensityMatrix::Pure(InputKet(InputState::kZero));
  const DensityMatrix one = DensityMatrix::Pure(InputKet(InputState::kOne));
  const std::array<DensityMatrix, 4> flat{zero, one, zero, one};
  EXPECT_THROW(ReconstructProcess(flat, flat), ValidationError);
  const auto in = ReferenceInputStates();
  EXPECT_THROW(ReconstructProcess(std::span(in).first(3), std::span(in).first(3)),
               ValidationError);
}

// --- Bootstrap ------------------------------------------------------------------

TEST(BootstrapTest, ExactCountsHaveNoSpread) {
  const DensityMatrix rho = RhoFromBloch({0.1, 0.2, 0.3});
  const FidelityEstimate e = FidelityWithErrorbars(rho, ExactCounts(rho), 100, 1);
  EXPECT_LE(e.sigma, 1e-6);
  EXPECT_NEAR(e.mean, 1.0, 1e-6);
  EXPECT_THROW(FidelityWithErrorbars(rho, ExactCounts(rho), 99, 1), ValidationError);
}

TEST(BootstrapTest, ErrorBarScaleAtTypicalShots) {
  // Recovered |x> at p = 0.1 measured with 5000 shots per axis. Near a pure
  // state the infidelity is quadratic in the count noise, so pure shot noise
  // gives error bars around 1e-4; they must stay below 0.01.
  const DensityMatrix plus = DensityMatrix::Pure(InputKet(InputState::kPlusX));
  const DensityMatrix out = RecoverWithBranching(plus, 0.1).state;
  const FidelityEstimate e =
      FidelityWithErrorbars(plus, SimulateTomography(out, 5000, 3), 400, 4);
  EXPECT_GT(e.sigma, 5e-5);
  EXPECT_LT(e.sigma, 0.01);
}

TEST(BootstrapTest, SigmaScalesAsInverseSqrtN) {
  // A mixed truth keeps the fidelity away from the boundary, where its
  // fluctuations are linear in the counts.
  const DensityMatrix truth = RhoFromBloch({0.5, 0.2, -0.3});
  const DensityMatrix measured = RhoFromBloch({0.45, 0.25, -0.2});
  std::vector<double> sigma;
  for (std::int64_t n : {1000, 10000, 100000}) {
    sigma.push_back(
        FidelityWithErrorbars(truth, SimulateTomography(measured, n, 9), 2000, 10).sigma);
  }
  EXPECT_NEAR(sigma[0] / sigma[1], std::sqrt(10.0), 0.2 * std::sqrt(10.0));
  EXPECT_NEAR(sigma[1] / sigma[2], std::sqrt(10.0), 0.2 * std::sqrt(10.0));
}

}  // namespace
}  // namespace hrec
