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

// Counter-based seeding. Work item k of a run with master seed s draws from
// its own stream Stream(s, k), so results do not depend on how items are
// distributed over threads.

#ifndef HREC_RNG_H_
#define HREC_RNG_H_

#include <cstdint>
#include <functional>
#include <limits>

namespace hrec {

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// SplitMix64 generator; satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return Mix64(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Independent stream for work item `index` under `seed`.
SplitMix64 Stream(std::uint64_t seed, std::uint64_t index);

// Derives a sub-seed for a named sub-task (e.g. one sweep cell).
std::uint64_t SubSeed(std::uint64_t seed, std::uint64_t tag);

// Runs body(chunk) for chunk in [0, n_chunks) on up to `workers` threads
// (0 = hardware concurrency). Chunks are claimed dynamically; callers must
// make their reductions independent of execution order.
void ParallelChunks(std::uint64_t n_chunks, unsigned workers,
                    const std::function<void(std::uint64_t)>& body);

}  // namespace hrec

#endif  // HREC_RNG_H_
