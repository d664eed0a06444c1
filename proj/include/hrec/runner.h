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

#ifndef HREC_RUNNER_H_
#define HREC_RUNNER_H_

#include <string>
#include <vector>

#include "json.hpp"

#include "hrec/report.h"

namespace hrec {

struct RunOutput {
  nlohmann::json metadata;          // also written as <experiment>.json
  std::vector<std::string> files;   // everything written, in order
};

// Runs the configured experiment and writes its artifacts into
// cfg.output_path (created if missing). Identical configs produce
// byte-identical files.
RunOutput RunExperiment(const ExperimentConfig& cfg);

// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitAccuracy = 3;
inline constexpr int kExitIo = 4;

}  // namespace hrec

#endif  // HREC_RUNNER_H_
