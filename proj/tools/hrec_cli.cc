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

// hrec: command-line driver for the heralded-recovery experiments.
//
//   hrec sweep --config cfg.json --shots 4000 --output-path out/
//
// Flags override values loaded from --config; both use the same field names
// (dashes on the command line, underscores in JSON).

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hrec/errors.h"
#include "hrec/runner.h"

namespace {

using nlohmann::json;

// Storage for the overriding flags. Only flags that were actually given are
// copied into the override document.
struct Flags {
  std::string config;
  std::vector<double> p_values;
  double epsilon = 0.0;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::string noise;
  double noise_sigma = 0.0;
  double noise_width = 0.0;
  double phi_offset = 0.0;
  double pi_pulse_angle_error = 0.0;
  bool cpmg = true;
  std::string output_path;
  int bootstrap = 0;
  std::string quadrature;
  std::int64_t nodes = 0;
  std::int64_t max_nodes = 0;
  std::string weighting;
  double gamma_t = 0.0;
  std::vector<int> repeats;
  int dfs_states = 0;
  unsigned workers = 0;
};

struct Binding {
  CLI::Option* option;
  std::function<void(json&)> store;
};

template <typename T>
void Bind(CLI::App* sub, std::vector<Binding>& out, const std::string& key,
          T& var, const std::string& help) {
  std::string flag = "--" + key;
  for (char& c : flag) {
    if (c == '_') c = '-';
  }
  CLI::Option* opt = sub->add_option(flag, var, help);
  out.push_back({opt, [key, &var](json& doc) { doc[key] = var; }});
}

void AddFlags(CLI::App* sub, Flags& f, std::vector<Binding>& b) {
  sub->add_option("--config", f.config, "JSON config file")
      ->check(CLI::ExistingFile);
  Bind(sub, b, "p_values", f.p_values, "measurement strengths in [0,1]");
  Bind(sub, b, "epsilon", f.epsilon, "branching ratio back into |0>");
  Bind(sub, b, "shots", f.shots, "Monte Carlo shots (sweep: per p)");
  Bind(sub, b, "seed", f.seed, "master seed");
  Bind(sub, b, "noise", f.noise, "phase noise: none|gaussian|uniform");
  Bind(sub, b, "noise_sigma", f.noise_sigma, "gaussian phase sigma");
  Bind(sub, b, "noise_width", f.noise_width, "uniform phase half-width");
  Bind(sub, b, "phi_offset", f.phi_offset, "static phase offset");
  Bind(sub, b, "pi_pulse_angle_error", f.pi_pulse_angle_error,
       "over-rotation of every pi pulse (rad)");
  Bind(sub, b, "cpmg", f.cpmg, "use the CPMG echo spacing (true|false)");
  Bind(sub, b, "output_path", f.output_path, "output directory");
  Bind(sub, b, "bootstrap", f.bootstrap, "bootstrap resamples");
  Bind(sub, b, "quadrature", f.quadrature, "fibonacci|random");
  Bind(sub, b, "nodes", f.nodes, "initial quadrature nodes");
  Bind(sub, b, "max_nodes", f.max_nodes, "node cap for the convergence check");
  Bind(sub, b, "weighting", f.weighting, "uniform|heralded");
  Bind(sub, b, "gamma_t", f.gamma_t, "total decay Gamma*t");
  Bind(sub, b, "repeats", f.repeats, "segment counts n");
  Bind(sub, b, "dfs_states", f.dfs_states, "random logical states per p");
  Bind(sub, b, "workers", f.workers, "worker threads (0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heralded recovery from partial collapse: simulation driver"};
  app.set_version_flag("--version", std::string(hrec::kVersion));
  app.require_subcommand(1);

  Flags flags;
  std::vector<Binding> bindings;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"sweep", "Monte Carlo sweep over measurement strength"},
      {"average", "state-averaged fidelities"},
      {"repeat", "repeated partial recovery under continuous decay"},
      {"dfs", "two-qubit encoded leakage check"},
      {"tomo-demo", "process tomography of the recovery map"}};
  for (const auto& [name, help] : commands) {
    AddFlags(app.add_subcommand(name, help), flags, bindings);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? hrec::kExitOk : hrec::kExitConfig;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    hrec::ExperimentConfig cfg =
        flags.config.empty() ? hrec::ExperimentConfig{}
                             : hrec::LoadConfigFile(flags.config);
    json overrides = json::object();
    overrides["experiment"] = name;
    for (const Binding& b : bindings) {
      if (b.option->count() > 0) b.store(overrides);
    }
    hrec::ApplyConfigJson(overrides, cfg);
    const hrec::RunOutput out = hrec::RunExperiment(cfg);
    for (const std::string& path : out.files) std::cout << path << "\n";
    return hrec::kExitOk;
  } catch (const hrec::FileError& e) {
    std::cerr << "hrec: " << e.what() << "\n";
    return hrec::kExitIo;
  } catch (const hrec::AccuracyError& e) {
    std::cerr << "hrec: " << e.what() << "\n";
    return hrec::kExitAccuracy;
  } catch (const hrec::Error& e) {
    std::cerr << "hrec: " << e.what() << "\n";
    return hrec::kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "hrec: bad config: " << e.what() << "\n";
    return hrec::kExitConfig;
  }
}
