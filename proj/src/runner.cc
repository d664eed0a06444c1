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

#include "hrec/runner.h"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "hrec/errors.h"

namespace hrec {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::int64_t kDefaultRepeatShots = 100000;
constexpr std::int64_t kDefaultTomoShots = 12000;

class OutputDir {
 public:
  explicit OutputDir(const std::string& path) : root_(path) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec || !fs::is_directory(root_)) {
      throw FileError(path, "cannot create output directory");
    }
  }

  void Write(RunOutput& out, const std::string& name, std::string_view text) {
    const std::string path = (root_ / name).string();
    WriteTextFile(path, text);
    out.files.push_back(path);
  }

 private:
  fs::path root_;
};

std::string CsvLine(std::initializer_list<std::string> fields) {
  std::string s;
  for (const std::string& f : fields) {
    if (!s.empty()) s += ',';
    s += f;
  }
  return s + '\n';
}

json RunSweep(const ExperimentConfig& cfg, OutputDir& dir, RunOutput& out) {
  SweepOptions opt;
  opt.p_values = cfg.p_values;
  opt.epsilon = cfg.epsilon;
  opt.shots = cfg.shots;
  opt.seed = cfg.seed;
  opt.noise = cfg.noise;
  opt.cpmg = cfg.cpmg;
  opt.n_bootstrap = cfg.bootstrap;
  opt.workers = cfg.workers;
  const SweepResult res = SweepStrength(opt);

  dir.Write(out, "sweep.csv", FormatSweepCsv(res.rows));
  for (const auto& [state, pts] : res.mid_trajectory) {
    dir.Write(out, "bloch_" + state + "_mid.svg",
              RenderBlochSvg(pts, "|" + state + "> after partial collapse"));
  }
  for (const auto& [state, pts] : res.final_trajectory) {
    dir.Write(out, "bloch_" + state + "_final.svg",
              RenderBlochSvg(pts, "|" + state + "> after recovery"));
  }

  int within = 0;
  json rows = json::array();
  for (const SweepRow& r : res.rows) {
    const bool ok = std::abs(r.mc_f - r.predicted_f) <= 3.0 * r.mc_sigma_f;
    within += ok;
    rows.push_back({{"state", r.state},
                    {"p", r.p},
                    {"predicted_F", r.predicted_f},
                    {"predicted_F_M", r.predicted_f_m},
                    {"mc_F", r.mc_f},
                    {"mc_sigma_F", r.mc_sigma_f},
                    {"acceptance", r.acceptance},
                    {"within_3_sigma", ok}});
  }
  return {{"rows", rows},
          {"cells", res.rows.size()},
          {"cells_within_3_sigma", within}};
}

json RunAverage(const ExperimentConfig& cfg, OutputDir& dir, RunOutput& out) {
  AverageOptions opt;
  opt.quadrature = cfg.quadrature;
  opt.nodes = cfg.nodes;
  opt.max_nodes = cfg.max_nodes;
  opt.weighting = cfg.weighting;
  opt.seed = cfg.seed;
  std::string csv = CsvLine({"p", "protocol", "weighting", "average_F"});
  json rows = json::array();
  for (double p : cfg.p_values) {
    if (p >= 1.0) throw ValidationError("average needs p < 1");
    for (Protocol proto : {Protocol::kPartialMeasurement, Protocol::kRecovery}) {
      const double f = AverageFidelity(p, proto, cfg.epsilon, opt);
      const std::string name =
          proto == Protocol::kPartialMeasurement ? "M" : "Rprime";
      const std::string weighting =
          cfg.weighting == Weighting::kHeralded ? "heralded" : "uniform";
      csv += CsvLine({FormatDouble(p), name, weighting, FormatDouble(f)});
      rows.push_back({{"p", p}, {"protocol", name}, {"average_F", f}});
    }
  }
  dir.Write(out, "average.csv", csv);
  return {{"rows", rows}};
}

json RunRepeat(const ExperimentConfig& cfg, OutputDir& dir, RunOutput& out) {
  const std::uint64_t shots =
      static_cast<std::uint64_t>(cfg.shots.value_or(kDefaultRepeatShots));
  std::string csv = CsvLine({"n", "p_segment", "success_prob", "asymptote",
                             "min_fidelity", "mc_acceptance", "mc_sigma"});
  json rows = json::array();
  for (std::size_t k = 0; k < cfg.repeats.size(); ++k) {
    const int n = cfg.repeats[k];
    const RepeatedRecoveryResult r = RepeatedRecovery(cfg.gamma_t, n);
    const BatchStats mc = RepeatedRecoveryMonteCarlo(
        cfg.gamma_t, n, shots, SubSeed(cfg.seed, k), cfg.workers);
    csv += CsvLine({std::to_string(n), FormatDouble(r.p_segment),
                    FormatDouble(r.success_prob), FormatDouble(r.asymptote),
                    FormatDouble(r.min_fidelity),
                    FormatDouble(mc.acceptance_fraction()),
                    FormatDouble(mc.acceptance_sigma())});
    rows.push_back({{"n", n},
                    {"p_segment", r.p_segment},
                    {"success_prob", r.success_prob},
                    {"asymptote", r.asymptote},
                    {"min_fidelity", r.min_fidelity},
                    {"mc_acceptance", mc.acceptance_fraction()},
                    {"mc_sigma", mc.acceptance_sigma()}});
  }
  dir.Write(out, "repeat.csv", csv);
  return {{"gamma_t", cfg.gamma_t}, {"shots", shots}, {"rows", rows}};
}

json RunDfs(const ExperimentConfig& cfg, OutputDir& dir, RunOutput& out) {
  std::string csv = CsvLine(
      {"p", "states", "max_fidelity_defect", "max_survival_defect"});
  json rows = json::array();
  for (std::size_t k = 0; k < cfg.p_values.size(); ++k) {
    const double p = cfg.p_values[k];
    if (p >= 1.0) throw ValidationError("dfs needs p < 1");
    double max_f = 0.0;
    double max_s = 0.0;
    for (int s = 0; s < cfg.dfs_states; ++s) {
      SplitMix64 rng = Stream(SubSeed(cfg.seed, k), static_cast<std::uint64_t>(s));
      const double theta = std::acos(2.0 * rng.uniform() - 1.0);
      const double phase = 2.0 * std::numbers::pi * rng.uniform();
      const DfsResult r = DfsTwoQubit(p, std::cos(theta / 2.0),
                                      std::polar(std::sin(theta / 2.0), phase));
      max_f = std::max(max_f, std::abs(r.fidelity - 1.0));
      max_s = std::max(max_s, std::abs(r.survival - (1.0 - p)));
    }
    csv += CsvLine({FormatDouble(p), std::to_string(cfg.dfs_states),
                    FormatDouble(max_f), FormatDouble(max_s)});
    rows.push_back({{"p", p},
                    {"max_fidelity_defect", max_f},
                    {"max_survival_defect", max_s}});
  }
  dir.Write(out, "dfs.csv", csv);
  return {{"rows", rows}};
}

json ProcessJson(const ProcessMap& m) {
  return {{"a", m.a}, {"c", m.c}};
}

std::string ProcessCsvLine(double p, const std::string& source,
                           const ProcessMap& m) {
  std::string s = FormatDouble(p) + "," + source;
  for (const auto& row : m.a) {
    for (double v : row) s += "," + FormatDouble(v);
  }
  for (double v : m.c) s += "," + FormatDouble(v);
  return s + '\n';
}

json RunTomoDemo(const ExperimentConfig& cfg, OutputDir& dir, RunOutput& out) {
  const std::int64_t shots = cfg.shots.value_or(kDefaultTomoShots);
  const auto inputs = ReferenceInputStates();
  std::string csv =
      "p,source,a00,a01,a02,a10,a11,a12,a20,a21,a22,c0,c1,c2\n";
  json rows = json::array();
  for (std::size_t k = 0; k < cfg.p_values.size(); ++k) {
    const double p = cfg.p_values[k];
    std::vector<DensityMatrix> exact;
    std::vector<DensityMatrix> measured;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      exact.push_back(RecoverWithBranching(inputs[i], p, cfg.epsilon).state);
      SequenceOptions opt;
      opt.p = p;
      opt.eps = cfg.epsilon;
      opt.cpmg = cfg.cpmg;
      const SequenceTomography t = RunSequenceTomography(
          kReferenceInputs[i], opt, cfg.noise, shots,
          SubSeed(SubSeed(cfg.seed, k), i), cfg.workers);
      measured.push_back(ReconstructState(t.records));
    }
    const ProcessMap exact_map = ReconstructProcess(inputs, exact);
    const ProcessMap mc_map = ReconstructProcess(inputs, measured);
    csv += ProcessCsvLine(p, "closed_form", exact_map);
    csv += ProcessCsvLine(p, "tomography", mc_map);
    rows.push_back({{"p", p},
                    {"closed_form", ProcessJson(exact_map)},
                    {"tomography", ProcessJson(mc_map)}});
  }
  dir.Write(out, "tomo_demo.csv", csv);
  return {{"shots_per_input", shots}, {"rows", rows}};
}

}  // namespace

RunOutput RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  OutputDir dir(cfg.output_path);
  RunOutput out;
  json results;
  switch (cfg.experiment) {
    case ExperimentKind::kSweep: results = RunSweep(cfg, dir, out); break;
    case ExperimentKind::kAverage: results = RunAverage(cfg, dir, out); break;
    case ExperimentKind::kRepeat: results = RunRepeat(cfg, dir, out); break;
    case ExperimentKind::kDfs: results = RunDfs(cfg, dir, out); break;
    case ExperimentKind::kTomoDemo: results = RunTomoDemo(cfg, dir, out); break;
  }
  out.metadata = RunMetadata(cfg, results);
  std::string name(ExperimentName(cfg.experiment));
  if (name == "tomo-demo") name = "tomo_demo";
  dir.Write(out, name + ".json", out.metadata.dump(2) + "\n");
  return out;
}

}  // namespace hrec
