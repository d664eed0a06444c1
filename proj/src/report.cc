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

#include "hrec/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hrec/errors.h"

namespace hrec {

namespace {

using nlohmann::json;

constexpr std::string_view kSweepHeader =
    "state,p,predicted_F,predicted_F_M,mc_F,mc_sigma_F,acceptance";

// Bloch-sphere viewport.
constexpr double kCanvas = 400.0;
constexpr double kCenter = 200.0;
constexpr double kRadius = 150.0;
constexpr double kViewAzimuth = std::numbers::pi / 6.0;
constexpr double kViewElevation = std::numbers::pi / 9.0;

std::string_view DistributionName(PhaseDistribution d) {
  switch (d) {
    case PhaseDistribution::kNone: return "none";
    case PhaseDistribution::kGaussian: return "gaussian";
    case PhaseDistribution::kUniform: return "uniform";
  }
  return "none";
}

PhaseDistribution ParseDistribution(std::string_view s) {
  if (s == "none") return PhaseDistribution::kNone;
  if (s == "gaussian") return PhaseDistribution::kGaussian;
  if (s == "uniform") return PhaseDistribution::kUniform;
  throw ValidationError("unknown noise distribution '" + std::string(s) + "'");
}

std::string_view QuadratureName(Quadrature q) {
  return q == Quadrature::kFibonacci ? "fibonacci" : "random";
}

Quadrature ParseQuadrature(std::string_view s) {
  if (s == "fibonacci") return Quadrature::kFibonacci;
  if (s == "random") return Quadrature::kRandom;
  throw ValidationError("unknown quadrature '" + std::string(s) + "'");
}

std::string_view WeightingName(Weighting w) {
  return w == Weighting::kHeralded ? "heralded" : "uniform";
}

Weighting ParseWeighting(std::string_view s) {
  if (s == "heralded") return Weighting::kHeralded;
  if (s == "uniform") return Weighting::kUniform;
  throw ValidationError("unknown weighting '" + std::string(s) + "'");
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

double ParseNumber(const std::string& field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    throw ValidationError("bad number '" + field + "' in CSV");
  }
  if (used != field.size()) {
    throw ValidationError("bad number '" + field + "' in CSV");
  }
  return v;
}

}  // namespace

std::string_view ExperimentName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kSweep: return "sweep";
    case ExperimentKind::kAverage: return "average";
    case ExperimentKind::kRepeat: return "repeat";
    case ExperimentKind::kDfs: return "dfs";
    case ExperimentKind::kTomoDemo: return "tomo-demo";
  }
  return "sweep";
}

ExperimentKind ParseExperiment(std::string_view name) {
  for (ExperimentKind k :
       {ExperimentKind::kSweep, ExperimentKind::kAverage, ExperimentKind::kRepeat,
        ExperimentKind::kDfs, ExperimentKind::kTomoDemo}) {
    if (ExperimentName(k) == name) return k;
  }
  throw ValidationError("unknown experiment '" + std::string(name) + "'");
}

void ExperimentConfig::Validate() const {
  if (p_values.empty()) throw ValidationError("p_values is empty");
  for (double p : p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p_values must lie in [0, 1]");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ValidationError("epsilon must lie in [0, 1]");
  }
  if (shots && *shots < 1) throw ValidationError("shots must be >= 1");
  noise.Validate();
  if (bootstrap < kMinBootstrap) throw ValidationError("bootstrap must be >= 100");
  if (nodes < 100) throw ValidationError("nodes must be >= 100");
  if (max_nodes < nodes) throw ValidationError("max_nodes must be >= nodes");
  if (!(gamma_t >= 0.0)) throw ValidationError("gamma_t must be >= 0");
  for (int n : repeats) {
    if (n < 1) throw ValidationError("repeats must be >= 1");
  }
  if (dfs_states < 1) throw ValidationError("dfs_states must be >= 1");
  if (output_path.empty()) throw ValidationError("output_path is empty");
}

void ApplyConfigJson(const json& doc, ExperimentConfig& cfg) {
  if (!doc.is_object()) throw ValidationError("config must be a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "experiment") {
        cfg.experiment = ParseExperiment(value.get<std::string>());
      } else if (key == "p_values") {
        cfg.p_values = value.get<std::vector<double>>();
      } else if (key == "epsilon") {
        cfg.epsilon = value.get<double>();
      } else if (key == "shots") {
        if (value.is_null()) {
          cfg.shots.reset();
        } else {
          cfg.shots = value.get<std::int64_t>();
        }
      } else if (key == "seed") {
        if (!value.is_number_integer()) throw ValidationError("seed must be an integer");
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "noise") {
        cfg.noise.distribution = ParseDistribution(value.get<std::string>());
      } else if (key == "noise_sigma") {
        cfg.noise.sigma = value.get<double>();
      } else if (key == "noise_width") {
        cfg.noise.width = value.get<double>();
      } else if (key == "phi_offset") {
        cfg.noise.phi_offset = value.get<double>();
      } else if (key == "pi_pulse_angle_error") {
        cfg.noise.pi_pulse_angle_error = value.get<double>();
      } else if (key == "cpmg") {
        cfg.cpmg = value.get<bool>();
      } else if (key == "output_path") {
        cfg.output_path = value.get<std::string>();
      } else if (key == "bootstrap") {
        cfg.bootstrap = value.get<int>();
      } else if (key == "quadrature") {
        cfg.quadrature = ParseQuadrature(value.get<std::string>());
      } else if (key == "nodes") {
        cfg.nodes = value.get<std::int64_t>();
      } else if (key == "max_nodes") {
        cfg.max_nodes = value.get<std::int64_t>();
      } else if (key == "weighting") {
        cfg.weighting = ParseWeighting(value.get<std::string>());
      } else if (key == "gamma_t") {
        cfg.gamma_t = value.get<double>();
      } else if (key == "repeats") {
        cfg.repeats = value.get<std::vector<int>>();
      } else if (key == "dfs_states") {
        cfg.dfs_states = value.get<int>();
      } else if (key == "workers") {
        cfg.workers = value.get<unsigned>();
      } else {
        throw ValidationError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config type error: ") + e.what());
  }
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError(path, "cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  ExperimentConfig cfg;
  ApplyConfigJson(doc, cfg);
  return cfg;
}

json ConfigToJson(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = ExperimentName(cfg.experiment);
  j["p_values"] = cfg.p_values;
  j["epsilon"] = cfg.epsilon;
  j["shots"] = cfg.shots ? json(*cfg.shots) : json(nullptr);
  j["seed"] = cfg.seed;
  j["noise"] = DistributionName(cfg.noise.distribution);
  j["noise_sigma"] = cfg.noise.sigma;
  j["noise_width"] = cfg.noise.width;
  j["phi_offset"] = cfg.noise.phi_offset;
  j["pi_pulse_angle_error"] = cfg.noise.pi_pulse_angle_error;
  j["cpmg"] = cfg.cpmg;
  j["output_path"] = cfg.output_path;
  j["bootstrap"] = cfg.bootstrap;
  j["quadrature"] = QuadratureName(cfg.quadrature);
  j["nodes"] = cfg.nodes;
  j["max_nodes"] = cfg.max_nodes;
  j["weighting"] = WeightingName(cfg.weighting);
  j["gamma_t"] = cfg.gamma_t;
  j["repeats"] = cfg.repeats;
  j["dfs_states"] = cfg.dfs_states;
  j["workers"] = cfg.workers;
  return j;
}

json RunMetadata(const ExperimentConfig& cfg, const json& results) {
  json j;
  j["tool"] = "hrec";
  j["version"] = kVersion;
  j["experiment"] = ExperimentName(cfg.experiment);
  j["seed"] = cfg.seed;
  j["config"] = ConfigToJson(cfg);
  j["results"] = results;
  return j;
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string FormatSweepCsv(std::span<const SweepRow> rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += r.state;
    for (double v : {r.p, r.predicted_f, r.predicted_f_m, r.mc_f, r.mc_sigma_f,
                     r.acceptance}) {
      out += ',';
      out += FormatDouble(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> ParseSweepCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw ValidationError("sweep CSV header mismatch");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 7) throw ValidationError("sweep CSV row needs 7 fields");
    SweepRow r;
    r.state = fields[0];
    r.p = ParseNumber(fields[1]);
    r.predicted_f = ParseNumber(fields[2]);
    r.predicted_f_m = ParseNumber(fields[3]);
    r.mc_f = ParseNumber(fields[4]);
    r.mc_sigma_f = ParseNumber(fields[5]);
    r.acceptance = ParseNumber(fields[6]);
    rows.push_back(r);
  }
  return rows;
}

namespace {

std::string EscapeXml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgPoint ProjectBloch(const BlochVector& b) {
  const double ca = std::cos(kViewAzimuth);
  const double sa = std::sin(kViewAzimuth);
  const double ce = std::cos(kViewElevation);
  const double se = std::sin(kViewElevation);
  const double right = -sa * b.x + ca * b.y;
  const double up = -se * ca * b.x - se * sa * b.y + ce * b.z;
  return {kCenter + kRadius * right, kCenter - kRadius * up};
}

std::string RenderBlochSvg(std::span<const BlochVector> points,
                           std::string_view title) {
  if (points.empty()) throw ValidationError("Bloch trajectory is empty");
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Fixed(kCanvas) +
       "\" height=\"" + Fixed(kCanvas) + "\" viewBox=\"0 0 " + Fixed(kCanvas) +
       " " + Fixed(kCanvas) + "\">\n";
  if (!title.empty()) {
    s += "<title>" + EscapeXml(title) + "</title>\n";
  }
  s += "<circle class=\"sphere\" cx=\"" + Fixed(kCenter) + "\" cy=\"" +
       Fixed(kCenter) + "\" r=\"" + Fixed(kRadius) +
       "\" fill=\"none\" stroke=\"#888\"/>\n";

  // Equator as a sampled polyline, then the three axes.
  std::string equator;
  for (int k = 0; k <= 72; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 72.0;
    const SvgPoint q = ProjectBloch({std::cos(a), std::sin(a), 0.0});
    equator += Fixed(q.x) + "," + Fixed(q.y) + " ";
  }
  equator.pop_back();
  s += "<polyline class=\"equator\" points=\"" + equator +
       "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  const char* axis_names[] = {"x", "y", "z"};
  for (int k = 0; k < 3; ++k) {
    BlochVector tip;
    if (k == 0) tip.x = 1.0;
    if (k == 1) tip.y = 1.0;
    if (k == 2) tip.z = 1.0;
    const SvgPoint q = ProjectBloch(tip);
    s += "<line class=\"axis\" x1=\"" + Fixed(kCenter) + "\" y1=\"" +
         Fixed(kCenter) + "\" x2=\"" + Fixed(q.x) + "\" y2=\"" + Fixed(q.y) +
         "\" stroke=\"#bbb\"/>\n";
    s += "<text x=\"" + Fixed(q.x + 4.0) + "\" y=\"" + Fixed(q.y - 4.0) +
         "\" font-size=\"12\">" + axis_names[k] + "</text>\n";
  }

  std::string guide;
  for (const BlochVector& b : points) {
    const SvgPoint q = ProjectBloch(b);
    guide += Fixed(q.x) + "," + Fixed(q.y) + " ";
  }
  guide.pop_back();
  s += "<polyline class=\"guide\" points=\"" + guide +
       "\" fill=\"none\" stroke=\"#1f77b4\"/>\n";
  for (const BlochVector& b : points) {
    const SvgPoint q = ProjectBloch(b);
    s += "<circle class=\"point\" cx=\"" + Fixed(q.x) + "\" cy=\"" + Fixed(q.y) +
         "\" r=\"3.000\" fill=\"#d62728\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError(path, "cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw FileError(path, "write failed");
}

void WriteBlochSvg(std::span<const BlochVector> points, const std::string& path,
                   std::string_view title) {
  WriteTextFile(path, RenderBlochSvg(points, title));
}

}  // namespace hrec
