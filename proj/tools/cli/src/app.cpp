// Copyright 2026 The qchan Authors
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

#include "qchan/cli/app.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "qchan/cli/svg.hpp"
#include "qchan/errors.hpp"
#include "qchan/geometry.hpp"
#include "qchan/metrics.hpp"

namespace qchan::cli {

namespace {

constexpr const char* kUnitsBanner = "units: hbar = k_B = 1";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string vec(const Vec3& v) {
  return fmt::format("({}, {}, {})", format_value(v(0)), format_value(v(1)), format_value(v(2)));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  f.close();
  if (!f) throw IoError("error writing " + path.string());
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

KrausSet kraus_of(const ChannelSpec& spec, double zero_threshold) {
  if (const auto* k = std::get_if<KrausSet>(&spec.channel.representation())) return *k;
  return canonical_kraus(spec.channel.choi(), zero_threshold);
}

std::string raw_spec_json(const std::string& family, const nlohmann::json& params) {
  return nlohmann::json{{"family", family}, {"params", params}}.dump(2) + "\n";
}

int run_figures(const std::string& which, const std::string& outdir, std::ostream& out, std::ostream& err) {
  std::vector<FigureDefinition> chosen;
  for (const auto& fig : figure_definitions()) {
    if (which == "all" || which == fig.which) chosen.push_back(fig);
  }
  if (chosen.empty()) {
    err << "figures: unknown figure \"" << which << "\" (use 1a, 1b, 2a, 2b or all)\n";
    return kSpecError;
  }
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec || !std::filesystem::is_directory(outdir)) throw IoError("cannot create output directory " + outdir);

  int code = kOk;
  const auto axes = figure_axes();
  for (const auto& fig : chosen) {
    const SweepResult sweep = run_sweep(figure_spec(fig), axes, {fig.metric}, kZeroEigenvalueThreshold);
    for (const auto& line : sweep.failures) err << line << '\n';
    if (!sweep.ok()) code = kMetricFailure;
    const std::filesystem::path base = std::filesystem::path(outdir) / ("fig" + fig.which);
    write_file(base.string() + ".csv", to_csv(sweep));
    write_file(base.string() + ".svg", render_heatmap(sweep, axes, axes.size(), fig.title));
    out << "wrote " << base.string() << ".csv and " << base.string() << ".svg\n";
  }
  return code;
}

std::string probe_report(const ChannelSpec& a, const ChannelSpec& b, double lambda, std::uint64_t seed) {
  ProbeOptions opts;
  opts.omega = a.physical->omega;
  opts.seed = seed;
  const auto res = sgad_convexity_probe(a.channel.choi(), b.channel.choi(), lambda, opts);
  std::string verdict = "inconclusive";
  if (res.residual <= 1e-9) verdict = "mixture is an SGAD channel";
  if (res.residual > 1e-3) verdict = "mixture is not an SGAD channel";
  std::string s;
  s += fmt::format("{}\n", kUnitsBanner);
  s += fmt::format("lambda: {}\n", format_value(lambda));
  s += fmt::format("residual: {}\n", format_value(res.residual));
  s += fmt::format("best fit: gamma0_t={} T={} r={} phi={} (omega={})\n", format_value(res.best_fit.gamma0_t),
                   format_value(res.best_fit.temperature), format_value(res.best_fit.squeeze_r),
                   format_value(res.best_fit.squeeze_phi), format_value(opts.omega));
  s += fmt::format("best start: {} of {}\n", res.best_start, opts.starts);
  s += fmt::format("verdict: {}\n", verdict);
  return s;
}

}  // namespace

const std::vector<FigureDefinition>& figure_definitions() {
  static const std::vector<FigureDefinition> figs{
      {"1a", "entropy", 0.3, "Choi entropy (bits), phi = 0.3"},
      {"1b", "concurrence", 0.3, "Choi concurrence, phi = 0.3"},
      {"2a", "avg_gate_fidelity", 0.3, "Average gate fidelity, phi = 0.3"},
      {"2b", "kappa", 0.0, "Channel fidelity kappa (bits), phi = 0"},
  };
  return figs;
}

ChannelSpec figure_spec(const FigureDefinition& fig) {
  return parse_spec({{"family", "sgad"},
                     {"params", {{"gamma0", 0.1}, {"omega", 0.01}, {"t", 0.5}, {"phi", fig.phi}}}});
}

std::vector<GridAxis> figure_axes() { return {{"T", 0.0, 2.0, 0.05}, {"r", 0.0, 2.0, 0.05}}; }

std::string describe_report(const ChannelSpec& spec, double zero_threshold) {
  std::string s;
  s += fmt::format("family: {}\n", spec.family);
  s += fmt::format("{}\n", kUnitsBanner);
  if (spec.physical) {
    const PhysicalParams& p = *spec.physical;
    const DerivedParams d = derive_params(p);
    s += fmt::format("parameters: gamma0={} omega={} T={} r={} phi={} t={}\n", format_value(p.gamma0),
                     format_value(p.omega), format_value(p.temperature), format_value(p.squeeze_r),
                     format_value(p.squeeze_phi), format_value(p.time));
    s += fmt::format("derived: N_th={} N={} a={} M=({}, {})\n", format_value(d.n_thermal), format_value(d.n_eff),
                     format_value(d.a), format_value(d.m.real()), format_value(d.m.imag()));
  }
  const BlochAffineMap map = spec.channel.bloch();
  s += "bloch map:\n";
  for (int i = 0; i < 3; ++i) {
    s += fmt::format("  {} [{}, {}, {}]\n", i == 0 ? "linear:" : "       ", format_value(map.linear(i, 0)),
                     format_value(map.linear(i, 1)), format_value(map.linear(i, 2)));
  }
  s += fmt::format("  shift:  {}\n", vec(map.shift));

  const ChoiMatrix choi = spec.channel.choi();
  const RankSpectrum rank = channel_rank(choi, zero_threshold);
  s += fmt::format("choi eigenvalues: {} {} {} {}\n", format_value(rank.eigenvalues[0]),
                   format_value(rank.eigenvalues[1]), format_value(rank.eigenvalues[2]),
                   format_value(rank.eigenvalues[3]));
  s += fmt::format("rank: {} (relative zero threshold {})\n", rank.rank, format_value(zero_threshold));

  const Signature sig = signature(choi);
  s += fmt::format("signature: ({}, {}, {}) pauli-diagonal: {}\n", format_value(sig.a), format_value(sig.b),
                   format_value(sig.c), yes_no(sig.valid));
  if (sig.valid) {
    const PauliWeights w = pauli_decompose(sig);
    s += fmt::format("pauli weights: alpha={} beta={} gamma={} delta={} in simplex: {}\n", format_value(w.alpha),
                     format_value(w.beta), format_value(w.gamma), format_value(w.delta), yes_no(w.member));
  }

  const MetricReport m = metric_report(spec.channel);
  s += "metrics:\n";
  s += fmt::format("  entropy_bits: {}\n", format_value(m.entropy_bits));
  s += fmt::format("  concurrence: {}\n", format_value(m.concurrence));
  s += fmt::format("  avg_gate_fidelity: {}\n", format_value(m.avg_gate_fidelity));
  s += fmt::format("  gate_fidelity_max: {} at {} (degenerate: every channel has a fixed state)\n",
                   format_value(m.gate_fidelity.max), vec(m.gate_fidelity.argmax));
  s += fmt::format("  gate_fidelity_min: {} at {}\n", format_value(m.gate_fidelity.min), vec(m.gate_fidelity.argmin));
  s += fmt::format("  channel_fidelity_kappa: {} along {}\n", format_value(m.channel_fidelity.kappa),
                   vec(m.channel_fidelity.direction));
  s += fmt::format("  trace_distance: {} along {}\n", format_value(m.trace_distance.value),
                   vec(m.trace_distance.direction));
  s += "diagnostics:\n";
  s += fmt::format("  gate_fidelity: {} grid points, {} refinement sweeps\n", m.gate_fidelity.grid_points,
                   m.gate_fidelity.refinement_sweeps);
  s += fmt::format("  kappa: {} grid points, {} refinement sweeps\n", m.channel_fidelity.grid_points,
                   m.channel_fidelity.refinement_sweeps);
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-qubit channel toolkit: Choi/Kraus analysis, channel geometry and metrics"};
  app.require_subcommand(1);

  std::vector<std::string> specs;
  std::vector<std::string> grids;
  std::string metrics_list;
  std::string out_path;
  std::string outdir = ".";
  std::string which;
  std::uint64_t seed = ProbeOptions{}.seed;
  double tol = kZeroEigenvalueThreshold;
  double lambda = 0.5;

  auto* describe = app.add_subcommand("describe", "Report derived parameters, Choi analysis and metrics");
  describe->add_option("--spec", specs, "Channel spec (JSON)")->required()->expected(1);
  describe->add_option("--tol", tol, "Relative zero threshold for the rank");
  describe->add_option("--out", out_path, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate metrics over a (T, r, phi, t) grid as CSV");
  sweep->add_option("--spec", specs, "Channel spec (JSON)")->required()->expected(1);
  sweep->add_option("--grid", grids, "Axis NAME=START:STOP:STEP (at most two)");
  sweep->add_option("--metrics", metrics_list, "Comma-separated metrics");
  sweep->add_option("--out", out_path, "Output CSV (default stdout)");
  sweep->add_option("--tol", tol, "Relative zero threshold for the rank");

  auto* figures = app.add_subcommand("figures", "Write fig{1a,1b,2a,2b}.csv/.svg");
  figures->add_option("which", which, "1a, 1b, 2a, 2b or all")->required();
  figures->add_option("--outdir", outdir, "Output directory");

  auto* probe = app.add_subcommand("probe-convexity", "Fit an SGAD channel to a mixture of two SGAD channels");
  probe->add_option("--spec", specs, "The two SGAD-family specs")->required()->expected(2);
  probe->add_option("--lambda", lambda, "Weight of the first spec")->check(CLI::Range(0.0, 1.0));
  probe->add_option("--seed", seed, "Seed for the random starts");
  probe->add_option("--out", out_path, "Output file (default stdout)");

  auto* kraus = app.add_subcommand("kraus", "Canonical Kraus operators as a raw_kraus spec");
  kraus->add_option("--spec", specs, "Channel spec (JSON)")->required()->expected(1);
  kraus->add_option("--tol", tol, "Relative zero threshold");
  kraus->add_option("--out", out_path, "Output file (default stdout)");

  auto* choi = app.add_subcommand("choi", "Choi matrix as a raw_choi spec");
  choi->add_option("--spec", specs, "Channel spec (JSON)")->required()->expected(1);
  choi->add_option("--out", out_path, "Output file (default stdout)");

  auto* equivalence = app.add_subcommand("equivalence", "Connecting unitary between two Kraus sets");
  equivalence->add_option("--spec", specs, "The two channel specs")->required()->expected(2);
  equivalence->add_option("--tol", tol, "Residual tolerance (default 1e-8)");
  equivalence->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSpecError;
  }

  try {
    if (*figures) return run_figures(which, outdir, out, err);

    std::vector<ChannelSpec> parsed;
    for (const auto& path : specs) parsed.push_back(load_spec(path));

    if (*describe) {
      emit(describe_report(parsed[0], tol), out_path, out);
      return kOk;
    }
    if (*sweep) {
      if (grids.size() > 2) throw SpecError("--grid: at most two axes");
      std::vector<GridAxis> axes;
      for (const auto& g : grids) axes.push_back(parse_grid_axis(g));
      const auto metrics = metrics_list.empty() ? default_metrics() : parse_metric_list(metrics_list);
      const SweepResult result = run_sweep(parsed[0], axes, metrics, tol);
      for (const auto& line : result.failures) err << line << '\n';
      emit(to_csv(result), out_path, out);
      return result.ok() ? kOk : kMetricFailure;
    }
    if (*probe) {
      for (std::size_t i = 0; i < 2; ++i) {
        if (!parsed[i].physical) {
          throw SpecError(specs[i] + ": probe-convexity needs an SGAD-family spec (sgad, ad or physical gad)");
        }
      }
      emit(probe_report(parsed[0], parsed[1], lambda, seed), out_path, out);
      return kOk;
    }
    if (*kraus) {
      nlohmann::json ops = nlohmann::json::array();
      for (const Mat2& e : canonical_kraus(parsed[0].channel.choi(), tol).operators) ops.push_back(matrix_to_json(e));
      emit(raw_spec_json("raw_kraus", {{"operators", ops}}), out_path, out);
      return kOk;
    }
    if (*choi) {
      emit(raw_spec_json("raw_choi", {{"matrix", matrix_to_json(parsed[0].channel.choi().matrix())}}), out_path,
           out);
      return kOk;
    }
    if (*equivalence) {
      const double residual_tol = equivalence->count("--tol") ? tol : 1e-8;
      const auto u = connecting_unitary(kraus_of(parsed[0], kZeroEigenvalueThreshold),
                                        kraus_of(parsed[1], kZeroEigenvalueThreshold), residual_tol);
      nlohmann::json doc{{"equivalent", u.has_value()}};
      if (u) doc["unitary"] = matrix_to_json(*u);
      emit(doc.dump(2) + "\n", out_path, out);
      return kOk;
    }
  } catch (const SpecError& e) {
    err << "spec error: " << e.what() << '\n';
    return kSpecError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "metric failure: " << e.what() << '\n';
    return kMetricFailure;
  }
  return kOk;
}

}  // namespace qchan::cli
