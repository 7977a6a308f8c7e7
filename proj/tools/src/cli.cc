// Copyright 2026 The Pairshrink Authors.
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


#include "pairshrink_cli/cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pairshrink/pairshrink.h"

namespace pairshrink::cli {
namespace {

using nlohmann::json;

constexpr const char* kFooter = R"(Exit codes: 0 ok, 2 usage or data error, 3 numerical failure.

JSON documents (all vectors are in "items" order):
  model     {"items", "gamma", "epsilon", "loglik"}
  shrunk    model + {"gamma_mle", "gamma_shr", "scheme", "nu", "prior", "implicit"}
            ("gamma" equals "gamma_shr")
  cov       {"scheme", "inverse", "matrix"}
  replicates {"scheme", "K", "seed", "gammas"}
  report    {"folds", "runs", "seed", "scores": [{"scheme", "win_rate_mse",
            "matchup_brier", "win_rate_improvement", "matchup_improvement",
            "alpha"?, "beta"?}]}
  curve     [{"fraction", "train_size", "win_rate_mse_mle", "win_rate_mse_shr",
            "win_rate_ratio", "matchup_brier_mle", "matchup_brier_shr",
            "matchup_ratio"}]
  truth     {"items", "gamma"}
See docs/schemas.md for details.)";

// Settings shared by the shrink and evaluate subcommands.
struct ShrinkFlags {
  std::string scheme = "fisher-expected";
  int replicates = kDefaultReplicates;
  std::optional<double> nu;
  std::vector<double> nu_grid;
  std::string prior = "uniform";
  std::string partition;
  std::string prior_form = "dirichlet";
  bool implicit = false;
};

struct Flags {
  std::string input;
  std::string out;
  std::string model;
  std::string truth;
  std::string format;
  std::uint64_t seed = 0;
  double epsilon = 1e-6;
  int max_iter = FitConfig{}.max_iter;
  ShrinkFlags shrink;
  std::vector<std::string> schemes = {"mle", "fisher-observed", "fisher-expected"};
  int folds = 2;
  int runs = 10;
  bool curve = false;
  std::vector<double> fractions;
  std::string emit_cov;
  std::string emit_replicates;
  std::string field = "gamma";
  std::string kind = "two_conference";
  int n = 32;
  int within = 14;
  int across = 2;
  int multiplicity = 1;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

// Writes `body` to `path`, or to `out` when the path is empty.
void Emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw DataError("cannot write '" + path + "'");
  body(file);
  if (!file) throw DataError("write to '" + path + "' failed");
}

void EmitJson(const std::string& path, std::ostream& out, const json& doc) {
  Emit(path, out, [&](std::ostream& s) { s << doc.dump(2) << '\n'; });
}

json ReadJson(const std::string& path) {
  std::ifstream in = OpenInput(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Dataset ReadDataset(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ParseComparisons(in);
}

FitConfig MakeFitConfig(const Flags& flags) {
  FitConfig config;
  config.epsilon = flags.epsilon;
  config.max_iter = flags.max_iter;
  config.Validate();
  return config;
}

// Reads a model document and reorders it to `universe`.
QualityVector ReadModelFor(const std::string& path, const ItemUniverse& universe,
                           const char* field) {
  const json doc = ReadJson(path);
  const ItemUniverse model_items = ModelItemsFromJson(doc);
  const QualityVector model = ModelFromJson(doc, field);
  if (model_items.size() != universe.size()) {
    throw DataError("model has " + std::to_string(model_items.size()) + " items, data has " +
                    std::to_string(universe.size()));
  }
  Eigen::VectorXd gamma(universe.size());
  for (int i = 0; i < universe.size(); ++i) {
    const auto at = model_items.Find(universe.id(i));
    if (!at) throw DataError("model lacks item '" + universe.id(i) + "'");
    gamma[i] = model[*at];
  }
  return QualityVector(std::move(gamma));
}

CovarianceScheme RequireScheme(const std::string& name) {
  const auto scheme = ParseScheme(name);
  if (!scheme) throw DataError("unknown scheme '" + name + "'");
  return *scheme;
}

ShrinkOptions MakeShrinkOptions(const Flags& flags, const Dataset& data) {
  const ShrinkFlags& s = flags.shrink;
  ShrinkOptions options;
  options.scheme = RequireScheme(s.scheme);
  options.fit = MakeFitConfig(flags);
  if (s.replicates < 2) throw DataError("--K must be at least 2");
  options.num_replicates = s.replicates;
  if (s.nu && (*s.nu < 0.0 || *s.nu > 1.0)) throw DataError("--nu must lie in [0, 1]");
  options.nu = s.nu;
  if (!s.nu_grid.empty()) {
    for (double v : s.nu_grid) {
      if (v < 0.0 || v > 1.0) throw DataError("--nu-grid values must lie in [0, 1]");
    }
    options.nu_grid = s.nu_grid;
  }
  if (s.prior_form == "printed") {
    options.prior_form = PriorCovarianceForm::kPrintedVariant;
  } else if (s.prior_form != "dirichlet") {
    throw DataError("unknown prior form '" + s.prior_form + "'");
  }
  options.implicit = s.implicit;
  if (s.prior == "rasch") {
    options.prior = PriorKind::kRasch;
    std::optional<RaschStructure> declared;
    if (!s.partition.empty()) {
      std::ifstream in = OpenInput(s.partition);
      declared = ParsePartition(in, data.universe());
    }
    options.rasch = DetectRasch(data, declared);
    if (!options.rasch) {
      throw DataError("rasch prior: comparisons do not split into two groups");
    }
  } else if (s.prior != "uniform") {
    throw DataError("unknown prior '" + s.prior + "'");
  } else if (!s.partition.empty()) {
    throw DataError("--partition only applies to --prior rasch");
  }
  return options;
}

void AddShrinkFlags(CLI::App* app, Flags& flags) {
  ShrinkFlags& s = flags.shrink;
  app->add_option("--K", s.replicates, "Bootstrap replicates")->capture_default_str();
  app->add_option("--nu", s.nu, "Ledoit-Wolf factor in [0, 1]; chosen by CV when unset");
  app->add_option("--nu-grid", s.nu_grid, "Comma-separated grid for CV choice of nu")
      ->delimiter(',');
  app->add_option("--prior", s.prior, "uniform or rasch")->capture_default_str();
  app->add_option("--partition", s.partition, "item,group CSV for the rasch prior");
  app->add_option("--prior-form", s.prior_form, "dirichlet or printed")
      ->capture_default_str();
  app->add_flag("--implicit", s.implicit, "Fisher schemes: use (I + A S)^-1");
}

void AddFitFlags(CLI::App* app, Flags& flags) {
  app->add_option("--epsilon", flags.epsilon, "Dirichlet prior strength")
      ->capture_default_str();
  app->add_option("--max-iter", flags.max_iter, "I-LSR iteration cap")->capture_default_str();
}

int CmdFit(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Dataset data = ReadDataset(flags.input);
  const FitConfig config = MakeFitConfig(flags);
  const ComparisonGraph graph = BuildGraph(data);
  const auto components = StronglyConnectedComponents(graph);
  const FitResult fit = FitMleDetailed(data, config);
  const double loglik = LogLikelihood(fit.gamma, data);
  EmitJson(flags.out, out, ModelToJson(data.universe(), fit.gamma, config.epsilon, loglik));
  err << "n=" << data.num_items() << " N=" << data.size() << " strongly_connected="
      << (components.size() == 1 ? "yes" : "no") << " components=" << components.size()
      << " iterations=" << fit.iterations << " loglik=" << std::setprecision(10) << loglik
      << '\n';
  return kExitOk;
}

int CmdShrink(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Dataset data = ReadDataset(flags.input);
  const ShrinkOptions options = MakeShrinkOptions(flags, data);
  const QualityVector mle = flags.model.empty()
                                ? FitMle(data, options.fit)
                                : ReadModelFor(flags.model, data.universe(), "gamma");
  const ShrinkResult result = Shrink(data, mle, options, flags.seed);
  EmitJson(flags.out, out,
           ShrinkResultToJson(data.universe(), result, options, LogLikelihood(mle, data)));
  if (!flags.emit_cov.empty()) {
    EmitJson(flags.emit_cov, out, CovarianceToJson(result.covariance));
  }
  if (!flags.emit_replicates.empty()) {
    if (!result.run) throw DataError("--emit-replicates needs a bootstrap scheme");
    EmitJson(flags.emit_replicates, out, BootstrapRunToJson(*result.run));
  }
  err << "scheme=" << SchemeName(options.scheme);
  if (result.nu) err << " nu=" << *result.nu;
  err << " prior=" << PriorKindName(options.prior) << '\n';
  return kExitOk;
}

bool WantsCsv(const Flags& flags) {
  if (!flags.format.empty()) {
    if (flags.format != "csv" && flags.format != "json") {
      throw DataError("--format must be csv or json");
    }
    return flags.format == "csv";
  }
  return std::filesystem::path(flags.out).extension() == ".csv";
}

int CmdEvaluate(const Flags& flags, std::ostream& out, std::ostream& err) {
  const Dataset data = ReadDataset(flags.input);
  const ShrinkOptions options = MakeShrinkOptions(flags, data);
  const bool csv = WantsCsv(flags);
  if (flags.curve) {
    const std::vector<double> fractions =
        flags.fractions.empty() ? DefaultCurveFractions() : flags.fractions;
    const auto points = LearningCurve(data, fractions, options, flags.runs, flags.seed);
    Emit(flags.out, out, [&](std::ostream& s) {
      if (csv) {
        WriteCurveCsv(points, s);
      } else {
        s << CurveToJson(points).dump(2) << '\n';
      }
    });
    err << "curve: " << points.size() << " fractions, " << flags.runs << " runs\n";
    return kExitOk;
  }
  std::vector<Estimator> estimators;
  for (const std::string& name : flags.schemes) {
    const auto estimator = ParseEstimator(name);
    if (!estimator) throw DataError("unknown scheme '" + name + "'");
    estimators.push_back(*estimator);
  }
  std::optional<QualityVector> truth;
  if (!flags.truth.empty()) truth = ReadModelFor(flags.truth, data.universe(), "gamma");
  const EvalReport report = RunCv(data, estimators, flags.folds, flags.runs, options,
                                  flags.seed, truth ? &*truth : nullptr);
  Emit(flags.out, out, [&](std::ostream& s) {
    if (csv) {
      WriteEvalReportCsv(report, s);
    } else {
      s << EvalReportToJson(report).dump(2) << '\n';
    }
  });
  for (const SchemeScore& score : report.scores) {
    err << std::left << std::setw(16) << EstimatorName(score.estimator)
        << " win_rate_mse=" << score.win_rate_mse << " matchup_brier=" << score.matchup_brier
        << '\n';
  }
  return kExitOk;
}

int CmdSynth(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.n < 2) throw DataError("--n must be at least 2");
  Schedule schedule;
  if (flags.kind == "round_robin") {
    if (flags.multiplicity < 1) throw DataError("--multiplicity must be positive");
    schedule = RoundRobinSchedule(flags.n, flags.multiplicity);
  } else if (flags.kind == "two_conference") {
    schedule = TwoConferenceSchedule(flags.n, flags.within, flags.across,
                                     DeriveSeed(flags.seed, 1));
  } else {
    throw DataError("unknown schedule kind '" + flags.kind + "'");
  }
  Rng rng = MakeRng(flags.seed, 0);
  const QualityVector truth = SampleSimplexUniform(flags.n, rng);
  const auto universe = MakeNumberedUniverse(flags.n);
  const Dataset data = SimulateOutcomes(truth, schedule, rng, universe);

  std::string truth_path = flags.truth;
  if (truth_path.empty() && !flags.out.empty() && flags.out != "-") {
    truth_path = (std::filesystem::path(flags.out).parent_path() / "truth.json").string();
  }
  Emit(flags.out, out, [&](std::ostream& s) { WriteComparisons(data, s); });
  if (!truth_path.empty()) {
    const json doc = {{"items", universe->ids()},
                      {"gamma", std::vector<double>(truth.values().data(),
                                                    truth.values().data() + truth.size())}};
    EmitJson(truth_path, out, doc);
  }
  err << "games=" << data.size() << " items=" << flags.n;
  if (!truth_path.empty()) err << " truth=" << truth_path;
  err << '\n';
  return kExitOk;
}

// Pairs CSV: a header, then "a,b" rows. Writes a,b,p with p = P(a beats b).
int CmdPredict(const Flags& flags, std::ostream& out, std::ostream&) {
  const json doc = ReadJson(flags.model);
  const ItemUniverse items = ModelItemsFromJson(doc);
  const QualityVector model = ModelFromJson(doc, flags.field.c_str());
  std::ifstream in = OpenInput(flags.input);
  std::ostringstream rows;
  rows << std::setprecision(17);
  std::string line;
  std::size_t line_no = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header_done) {
      header_done = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(line_no, "expected 'a,b'");
    const std::string a = line.substr(0, comma);
    std::string b = line.substr(comma + 1);
    if (const auto extra = b.find(','); extra != std::string::npos) b.resize(extra);
    const auto ia = items.Find(a);
    const auto ib = items.Find(b);
    if (!ia) throw ParseError(line_no, "unknown item '" + a + "'");
    if (!ib) throw ParseError(line_no, "unknown item '" + b + "'");
    rows << a << ',' << b << ',' << ChoiceProb(model, *ia, *ib) << '\n';
  }
  if (!header_done) throw DataError("pairs file is empty");
  Emit(flags.out, out, [&](std::ostream& s) { s << "a,b,p\n" << rows.str(); });
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags flags;
  CLI::App app{"Bradley-Terry fitting and James-Stein shrinkage for pairwise comparisons",
               "pairshrink"};
  app.footer(kFooter);
  app.require_subcommand(1);

  CLI::App* fit = app.add_subcommand("fit", "Fit the regularized MLE");
  fit->add_option("--input", flags.input, "winner,loser[,count] CSV")->required();
  fit->add_option("--out", flags.out, "Model JSON (stdout if omitted)");
  AddFitFlags(fit, flags);

  CLI::App* shrink = app.add_subcommand("shrink", "Fit and shrink toward a prior target");
  shrink->add_option("--input", flags.input, "winner,loser[,count] CSV")->required();
  shrink->add_option("--model", flags.model, "Model JSON to shrink instead of refitting");
  shrink->add_option("--out", flags.out, "Shrunk model JSON (stdout if omitted)");
  shrink->add_option("--scheme", flags.shrink.scheme,
                     "fisher-observed, fisher-expected, boot-b-p, boot-b-np, boot-nb-p, "
                     "boot-nb-np")
      ->capture_default_str();
  shrink->add_option("--seed", flags.seed, "Master seed")->capture_default_str();
  shrink->add_option("--emit-cov", flags.emit_cov, "Write the covariance JSON here");
  shrink->add_option("--emit-replicates", flags.emit_replicates,
                     "Write the bootstrap replicates JSON here");
  AddFitFlags(shrink, flags);
  AddShrinkFlags(shrink, flags);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Cross-validate estimators");
  evaluate->add_option("--input", flags.input, "winner,loser[,count] CSV")->required();
  evaluate->add_option("--out", flags.out, "Report (.csv extension selects CSV)");
  evaluate->add_option("--format", flags.format, "json or csv");
  evaluate->add_option("--schemes", flags.schemes, "Comma-separated estimators, incl. mle")
      ->delimiter(',')
      ->capture_default_str();
  evaluate->add_option("--scheme", flags.shrink.scheme, "Scheme for --curve")
      ->capture_default_str();
  evaluate->add_option("--folds", flags.folds, "Folds per run")->capture_default_str();
  evaluate->add_option("--runs", flags.runs, "Repetitions")->capture_default_str();
  evaluate->add_option("--seed", flags.seed, "Master seed")->capture_default_str();
  evaluate->add_option("--truth", flags.truth, "Truth JSON; adds alpha and beta");
  evaluate->add_flag("--curve", flags.curve, "Learning curve instead of CV");
  evaluate->add_option("--fractions", flags.fractions, "Training fractions for --curve")
      ->delimiter(',');
  AddFitFlags(evaluate, flags);
  AddShrinkFlags(evaluate, flags);

  CLI::App* synth = app.add_subcommand("synth", "Simulate a dataset from a random truth");
  synth->add_option("--kind", flags.kind, "round_robin or two_conference")
      ->capture_default_str();
  synth->add_option("--n", flags.n, "Items")->capture_default_str();
  synth->add_option("--within", flags.within, "two_conference: games per team inside")
      ->capture_default_str();
  synth->add_option("--across", flags.across, "two_conference: games per team across")
      ->capture_default_str();
  synth->add_option("--multiplicity", flags.multiplicity, "round_robin: games per pair")
      ->capture_default_str();
  synth->add_option("--seed", flags.seed, "Master seed")->capture_default_str();
  synth->add_option("--out", flags.out, "Dataset CSV (stdout if omitted)");
  synth->add_option("--truth", flags.truth,
                    "Truth JSON (default: truth.json next to --out)");

  CLI::App* predict = app.add_subcommand("predict", "Pairwise win probabilities");
  predict->add_option("--model", flags.model, "Model JSON")->required();
  predict->add_option("--input", flags.input, "CSV of pairs a,b with a header")->required();
  predict->add_option("--out", flags.out, "a,b,p CSV (stdout if omitted)");
  predict->add_option("--field", flags.field, "gamma, gamma_mle or gamma_shr")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*fit) return CmdFit(flags, out, err);
    if (*shrink) return CmdShrink(flags, out, err);
    if (*evaluate) return CmdEvaluate(flags, out, err);
    if (*synth) return CmdSynth(flags, out, err);
    return CmdPredict(flags, out, err);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pairshrink::cli
