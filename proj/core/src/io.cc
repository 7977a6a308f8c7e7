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

#include "pairshrink/io.h"

#include <iomanip>
#include <memory>
#include <string>
#include <vector>

#include "pairshrink/errors.h"

namespace pairshrink {
namespace {

using nlohmann::json;

std::vector<double> ToStd(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw DataError(std::string("JSON document lacks field '") + key + "'");
  }
  return doc.at(key);
}

}  // namespace

json DatasetToJson(const Dataset& data) {
  json records = json::array();
  for (const Comparison& c : data.records()) records.push_back({c.winner, c.loser});
  return {{"items", data.universe().ids()}, {"records", std::move(records)}};
}

Dataset DatasetFromJson(const json& doc) {
  try {
    auto universe = std::make_shared<const ItemUniverse>(
        Require(doc, "items").get<std::vector<std::string>>());
    std::vector<Comparison> records;
    for (const json& r : Require(doc, "records")) {
      if (!r.is_array() || r.size() != 2) throw DataError("record must be [winner, loser]");
      records.push_back({r[0].get<int>(), r[1].get<int>()});
    }
    return Dataset(std::move(universe), std::move(records));
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed dataset JSON: ") + e.what());
  }
}

json ModelToJson(const ItemUniverse& universe, const QualityVector& model, double epsilon,
                 double loglik) {
  return {{"items", universe.ids()},
          {"gamma", ToStd(model.values())},
          {"epsilon", epsilon},
          {"loglik", loglik}};
}

ItemUniverse ModelItemsFromJson(const json& doc) {
  try {
    return ItemUniverse(Require(doc, "items").get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model JSON: ") + e.what());
  }
}

QualityVector ModelFromJson(const json& doc, const char* gamma_field) {
  const ItemUniverse universe = ModelItemsFromJson(doc);
  try {
    const auto gamma = Require(doc, gamma_field).get<std::vector<double>>();
    if (static_cast<int>(gamma.size()) != universe.size()) {
      throw DataError("model has " + std::to_string(gamma.size()) + " qualities for " +
                      std::to_string(universe.size()) + " items");
    }
    Eigen::VectorXd values = Eigen::Map<const Eigen::VectorXd>(gamma.data(), gamma.size());
    return QualityVector::Normalized(std::move(values));
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model JSON: ") + e.what());
  }
}

json MatrixToJson(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows.push_back(ToStd(m.row(i).transpose()));
  }
  return rows;
}

Eigen::MatrixXd MatrixFromJson(const json& doc) {
  std::vector<std::vector<double>> rows;
  try {
    rows = doc.get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed matrix JSON: ") + e.what());
  }
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != m.cols()) {
      throw DataError("ragged matrix in JSON");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

json InformationToJson(const InformationMatrix& info) {
  return {{"kind", info.kind == InformationKind::kObserved ? "observed" : "expected"},
          {"n_comparisons", info.num_comparisons},
          {"matrix", MatrixToJson(info.matrix)}};
}

json CovarianceToJson(const CovarianceEstimate& estimate) {
  return {{"scheme", SchemeName(estimate.scheme)},
          {"inverse", estimate.is_inverse},
          {"matrix", MatrixToJson(estimate.matrix)}};
}

json BootstrapRunToJson(const BootstrapRun& run) {
  json gammas = json::array();
  for (const QualityVector& g : run.gammas) gammas.push_back(ToStd(g.values()));
  return {{"scheme", run.scheme.name()},
          {"K", run.num_replicates()},
          {"seed", run.seed},
          {"gammas", std::move(gammas)}};
}

json ShrinkResultToJson(const ItemUniverse& universe, const ShrinkResult& result,
                        const ShrinkOptions& options, double loglik_mle) {
  json doc = ModelToJson(universe, result.shrunk, options.fit.epsilon, loglik_mle);
  doc["gamma_mle"] = ToStd(result.mle.values());
  doc["gamma_shr"] = ToStd(result.shrunk.values());
  doc["scheme"] = SchemeName(options.scheme);
  doc["nu"] = result.nu ? json(*result.nu) : json(nullptr);
  doc["prior"] = PriorKindName(options.prior);
  doc["implicit"] = options.implicit;
  return doc;
}

json EvalReportToJson(const EvalReport& report) {
  json rows = json::array();
  for (const SchemeScore& s : report.scores) {
    json row = {{"scheme", EstimatorName(s.estimator)},
                {"win_rate_mse", s.win_rate_mse},
                {"matchup_brier", s.matchup_brier},
                {"win_rate_improvement", s.win_rate_improvement},
                {"matchup_improvement", s.matchup_improvement}};
    if (s.alpha) row["alpha"] = *s.alpha;
    if (s.beta) row["beta"] = *s.beta;
    rows.push_back(std::move(row));
  }
  return {{"folds", report.folds},
          {"runs", report.runs},
          {"seed", report.seed},
          {"scores", std::move(rows)}};
}

void WriteEvalReportCsv(const EvalReport& report, std::ostream& out) {
  out << "scheme,metric,value\n" << std::setprecision(10);
  for (const SchemeScore& s : report.scores) {
    const std::string_view name = EstimatorName(s.estimator);
    out << name << ",win_rate_mse," << s.win_rate_mse << '\n'
        << name << ",matchup_brier," << s.matchup_brier << '\n'
        << name << ",win_rate_improvement," << s.win_rate_improvement << '\n'
        << name << ",matchup_improvement," << s.matchup_improvement << '\n';
    if (s.alpha) out << name << ",alpha," << *s.alpha << '\n';
    if (s.beta) out << name << ",beta," << *s.beta << '\n';
  }
}

json CurveToJson(std::span<const CurvePoint> points) {
  json rows = json::array();
  for (const CurvePoint& p : points) {
    rows.push_back({{"fraction", p.fraction},
                    {"train_size", p.train_size},
                    {"win_rate_mse_mle", p.win_rate_mse_mle},
                    {"win_rate_mse_shr", p.win_rate_mse_shr},
                    {"win_rate_ratio", p.win_rate_ratio()},
                    {"matchup_brier_mle", p.matchup_brier_mle},
                    {"matchup_brier_shr", p.matchup_brier_shr},
                    {"matchup_ratio", p.matchup_ratio()}});
  }
  return rows;
}

void WriteCurveCsv(std::span<const CurvePoint> points, std::ostream& out) {
  out << "fraction,train_size,win_rate_mse_mle,win_rate_mse_shr,win_rate_ratio,"
         "matchup_brier_mle,matchup_brier_shr,matchup_ratio\n"
      << std::setprecision(10);
  for (const CurvePoint& p : points) {
    out << p.fraction << ',' << p.train_size << ',' << p.win_rate_mse_mle << ','
        << p.win_rate_mse_shr << ',' << p.win_rate_ratio() << ',' << p.matchup_brier_mle << ','
        << p.matchup_brier_shr << ',' << p.matchup_ratio() << '\n';
  }
}

}  // namespace pairshrink
