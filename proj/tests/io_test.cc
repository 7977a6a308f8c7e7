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


#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "oracles.h"
#include "pairshrink/pairshrink.h"

namespace pairshrink {
namespace {

using nlohmann::json;

TEST(DatasetJson, RoundTrip) {
  Rng rng = MakeRng(80, 0);
  const Dataset data = testing::RandomDataset(5, 17, rng);
  const json doc = DatasetToJson(data);
  const Dataset back = DatasetFromJson(json::parse(doc.dump()));
  EXPECT_EQ(back.universe(), data.universe());
  ASSERT_EQ(back.size(), data.size());
  for (int k = 0; k < data.size(); ++k) EXPECT_EQ(back.records()[k], data.records()[k]);
}

TEST(DatasetJson, RejectsMalformedInput) {
  EXPECT_THROW(DatasetFromJson(json::parse(R"({"records": []})")), DataError);
  EXPECT_THROW(DatasetFromJson(json::parse(R"({"items": ["a", "b"], "records": [[0]]})")),
               DataError);
  EXPECT_THROW(DatasetFromJson(json::parse(R"({"items": ["a", "b"], "records": [[0, 2]]})")),
               DataError);
  EXPECT_THROW(DatasetFromJson(json::parse(R"({"items": ["a", "b"], "records": [["x", 1]]})")),
               DataError);
}

TEST(ModelJson, RoundTripIsExact) {
  const ItemUniverse universe({"red", "green", "blue"});
  const QualityVector g(Eigen::Vector3d(0.1234567890123, 0.5, 0.3765432109877));
  const json doc = json::parse(ModelToJson(universe, g, 1e-6, -3.25).dump());
  EXPECT_EQ(ModelItemsFromJson(doc), universe);
  EXPECT_EQ(ModelFromJson(doc).values(), g.values());
  EXPECT_EQ(doc["epsilon"].get<double>(), 1e-6);
  EXPECT_EQ(doc["loglik"].get<double>(), -3.25);
}

TEST(ModelJson, NormalizesAndValidates) {
  const json doc = json::parse(R"({"items": ["a", "b"], "gamma": [2, 6], "alt": [1, 1]})");
  EXPECT_TRUE(ModelFromJson(doc).values().isApprox(Eigen::Vector2d(0.25, 0.75)));
  EXPECT_TRUE(ModelFromJson(doc, "alt").values().isApprox(Eigen::Vector2d(0.5, 0.5)));
  EXPECT_THROW(ModelFromJson(doc, "missing"), DataError);
  EXPECT_THROW(ModelFromJson(json::parse(R"({"items": ["a"], "gamma": [1, 2]})")), DataError);
  EXPECT_THROW(ModelFromJson(json::parse(R"({"items": ["a", "b"], "gamma": [1, -2]})")),
               DataError);
}

TEST(MatrixJson, RoundTripAndRagged) {
  Eigen::MatrixXd m(2, 3);
  m << 1, -2.5, 1e-300, 4, 5, 6;
  EXPECT_EQ(MatrixFromJson(json::parse(MatrixToJson(m).dump())), m);
  EXPECT_THROW(MatrixFromJson(json::parse("[[1, 2], [3]]")), DataError);
  EXPECT_THROW(MatrixFromJson(json::parse(R"({"a": 1})")), DataError);
}

TEST(CovarianceJson, Fields) {
  CovarianceEstimate est{Eigen::Matrix2d::Identity(), CovarianceScheme::kBootBlockedParametric,
                         false};
  const json doc = CovarianceToJson(est);
  EXPECT_EQ(doc["scheme"], std::string(SchemeName(est.scheme)));
  EXPECT_EQ(doc["inverse"], false);
  EXPECT_EQ(MatrixFromJson(doc["matrix"]), est.matrix);
}

TEST(InformationJson, Fields) {
  Rng rng = MakeRng(81, 0);
  const Dataset data = testing::RichDataset(3, 2, rng);
  const InformationMatrix info = ExpectedInformation(QualityVector::Uniform(3), data);
  const json doc = InformationToJson(info);
  EXPECT_EQ(doc["kind"], "expected");
  EXPECT_EQ(doc["n_comparisons"], data.size());
  EXPECT_EQ(MatrixFromJson(doc["matrix"]), info.matrix);
}

TEST(BootstrapRunJson, Fields) {
  Rng rng = MakeRng(82, 0);
  const Dataset data = testing::RichDataset(3, 4, rng);
  const BootstrapRun run = RunBootstrap(data, {false, false}, 3, FitConfig{}, 17);
  const json doc = BootstrapRunToJson(run);
  EXPECT_EQ(doc["K"], 3);
  EXPECT_EQ(doc["seed"], 17);
  EXPECT_EQ(doc["scheme"], std::string(run.scheme.name()));
  ASSERT_EQ(doc["gammas"].size(), 3u);
  EXPECT_EQ(doc["gammas"][1].get<std::vector<double>>()[2], run.gammas[1][2]);
}

TEST(ShrinkResultJson, ReadableAsModel) {
  Rng rng = MakeRng(83, 0);
  const Dataset data = testing::RichDataset(4, 6, rng);
  const ShrinkOptions options;
  const ShrinkResult r = FitAndShrink(data, options, 1);
  const json doc = json::parse(ShrinkResultToJson(data.universe(), r, options, -1.0).dump());
  EXPECT_EQ(ModelFromJson(doc).values(), r.shrunk.values());
  EXPECT_EQ(ModelFromJson(doc, "gamma_mle").values(), r.mle.values());
  EXPECT_EQ(doc["scheme"], std::string(SchemeName(options.scheme)));
  EXPECT_TRUE(doc["nu"].is_null());
}

EvalReport SmallReport() {
  EvalReport report;
  report.folds = 2;
  report.runs = 3;
  report.seed = 4;
  report.scores.push_back({std::nullopt, 0.1, 0.2, 0.0, 0.0, 0.0, 0.0});
  report.scores.push_back({CovarianceScheme::kFisherExpected, 0.05, 0.19, 0.5, 0.05,
                           std::nullopt, std::nullopt});
  return report;
}

TEST(EvalReportIo, JsonAndCsvLayouts) {
  const EvalReport report = SmallReport();
  const json doc = EvalReportToJson(report);
  EXPECT_EQ(doc["folds"], 2);
  EXPECT_EQ(doc["runs"], 3);
  EXPECT_EQ(doc["seed"], 4);
  ASSERT_EQ(doc["scores"].size(), 2u);
  EXPECT_EQ(doc["scores"][0]["scheme"], "mle");
  EXPECT_TRUE(doc["scores"][0].contains("alpha"));
  EXPECT_FALSE(doc["scores"][1].contains("alpha"));

  std::ostringstream out;
  WriteEvalReportCsv(report, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "scheme,metric,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6 + 4);
  EXPECT_NE(out.str().find("fisher-expected,win_rate_improvement,0.5\n"), std::string::npos);
}

TEST(CurveIo, Layouts) {
  const std::vector<CurvePoint> points = {{0.1, 10, 0.2, 0.1, 0.3, 0.15}};
  const json doc = CurveToJson(points);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_DOUBLE_EQ(doc[0]["win_rate_ratio"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc[0]["matchup_ratio"].get<double>(), 0.5);
  std::ostringstream out;
  WriteCurveCsv(points, out);
  EXPECT_EQ(out.str(),
            "fraction,train_size,win_rate_mse_mle,win_rate_mse_shr,win_rate_ratio,"
            "matchup_brier_mle,matchup_brier_shr,matchup_ratio\n"
            "0.1,10,0.2,0.1,0.5,0.3,0.15,0.5\n");
}

}  // namespace
}  // namespace pairshrink
