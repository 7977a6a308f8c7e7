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

// JSON and CSV encodings of the library's values. Schemas are listed in
// docs/schemas.md.

#ifndef PAIRSHRINK_IO_H_
#define PAIRSHRINK_IO_H_

#include <ostream>
#include <span>

#include <nlohmann/json.hpp>

#include "pairshrink/bootstrap.h"
#include "pairshrink/cv.h"
#include "pairshrink/dataset.h"
#include "pairshrink/fisher.h"
#include "pairshrink/mnl.h"
#include "pairshrink/pipeline.h"

namespace pairshrink {

// {"items": [...], "records": [[w, l], ...]}
nlohmann::json DatasetToJson(const Dataset& data);
Dataset DatasetFromJson(const nlohmann::json& doc);

// {"items", "gamma", "epsilon", "loglik"}
nlohmann::json ModelToJson(const ItemUniverse& universe, const QualityVector& model,
                           double epsilon, double loglik);
// Reads the "gamma" field of any model document, or `gamma_field` (say
// "gamma_mle") instead. Entries follow ModelItemsFromJson's order.
QualityVector ModelFromJson(const nlohmann::json& doc, const char* gamma_field = "gamma");
ItemUniverse ModelItemsFromJson(const nlohmann::json& doc);

nlohmann::json MatrixToJson(const Eigen::MatrixXd& m);
Eigen::MatrixXd MatrixFromJson(const nlohmann::json& doc);

// {"kind", "n_comparisons", "matrix"}
nlohmann::json InformationToJson(const InformationMatrix& info);
// {"scheme", "inverse", "matrix"}
nlohmann::json CovarianceToJson(const CovarianceEstimate& estimate);
// {"scheme", "K", "seed", "gammas"}
nlohmann::json BootstrapRunToJson(const BootstrapRun& run);

// Model document plus {"gamma_mle", "gamma_shr", "scheme", "nu", "prior"}.
nlohmann::json ShrinkResultToJson(const ItemUniverse& universe, const ShrinkResult& result,
                                  const ShrinkOptions& options, double loglik_mle);

nlohmann::json EvalReportToJson(const EvalReport& report);
// scheme,metric,value rows; metrics are win_rate_mse, matchup_brier,
// win_rate_improvement, matchup_improvement (and alpha, beta when present).
void WriteEvalReportCsv(const EvalReport& report, std::ostream& out);

nlohmann::json CurveToJson(std::span<const CurvePoint> points);
void WriteCurveCsv(std::span<const CurvePoint> points, std::ostream& out);

}  // namespace pairshrink

#endif  // PAIRSHRINK_IO_H_
