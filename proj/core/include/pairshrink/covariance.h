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

#ifndef PAIRSHRINK_COVARIANCE_H_
#define PAIRSHRINK_COVARIANCE_H_

#include <array>
#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace pairshrink {

// How the covariance of the MLE was estimated.
enum class CovarianceScheme {
  kFisherObserved,
  kFisherExpected,
  kBootBlockedParametric,
  kBootBlockedNonParametric,
  kBootNonBlockedParametric,
  kBootNonBlockedNonParametric,
};

inline constexpr std::array<CovarianceScheme, 6> kAllCovarianceSchemes = {
    CovarianceScheme::kFisherObserved,           CovarianceScheme::kFisherExpected,
    CovarianceScheme::kBootBlockedParametric,    CovarianceScheme::kBootBlockedNonParametric,
    CovarianceScheme::kBootNonBlockedParametric, CovarianceScheme::kBootNonBlockedNonParametric,
};

// "fisher-observed", "fisher-expected", "boot-b-p", "boot-b-np", "boot-nb-p",
// "boot-nb-np".
std::string_view SchemeName(CovarianceScheme scheme);
std::optional<CovarianceScheme> ParseScheme(std::string_view name);

inline bool IsBootstrapScheme(CovarianceScheme scheme) {
  return scheme != CovarianceScheme::kFisherObserved &&
         scheme != CovarianceScheme::kFisherExpected;
}

// Covariance of the MLE, or its inverse when `is_inverse` is set.
struct CovarianceEstimate {
  Eigen::MatrixXd matrix;
  CovarianceScheme scheme = CovarianceScheme::kFisherExpected;
  bool is_inverse = false;
};

}  // namespace pairshrink

#endif  // PAIRSHRINK_COVARIANCE_H_
