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

#include "pairshrink/covariance.h"

namespace pairshrink {

std::string_view SchemeName(CovarianceScheme scheme) {
  switch (scheme) {
    case CovarianceScheme::kFisherObserved: return "fisher-observed";
    case CovarianceScheme::kFisherExpected: return "fisher-expected";
    case CovarianceScheme::kBootBlockedParametric: return "boot-b-p";
    case CovarianceScheme::kBootBlockedNonParametric: return "boot-b-np";
    case CovarianceScheme::kBootNonBlockedParametric: return "boot-nb-p";
    case CovarianceScheme::kBootNonBlockedNonParametric: return "boot-nb-np";
  }
  return "unknown";
}

std::optional<CovarianceScheme> ParseScheme(std::string_view name) {
  for (CovarianceScheme scheme : kAllCovarianceSchemes) {
    if (SchemeName(scheme) == name) return scheme;
  }
  return std::nullopt;
}

}  // namespace pairshrink
