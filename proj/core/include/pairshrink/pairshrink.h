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

// Umbrella header.

#ifndef PAIRSHRINK_PAIRSHRINK_H_
#define PAIRSHRINK_PAIRSHRINK_H_

#include "pairshrink/bootstrap.h"
#include "pairshrink/covariance.h"
#include "pairshrink/cv.h"
#include "pairshrink/dataset.h"
#include "pairshrink/errors.h"
#include "pairshrink/fisher.h"
#include "pairshrink/graph.h"
#include "pairshrink/io.h"
#include "pairshrink/linalg.h"
#include "pairshrink/metrics.h"
#include "pairshrink/mnl.h"
#include "pairshrink/partition.h"
#include "pairshrink/pipeline.h"
#include "pairshrink/random.h"
#include "pairshrink/shrinkage.h"
#include "pairshrink/synth.h"

#endif  // PAIRSHRINK_PAIRSHRINK_H_
