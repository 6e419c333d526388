// Copyright 2026 The kbdrift Authors.
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

#ifndef KBDRIFT_EVALUATION_H_
#define KBDRIFT_EVALUATION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kbdrift/ground_truth.h"
#include "kbdrift/linker.h"
#include "kbdrift/prior_index.h"
#include "kbdrift/redirect_map.h"
#include "kbdrift/types.h"

namespace kbdrift {

// What the evaluation needs to know about one snapshot besides its index.
struct SnapshotEntities {
  ArticleSet articles;
  RedirectMap redirects;
};

// Keeps exactly the non-NIL annotations whose gold entity, normalized and
// redirect-resolved per snapshot, is an existing article in EVERY snapshot.
// Document structure is preserved; emptied docs stay with zero annotations.
GroundTruthSet PersistentAnnotations(
    const GroundTruthSet& gt, std::span<const SnapshotEntities> snapshots);

struct AccuracyResult {
  std::optional<double> accuracy;  // absent when evaluated == 0
  std::int64_t correct = 0;
  std::int64_t evaluated = 0;
};

// Accuracy of `results` against `gold` (index-aligned; throws
// LengthMismatchError otherwise). A prediction is correct when it resolves
// to the same article as the gold entity under `redirects`, so a prediction
// that is a redirect alias of the gold title still counts. Unknown mentions
// are incorrect.
AccuracyResult Accuracy(std::span<const LinkResult> results,
                        std::span<const Annotation> gold,
                        const RedirectMap& redirects);

// The accuracy matrix: datasets as rows, snapshots as columns. Annotation
// persistence is decided once per dataset over all snapshots, so `evaluated`
// is constant along a row and the columns stay comparable.
struct EvalCell {
  std::string dataset;
  std::string snapshot;
  AccuracyResult result;
};

struct EvalReport {
  std::vector<std::string> snapshot_labels;         // column order
  std::vector<std::string> dataset_names;           // row order
  std::vector<std::vector<AccuracyResult>> cells;   // [row][column]
};

EvalReport EvaluateMatrix(std::span<const GroundTruthSet> gts,
                          std::span<const PriorIndex> indices,
                          std::span<const SnapshotEntities> snapshots);

// Report serializations: a CSV mirroring the matrix layout (accuracy with 4
// decimal places, empty cell when undefined) and a JSON sidecar with the
// correct/evaluated counts.
std::string EvalReportCsv(const EvalReport& report);
std::string EvalReportCountsJson(const EvalReport& report);

}  // namespace kbdrift

#endif  // KBDRIFT_EVALUATION_H_
