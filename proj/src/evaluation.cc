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

#include "kbdrift/evaluation.h"

#include <cstdio>

#include <json.hpp>

#include "kbdrift/errors.h"
#include "kbdrift/title.h"

namespace kbdrift {

namespace {

// A gold entity "exists" in a snapshot when its canonical, redirect-resolved
// title is an article there.
bool GoldExistsEverywhere(const std::string& gold,
                          std::span<const SnapshotEntities> snapshots) {
  std::optional<std::string> canonical = NormalizeTitle(gold);
  if (!canonical) return false;
  for (const SnapshotEntities& snapshot : snapshots) {
    std::optional<std::string> resolved = snapshot.redirects.Resolve(*canonical);
    if (!resolved) return false;
    if (snapshot.articles.find(*resolved) == snapshot.articles.end())
      return false;
  }
  return true;
}

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += '"';
  return quoted;
}

}  // namespace

GroundTruthSet PersistentAnnotations(
    const GroundTruthSet& gt, std::span<const SnapshotEntities> snapshots) {
  GroundTruthSet filtered;
  filtered.name = gt.name;
  filtered.docs.reserve(gt.docs.size());
  for (const GroundTruthDoc& doc : gt.docs) {
    GroundTruthDoc kept;
    kept.doc_id = doc.doc_id;
    kept.year = doc.year;
    for (const Annotation& ann : doc.annotations) {
      if (ann.is_nil) continue;
      if (GoldExistsEverywhere(ann.gold_entity, snapshots))
        kept.annotations.push_back(ann);
    }
    filtered.docs.push_back(std::move(kept));
  }
  return filtered;
}

AccuracyResult Accuracy(std::span<const LinkResult> results,
                        std::span<const Annotation> gold,
                        const RedirectMap& redirects) {
  if (results.size() != gold.size())
    throw LengthMismatchError(results.size(), gold.size());

  AccuracyResult out;
  out.evaluated = static_cast<std::int64_t>(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!results[i].linked()) continue;
    std::optional<std::string> gold_canonical =
        NormalizeTitle(gold[i].gold_entity);
    if (!gold_canonical) continue;
    std::optional<std::string> gold_resolved =
        redirects.Resolve(*gold_canonical);
    std::optional<std::string> predicted_resolved =
        redirects.Resolve(*results[i].entity);
    if (gold_resolved && predicted_resolved &&
        *gold_resolved == *predicted_resolved)
      ++out.correct;
  }
  if (out.evaluated > 0)
    out.accuracy = static_cast<double>(out.correct) /
                   static_cast<double>(out.evaluated);
  return out;
}

EvalReport EvaluateMatrix(std::span<const GroundTruthSet> gts,
                          std::span<const PriorIndex> indices,
                          std::span<const SnapshotEntities> snapshots) {
  if (indices.size() != snapshots.size())
    throw LengthMismatchError(indices.size(), snapshots.size());

  EvalReport report;
  report.snapshot_labels.reserve(indices.size());
  for (const PriorIndex& index : indices)
    report.snapshot_labels.push_back(index.meta.label);

  for (const GroundTruthSet& gt : gts) {
    GroundTruthSet persistent = PersistentAnnotations(gt, snapshots);
    std::vector<std::string> mentions;
    std::vector<Annotation> annotations;
    for (const GroundTruthDoc& doc : persistent.docs) {
      for (const Annotation& ann : doc.annotations) {
        mentions.push_back(ann.mention);
        annotations.push_back(ann);
      }
    }

    std::vector<AccuracyResult> row;
    row.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      std::vector<LinkResult> results = LinkDocument(indices[i], mentions);
      row.push_back(Accuracy(results, annotations, snapshots[i].redirects));
    }
    report.dataset_names.push_back(gt.name);
    report.cells.push_back(std::move(row));
  }
  return report;
}

std::string EvalReportCsv(const EvalReport& report) {
  std::string out = "dataset";
  for (const std::string& label : report.snapshot_labels) {
    out += ',';
    out += CsvField(label);
  }
  out += '\n';
  for (std::size_t row = 0; row < report.dataset_names.size(); ++row) {
    out += CsvField(report.dataset_names[row]);
    for (const AccuracyResult& cell : report.cells[row]) {
      out += ',';
      if (cell.accuracy) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", *cell.accuracy);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

std::string EvalReportCountsJson(const EvalReport& report) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json datasets = nlohmann::ordered_json::object();
  for (std::size_t row = 0; row < report.dataset_names.size(); ++row) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::object();
    for (std::size_t col = 0; col < report.snapshot_labels.size(); ++col) {
      const AccuracyResult& cell = report.cells[row][col];
      nlohmann::ordered_json entry;
      entry["correct"] = cell.correct;
      entry["evaluated"] = cell.evaluated;
      if (cell.accuracy)
        entry["accuracy"] = *cell.accuracy;
      else
        entry["accuracy"] = nullptr;
      cells[report.snapshot_labels[col]] = std::move(entry);
    }
    datasets[report.dataset_names[row]] = std::move(cells);
  }
  root["datasets"] = std::move(datasets);
  return root.dump(2) + "\n";
}

}  // namespace kbdrift
