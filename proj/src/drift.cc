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

#include "kbdrift/drift.h"

#include <cmath>
#include <cstdlib>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "kbdrift/errors.h"
#include "kbdrift/index_io.h"

namespace kbdrift {

double FootruleTopK(const TopKList& l1, const TopKList& l2) {
  if (l1.k != l2.k) throw DepthMismatchError(l1.k, l2.k);
  if (l1.k < 1) throw Error("top-k depth must be >= 1");
  const int k = l1.k;
  const int absent = k + 1;

  // position in each list (1-based), or k+1 when absent
  std::unordered_map<std::string_view, std::pair<int, int>> positions;
  positions.reserve(l1.items.size() + l2.items.size());
  for (std::size_t i = 0; i < l1.items.size(); ++i)
    positions[l1.items[i]] = {static_cast<int>(i) + 1, absent};
  for (std::size_t i = 0; i < l2.items.size(); ++i) {
    auto [it, inserted] =
        positions.try_emplace(l2.items[i], absent, static_cast<int>(i) + 1);
    if (!inserted) it->second.second = static_cast<int>(i) + 1;
  }

  std::int64_t raw = 0;
  for (const auto& [entity, pos] : positions)
    raw += std::abs(pos.first - pos.second);
  return static_cast<double>(raw) / (static_cast<double>(k) * (k + 1));
}

TopKList TopCandidates(const MentionEntry& entry, int k) {
  TopKList list;
  list.k = k;
  const std::size_t depth =
      std::min(entry.candidates.size(), static_cast<std::size_t>(k));
  list.items.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i)
    list.items.push_back(entry.candidates[i].entity);
  return list;
}

std::vector<std::string> SharedMentions(const PriorIndex& a,
                                        const PriorIndex& b) {
  std::vector<std::string> shared;
  for (const auto& [mention, entry] : a.entries) {
    if (b.entries.count(mention)) shared.push_back(mention);
  }
  return shared;  // a.entries is ordered, so this is lexicographic
}

Top1ChangeResult Top1ChangeRate(const PriorIndex& a, const PriorIndex& b,
                                bool ambiguous_only,
                                const RedirectMap& redirects_b) {
  Top1ChangeResult result;
  for (const auto& [mention, entry_a] : a.entries) {
    const MentionEntry* entry_b = b.Find(mention);
    if (!entry_b) continue;
    if (ambiguous_only &&
        !(entry_a.is_ambiguous() && entry_b->is_ambiguous()))
      continue;
    ++result.considered;
    const std::string& top1_a = entry_a.candidates.front().entity;
    const std::string& top1_b = entry_b->candidates.front().entity;
    // A rename surfaces as a redirect in the newer snapshot; resolving the
    // older title first keeps it from counting as a change.
    std::optional<std::string> top1_a_resolved = redirects_b.Resolve(top1_a);
    if (!top1_a_resolved || *top1_a_resolved != top1_b) ++result.changed;
  }
  if (result.considered > 0)
    result.rate = static_cast<double>(result.changed) /
                  static_cast<double>(result.considered);
  return result;
}

std::vector<std::pair<std::string, double>> PerMentionDistances(
    const PriorIndex& a, const PriorIndex& b, int k) {
  std::vector<std::pair<const MentionEntry*, const MentionEntry*>> work;
  std::vector<std::string> mentions;
  for (const auto& [mention, entry_a] : a.entries) {
    const MentionEntry* entry_b = b.Find(mention);
    if (!entry_b) continue;
    if (!(entry_a.is_ambiguous() && entry_b->is_ambiguous())) continue;
    work.emplace_back(&entry_a, entry_b);
    mentions.push_back(mention);
  }

  // Each distance is independent; the result vector is indexed by the
  // mention's lexicographic rank, so the parallel fill is deterministic.
  std::vector<double> distances(work.size());
  const std::int64_t n = static_cast<std::int64_t>(work.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    distances[i] = FootruleTopK(TopCandidates(*work[i].first, k),
                                TopCandidates(*work[i].second, k));
  }

  std::vector<std::pair<std::string, double>> out;
  out.reserve(work.size());
  for (std::size_t i = 0; i < work.size(); ++i)
    out.emplace_back(std::move(mentions[i]), distances[i]);
  return out;
}

DriftReport DriftStats(const PriorIndex& a, const PriorIndex& b, int k,
                       const RedirectMap& redirects_b) {
  DriftReport report;
  report.k = k;
  report.shared_mentions =
      static_cast<std::int64_t>(SharedMentions(a, b).size());
  report.top1_change_rate_all =
      Top1ChangeRate(a, b, /*ambiguous_only=*/false, redirects_b).rate;
  report.top1_change_rate_ambiguous =
      Top1ChangeRate(a, b, /*ambiguous_only=*/true, redirects_b).rate;

  std::vector<std::pair<std::string, double>> distances =
      PerMentionDistances(a, b, k);
  if (distances.empty()) return report;  // undefined markers stay absent

  // Serial reduction in lexicographic mention order keeps the statistics
  // byte-for-byte reproducible.
  const double n = static_cast<double>(distances.size());
  double sum = 0.0;
  std::int64_t above_half = 0;
  for (const auto& [mention, d] : distances) {
    sum += d;
    if (d > 0.5) ++above_half;
  }
  const double mean = sum / n;
  double squared_deviations = 0.0;
  for (const auto& [mention, d] : distances)
    squared_deviations += (d - mean) * (d - mean);

  report.footrule_mean = mean;
  report.footrule_variance = squared_deviations / n;  // population variance
  report.footrule_stddev = std::sqrt(*report.footrule_variance);
  report.fraction_above_half = static_cast<double>(above_half) / n;
  return report;
}

std::string DriftReportJson(const DriftReport& report) {
  nlohmann::ordered_json doc;
  doc["shared_mentions"] = report.shared_mentions;
  doc["k"] = report.k;
  auto set = [&doc](const char* key, const std::optional<double>& value) {
    if (value)
      doc[key] = *value;
    else
      doc[key] = nullptr;
  };
  set("top1_change_rate_all", report.top1_change_rate_all);
  set("top1_change_rate_ambiguous", report.top1_change_rate_ambiguous);
  set("footrule_mean", report.footrule_mean);
  set("footrule_variance", report.footrule_variance);
  set("footrule_stddev", report.footrule_stddev);
  set("fraction_above_half", report.fraction_above_half);
  return doc.dump(2) + "\n";
}

std::string PerMentionTsv(
    const std::vector<std::pair<std::string, double>>& distances) {
  std::string out;
  for (const auto& [mention, distance] : distances) {
    out += mention;
    out += '\t';
    out += FormatPrior(distance);
    out += '\n';
  }
  return out;
}

}  // namespace kbdrift
