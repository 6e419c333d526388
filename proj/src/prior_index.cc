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

#include "kbdrift/prior_index.h"

#include <algorithm>
#include <utility>

namespace kbdrift {

bool RankBefore(const CandidateEntity& a, const CandidateEntity& b) {
  if (a.prior != b.prior) return a.prior > b.prior;
  if (a.count != b.count) return a.count > b.count;
  return a.entity < b.entity;
}

std::span<const CandidateEntity> PriorIndex::Candidates(
    const std::string& mention) const {
  const MentionEntry* entry = Find(mention);
  if (!entry) return {};
  return entry->candidates;
}

const MentionEntry* PriorIndex::Find(const std::string& mention) const {
  auto it = entries.find(mention);
  return it == entries.end() ? nullptr : &it->second;
}

IndexStats SnapshotStats(const PriorIndex& index) {
  IndexStats stats;
  stats.mention_count = static_cast<std::int64_t>(index.entries.size());
  for (const auto& [mention, entry] : index.entries) {
    if (entry.is_ambiguous()) ++stats.ambiguous_mention_count;
  }
  return stats;
}

void TallyAnchor(CountTable& table, const Anchor& anchor,
                 const RedirectMap& redirects, const ArticleSet& articles) {
  MentionTally& tally = table[anchor.surface];
  ++tally.anchor_occurrences;
  std::optional<std::string> resolved = redirects.Resolve(anchor.target);
  if (!resolved) return;  // cycle or over-deep chain: dangling
  if (articles.find(*resolved) == articles.end()) return;  // no such article
  ++tally.by_entity[*std::move(resolved)];
}

CountTable AccumulateCounts(std::span<const Anchor> anchors,
                            const RedirectMap& redirects,
                            const ArticleSet& articles) {
  CountTable table;
  for (const Anchor& anchor : anchors)
    TallyAnchor(table, anchor, redirects, articles);
  return table;
}

void MergeCounts(CountTable& into, CountTable&& from) {
  if (into.empty()) {
    into = std::move(from);
    return;
  }
  for (auto& [mention, tally] : from) {
    auto [it, inserted] = into.try_emplace(mention, std::move(tally));
    if (inserted) continue;
    it->second.anchor_occurrences += tally.anchor_occurrences;
    for (auto& [entity, count] : tally.by_entity)
      it->second.by_entity[entity] += count;
  }
}

PriorIndex BuildIndex(const CountTable& counts, SnapshotMeta meta,
                      std::int64_t min_count) {
  PriorIndex index;
  index.meta = std::move(meta);
  index.min_count = min_count;

  for (const auto& [mention, tally] : counts) {
    if (tally.anchor_occurrences < min_count) continue;
    if (tally.by_entity.empty()) continue;  // every target was dangling

    MentionEntry entry;
    entry.mention = mention;
    entry.candidates.reserve(tally.by_entity.size());
    std::int64_t total = 0;
    for (const auto& [entity, count] : tally.by_entity) {
      entry.candidates.push_back(CandidateEntity{entity, count, 0.0});
      total += count;
    }
    entry.total_count = total;
    for (CandidateEntity& candidate : entry.candidates) {
      candidate.prior =
          static_cast<double>(candidate.count) / static_cast<double>(total);
    }
    std::sort(entry.candidates.begin(), entry.candidates.end(), RankBefore);
    index.entries.emplace(mention, std::move(entry));
  }
  return index;
}

}  // namespace kbdrift
