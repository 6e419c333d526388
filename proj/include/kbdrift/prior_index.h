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

#ifndef KBDRIFT_PRIOR_INDEX_H_
#define KBDRIFT_PRIOR_INDEX_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kbdrift/redirect_map.h"
#include "kbdrift/types.h"

namespace kbdrift {

// One candidate entity of a mention: redirect-resolved title, how often the
// mention linked to it, and the resulting prior probability.
struct CandidateEntity {
  std::string entity;
  std::int64_t count = 0;
  double prior = 0.0;

  bool operator==(const CandidateEntity&) const = default;
};

// Ranked candidate list of one mention. total_count is the sum of the
// candidate counts; priors sum to 1 within 1e-9.
struct MentionEntry {
  std::string mention;
  std::int64_t total_count = 0;
  std::vector<CandidateEntity> candidates;  // sorted, best first

  bool is_ambiguous() const { return candidates.size() >= 2; }
};

// Rank order within a mention: prior descending, then count descending,
// then entity title ascending.
bool RankBefore(const CandidateEntity& a, const CandidateEntity& b);

// Per-snapshot mention -> ranked-candidates dictionary.
struct PriorIndex {
  SnapshotMeta meta;
  std::int64_t min_count = 0;
  std::map<std::string, MentionEntry> entries;  // keyed by mention

  // Ranked candidates of `mention`, or an empty span when unknown
  // (a miss, not an error).
  std::span<const CandidateEntity> Candidates(const std::string& mention) const;

  const MentionEntry* Find(const std::string& mention) const;
};

struct IndexStats {
  std::int64_t mention_count = 0;
  std::int64_t ambiguous_mention_count = 0;  // mentions with >= 2 candidates
};

IndexStats SnapshotStats(const PriorIndex& index);

// Raw tally of one mention while counting a snapshot's anchors.
// anchor_occurrences counts every anchor occurrence of the mention;
// by_entity only keeps anchors whose resolved target exists.
struct MentionTally {
  std::int64_t anchor_occurrences = 0;
  std::unordered_map<std::string, std::int64_t> by_entity;
};

using CountTable = std::unordered_map<std::string, MentionTally>;

// Tallies one anchor into `table`: resolves the target through `redirects`
// and drops it from the entity counts when the resolved target is not an
// existing article (or the redirect chain fails).
void TallyAnchor(CountTable& table, const Anchor& anchor,
                 const RedirectMap& redirects, const ArticleSet& articles);

// Counts a whole anchor sequence (single-threaded; the parallel page-level
// path in pipeline.h produces the same table).
CountTable AccumulateCounts(std::span<const Anchor> anchors,
                            const RedirectMap& redirects,
                            const ArticleSet& articles);

// Merges `from` into `into`; addition is associative and commutative, so
// shard merge order does not affect the result.
void MergeCounts(CountTable& into, CountTable&& from);

// Builds the ranked dictionary. A mention is retained when its total anchor
// occurrences (before the existence filter) reach min_count and at least one
// candidate survives the existence filter; priors are computed over the
// surviving candidates only.
PriorIndex BuildIndex(const CountTable& counts, SnapshotMeta meta,
                      std::int64_t min_count);

}  // namespace kbdrift

#endif  // KBDRIFT_PRIOR_INDEX_H_
