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

#ifndef KBDRIFT_DRIFT_H_
#define KBDRIFT_DRIFT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kbdrift/prior_index.h"
#include "kbdrift/redirect_map.h"

namespace kbdrift {

// An ordered list of at most k distinct entity titles.
struct TopKList {
  std::vector<std::string> items;
  int k = 0;
};

// Spearman-footrule distance between two top-k lists of the same nominal
// depth: an element absent from one list is placed at position k+1 there,
// and the displacement sum is normalized by k*(k+1), the value attained by
// disjoint full-depth lists. Result in [0,1]; 0 iff the lists are identical.
// Throws DepthMismatchError when l1.k != l2.k.
double FootruleTopK(const TopKList& l1, const TopKList& l2);

// The top-k candidate titles of a mention (fewer when the mention has fewer
// candidates; the nominal depth stays k).
TopKList TopCandidates(const MentionEntry& entry, int k);

// Mentions present in both indices, in lexicographic order.
std::vector<std::string> SharedMentions(const PriorIndex& a,
                                        const PriorIndex& b);

struct Top1ChangeResult {
  std::optional<double> rate;  // absent when considered == 0
  std::int64_t changed = 0;
  std::int64_t considered = 0;
};

// Fraction of shared mentions whose top-ranked candidate differs between the
// snapshots. The older top-1 is resolved through the newer snapshot's
// redirects first, so a pure page rename does not count as a change. With
// ambiguous_only, only mentions ambiguous in BOTH indices are considered.
Top1ChangeResult Top1ChangeRate(const PriorIndex& a, const PriorIndex& b,
                                bool ambiguous_only,
                                const RedirectMap& redirects_b);

// Pairwise drift statistics between two snapshot indices. The footrule
// distribution is taken over shared mentions ambiguous in both indices;
// variance is the population variance; fraction_above_half counts distances
// strictly greater than 0.5.
struct DriftReport {
  std::int64_t shared_mentions = 0;
  int k = 0;
  std::optional<double> top1_change_rate_all;
  std::optional<double> top1_change_rate_ambiguous;
  std::optional<double> footrule_mean;
  std::optional<double> footrule_variance;
  std::optional<double> footrule_stddev;
  std::optional<double> fraction_above_half;
};

DriftReport DriftStats(const PriorIndex& a, const PriorIndex& b, int k,
                       const RedirectMap& redirects_b);

// Per-mention footrule distances over the ambiguous shared mentions, in
// lexicographic mention order. This is the kernel behind DriftStats'
// distribution; it is computed in parallel and reduced in a fixed order.
std::vector<std::pair<std::string, double>> PerMentionDistances(
    const PriorIndex& a, const PriorIndex& b, int k);

// JSON document with all DriftReport fields (null for undefined markers).
std::string DriftReportJson(const DriftReport& report);

// TSV rows `mention<TAB>distance` matching PerMentionDistances.
std::string PerMentionTsv(
    const std::vector<std::pair<std::string, double>>& distances);

}  // namespace kbdrift

#endif  // KBDRIFT_DRIFT_H_
