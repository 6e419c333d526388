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

#ifndef KBDRIFT_PIPELINE_H_
#define KBDRIFT_PIPELINE_H_

#include <cstdint>
#include <set>
#include <string>

#include "kbdrift/prior_index.h"
#include "kbdrift/redirect_map.h"
#include "kbdrift/types.h"

namespace kbdrift {

struct BuildOptions {
  std::set<int> keep_namespaces{0};
  std::int64_t min_count = 100;
  // OpenMP threads for the counting pass; 0 means the runtime default.
  int threads = 0;
};

struct AnchorScanStatsTotal {
  std::uint64_t unclosed_links = 0;
  std::uint64_t dropped_links = 0;
  std::uint64_t anchors = 0;
};

// Everything one snapshot build produces.
struct SnapshotBundle {
  PriorIndex index;
  ArticleSet articles;
  RedirectMap redirects;
  AnchorScanStatsTotal scan_stats;
};

// Builds the mention dictionary of one snapshot in two streaming passes:
//  1. collect article titles, the redirect map and the page count;
//  2. extract anchors page by page (OpenMP over page batches, per-thread
//     count shards, order-independent merge) and tally them.
// Peak memory is bounded by the batch buffer, the largest page and the
// dictionary, never by the dump size.
SnapshotBundle BuildSnapshot(const std::string& dump_path,
                             const std::string& label,
                             const std::string& dump_date,
                             const BuildOptions& options);

}  // namespace kbdrift

#endif  // KBDRIFT_PIPELINE_H_
