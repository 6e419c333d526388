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

#include "kbdrift/pipeline.h"

#include <omp.h>

#include <utility>
#include <vector>

#include "kbdrift/dump_parser.h"
#include "kbdrift/title.h"
#include "kbdrift/wikitext.h"

namespace kbdrift {

namespace {

// Pages are buffered up to this many text bytes before a parallel counting
// sweep, so peak memory stays small relative to the dump.
constexpr std::size_t kBatchBytes = 4 * 1024 * 1024;

struct Shard {
  CountTable counts;
  AnchorScanStats scan_stats;
  std::uint64_t anchors = 0;
};

}  // namespace

SnapshotBundle BuildSnapshot(const std::string& dump_path,
                             const std::string& label,
                             const std::string& dump_date,
                             const BuildOptions& options) {
  SnapshotBundle bundle;
  SnapshotMeta meta;
  meta.label = label;
  meta.dump_date = dump_date;

  // Pass 1: article titles, redirects, page count.
  meta.page_count =
      ParseDumpFile(dump_path, options.keep_namespaces, [&](PageRecord&& page) {
        if (page.is_redirect()) {
          std::optional<std::string> target =
              NormalizeTitle(*page.redirect_target);
          if (target) bundle.redirects.Add(std::move(page.title), *std::move(target));
        } else {
          bundle.articles.insert(std::move(page.title));
        }
      });

  // Pass 2: anchor extraction and counting over page batches.
  const int threads =
      options.threads > 0 ? options.threads : omp_get_max_threads();
  std::vector<Shard> shards(static_cast<std::size_t>(threads));

  std::vector<PageRecord> batch;
  std::size_t batch_bytes = 0;

  auto flush = [&] {
    if (batch.empty()) return;
    const std::int64_t n = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      Shard& shard = shards[static_cast<std::size_t>(omp_get_thread_num())];
      std::vector<Anchor> anchors =
          ExtractAnchors(batch[i].text, batch[i].title, &shard.scan_stats);
      shard.anchors += anchors.size();
      for (const Anchor& anchor : anchors)
        TallyAnchor(shard.counts, anchor, bundle.redirects, bundle.articles);
    }
    batch.clear();
    batch_bytes = 0;
  };

  ParseDumpFile(dump_path, options.keep_namespaces, [&](PageRecord&& page) {
    if (page.is_redirect()) return;
    batch_bytes += page.text.size();
    batch.push_back(std::move(page));
    if (batch_bytes >= kBatchBytes) flush();
  });
  flush();

  // Per-mention additions commute, so merging shards in any fixed order
  // yields identical counts.
  CountTable counts;
  for (Shard& shard : shards) {
    MergeCounts(counts, std::move(shard.counts));
    bundle.scan_stats.unclosed_links += shard.scan_stats.unclosed_links;
    bundle.scan_stats.dropped_links += shard.scan_stats.dropped_links;
    bundle.scan_stats.anchors += shard.anchors;
  }

  bundle.index = BuildIndex(counts, std::move(meta), options.min_count);
  return bundle;
}

}  // namespace kbdrift
