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

#ifndef KBDRIFT_TYPES_H_
#define KBDRIFT_TYPES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>

namespace kbdrift {

// One page parsed from a knowledge-base snapshot dump. Titles are already
// canonical (see NormalizeTitle); redirect pages carry the raw redirect
// target and an empty text body.
struct PageRecord {
  std::string title;
  int ns = 0;
  std::optional<std::string> redirect_target;
  std::string text;

  bool is_redirect() const { return redirect_target.has_value(); }
};

// One wikilink occurrence: `surface` as displayed in the source page,
// `target` as a canonical title (before redirect resolution).
struct Anchor {
  std::string surface;
  std::string target;
  std::string source;

  bool operator==(const Anchor&) const = default;
};

// Identity of one snapshot: a label (typically the year), the dump date and
// the number of retained article pages.
struct SnapshotMeta {
  std::string label;
  std::string dump_date;        // ISO-8601 calendar date
  std::int64_t page_count = 0;  // non-redirect pages in kept namespaces
};

// Set of canonical titles of non-redirect pages in the kept namespaces.
using ArticleSet = std::unordered_set<std::string>;

}  // namespace kbdrift

#endif  // KBDRIFT_TYPES_H_
