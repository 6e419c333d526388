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

#ifndef KBDRIFT_INDEX_IO_H_
#define KBDRIFT_INDEX_IO_H_

#include <string>

#include "kbdrift/prior_index.h"
#include "kbdrift/redirect_map.h"
#include "kbdrift/types.h"

namespace kbdrift {

// Index TSV format (UTF-8, LF):
//
//   #snapshot <label>
//   #date <ISO-8601>
//   #pages <n>
//   #min_count <n>
//   mention<TAB>entity<TAB>count<TAB>prior      (grouped by mention,
//   ...                                          rank order inside a group,
//   #sha256 <hex of all preceding bytes>         groups in mention order)
//
// Priors are written with 12 significant digits; everything else
// round-trips exactly. The byte stream is a pure function of the index.
std::string SerializeIndex(const PriorIndex& index);
void SaveIndex(const PriorIndex& index, const std::string& path);

// Parses and validates a saved index: header order, mention grouping and
// ordering, rank order, count/prior consistency, prior sums, checksum.
// Throws FormatError (with line number) or ChecksumError.
PriorIndex ParseIndex(std::string_view data, const std::string& name);
PriorIndex LoadIndex(const std::string& path);

// Sidecar artifacts a snapshot build leaves next to the index, needed for
// persistence filtering and redirect-aware comparisons. Same trailer scheme.
void SaveArticles(const ArticleSet& articles, const std::string& path);
ArticleSet LoadArticles(const std::string& path);
void SaveRedirects(const RedirectMap& redirects, const std::string& path);
RedirectMap LoadRedirects(const std::string& path);

// Formats a probability with 12 significant digits (the on-disk format).
std::string FormatPrior(double prior);

}  // namespace kbdrift

#endif  // KBDRIFT_INDEX_IO_H_
