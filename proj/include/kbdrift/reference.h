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

// Naive serial implementations of the whole pipeline, kept as an
// independent oracle for the streaming/OpenMP code and as the baseline in
// the benchmark. Nothing here shares scanning, parsing, normalization or
// counting logic with the production path; it trades all performance for
// obviousness (whole-file strings, repeated scans, tree maps).

#ifndef KBDRIFT_REFERENCE_H_
#define KBDRIFT_REFERENCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "kbdrift/drift.h"
#include "kbdrift/prior_index.h"
#include "kbdrift/types.h"

namespace kbdrift::reference {

// Title canonicalization, re-derived from the same rules.
std::string NormalizeTitle(std::string_view raw);  // "" when nothing remains

// Anchor extraction by span removal plus bracket matching.
std::vector<Anchor> ScanAnchors(std::string_view text,
                                const std::string& source);

// Whole-pipeline rebuild of a snapshot index from a dump file, entirely in
// memory. Supports the same XML subset and JSON-lines fixtures.
PriorIndex BuildIndex(const std::string& dump_path, const std::string& label,
                      const std::string& dump_date,
                      const std::vector<int>& keep_namespaces,
                      std::int64_t min_count);

// Footrule distance via materialized element union and direct displacement
// sums.
double FootruleTopK(const TopKList& l1, const TopKList& l2);

}  // namespace kbdrift::reference

#endif  // KBDRIFT_REFERENCE_H_
