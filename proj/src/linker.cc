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

#include "kbdrift/linker.h"

namespace kbdrift {

LinkResult Link(const PriorIndex& index, const std::string& mention) {
  LinkResult result;
  result.mention = mention;
  const MentionEntry* entry = index.Find(mention);
  if (!entry) return result;  // unknown mention
  const CandidateEntity& best = entry->candidates.front();
  result.entity = best.entity;
  result.prior = best.prior;
  result.status = LinkResult::Status::kLinked;
  return result;
}

std::vector<LinkResult> LinkDocument(const PriorIndex& index,
                                     std::span<const std::string> mentions) {
  std::vector<LinkResult> results;
  results.reserve(mentions.size());
  for (const std::string& mention : mentions)
    results.push_back(Link(index, mention));
  return results;
}

}  // namespace kbdrift
