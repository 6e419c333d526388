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

#include "kbdrift/redirect_map.h"

#include <utility>

namespace kbdrift {

bool RedirectMap::Add(std::string from, std::string to) {
  if (from.empty() || to.empty() || from == to) return false;
  mapping_.insert_or_assign(std::move(from), std::move(to));
  return true;
}

std::optional<std::string> RedirectMap::Resolve(
    const std::string& title, std::vector<std::string>* chain) const {
  auto it = mapping_.find(title);
  if (it == mapping_.end()) return title;  // fast path: not a redirect

  std::vector<std::string> visited;
  visited.push_back(title);
  const std::string* current = &it->second;
  for (int depth = 1; depth <= kMaxDepth; ++depth) {
    auto next = mapping_.find(*current);
    if (next == mapping_.end()) return *current;
    for (const std::string& seen : visited) {
      if (seen == *current) {
        visited.push_back(*current);
        if (chain) *chain = std::move(visited);
        return std::nullopt;  // cycle
      }
    }
    visited.push_back(*current);
    current = &next->second;
  }
  visited.push_back(*current);
  if (chain) *chain = std::move(visited);
  return std::nullopt;  // chain longer than kMaxDepth
}

}  // namespace kbdrift
