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

#ifndef KBDRIFT_REDIRECT_MAP_H_
#define KBDRIFT_REDIRECT_MAP_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kbdrift {

// Canonical-title -> canonical-title redirect table for one snapshot.
// Self-redirects are dropped on insertion, so resolution always makes
// progress; cycles are still possible across entries and are reported as a
// failed resolution.
class RedirectMap {
 public:
  // Inserts one redirect; both sides must already be canonical titles.
  // A key equal to its value is ignored. Returns false when dropped.
  bool Add(std::string from, std::string to);

  // Follows redirects for up to kMaxDepth steps and returns the first title
  // that is not itself a redirect. Titles that are not redirect keys resolve
  // to themselves. Returns nullopt when a cycle is hit or the chain is
  // longer than kMaxDepth; if `chain` is given it receives the titles
  // visited, for diagnostics.
  std::optional<std::string> Resolve(
      const std::string& title, std::vector<std::string>* chain = nullptr) const;

  bool Contains(const std::string& title) const {
    return mapping_.count(title) > 0;
  }
  std::size_t size() const { return mapping_.size(); }
  bool empty() const { return mapping_.empty(); }
  const std::unordered_map<std::string, std::string>& mapping() const {
    return mapping_;
  }

  static constexpr int kMaxDepth = 10;

 private:
  std::unordered_map<std::string, std::string> mapping_;
};

}  // namespace kbdrift

#endif  // KBDRIFT_REDIRECT_MAP_H_
