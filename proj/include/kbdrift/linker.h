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

#ifndef KBDRIFT_LINKER_H_
#define KBDRIFT_LINKER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kbdrift/prior_index.h"

namespace kbdrift {

// Outcome of linking one mention. Mentions absent from the index are a
// distinguished status, not an error: evaluation counts them as incorrect.
struct LinkResult {
  enum class Status { kLinked, kUnknownMention };

  std::string mention;
  std::optional<std::string> entity;  // present iff linked
  std::optional<double> prior;        // present iff linked
  Status status = Status::kUnknownMention;

  bool linked() const { return status == Status::kLinked; }
};

// Prior-only disambiguation: the rank-1 candidate of the mention.
LinkResult Link(const PriorIndex& index, const std::string& mention);

// Links each mention independently, preserving order. Pure in (index,
// mentions): identical mentions give identical results.
std::vector<LinkResult> LinkDocument(const PriorIndex& index,
                                     std::span<const std::string> mentions);

}  // namespace kbdrift

#endif  // KBDRIFT_LINKER_H_
