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

#ifndef KBDRIFT_GROUND_TRUTH_H_
#define KBDRIFT_GROUND_TRUTH_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kbdrift {

// One gold (mention, entity) pair. NIL annotations (mentions with no
// knowledge-base entry) are retained but flagged.
struct Annotation {
  std::string mention;
  std::string gold_entity;  // raw title; empty iff is_nil
  bool is_nil = false;
};

struct GroundTruthDoc {
  std::string doc_id;
  std::optional<int> year;  // publication year, when known
  std::vector<Annotation> annotations;
};

struct GroundTruthSet {
  std::string name;
  std::vector<GroundTruthDoc> docs;

  std::size_t annotation_count() const {
    std::size_t n = 0;
    for (const GroundTruthDoc& doc : docs) n += doc.annotations.size();
    return n;
  }
};

// Loads a benchmark in the normalized JSON-lines format, one document per
// line:
//   {"doc_id": str, "year": int|null,
//    "annotations": [{"mention": str, "gold": str|null, "nil": bool}]}
// Throws FormatError with the offending line number on schema violations.
GroundTruthSet LoadGroundTruth(std::istream& in, const std::string& name);
GroundTruthSet LoadGroundTruthFile(const std::string& path,
                                   const std::string& name);

}  // namespace kbdrift

#endif  // KBDRIFT_GROUND_TRUTH_H_
