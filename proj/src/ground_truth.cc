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

#include "kbdrift/ground_truth.h"

#include <fstream>
#include <istream>

#include <json.hpp>

#include "kbdrift/errors.h"

namespace kbdrift {

namespace {

using nlohmann::json;

Annotation ParseAnnotation(const json& obj, const std::string& name,
                           std::int64_t line_no) {
  if (!obj.is_object())
    throw FormatError(name, line_no, "annotation must be an object");
  Annotation ann;
  auto mention = obj.find("mention");
  if (mention == obj.end() || !mention->is_string())
    throw FormatError(name, line_no, "annotation missing string field 'mention'");
  ann.mention = mention->get<std::string>();
  if (auto nil = obj.find("nil"); nil != obj.end() && !nil->is_null()) {
    if (!nil->is_boolean())
      throw FormatError(name, line_no, "field 'nil' must be a boolean");
    ann.is_nil = nil->get<bool>();
  }
  auto gold = obj.find("gold");
  if (gold != obj.end() && !gold->is_null()) {
    if (!gold->is_string())
      throw FormatError(name, line_no, "field 'gold' must be a string or null");
    ann.gold_entity = gold->get<std::string>();
  }
  if (!ann.is_nil && ann.gold_entity.empty())
    throw FormatError(name, line_no,
                      "non-NIL annotation needs a non-empty 'gold'");
  return ann;
}

}  // namespace

GroundTruthSet LoadGroundTruth(std::istream& in, const std::string& name) {
  GroundTruthSet set;
  set.name = name;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(name, line_no, e.what());
    }
    if (!obj.is_object())
      throw FormatError(name, line_no, "expected a JSON object");

    GroundTruthDoc doc;
    auto doc_id = obj.find("doc_id");
    if (doc_id == obj.end() || !doc_id->is_string())
      throw FormatError(name, line_no, "missing string field 'doc_id'");
    doc.doc_id = doc_id->get<std::string>();
    if (auto year = obj.find("year"); year != obj.end() && !year->is_null()) {
      if (!year->is_number_integer())
        throw FormatError(name, line_no, "field 'year' must be an integer");
      doc.year = year->get<int>();
    }
    if (auto anns = obj.find("annotations"); anns != obj.end() && !anns->is_null()) {
      if (!anns->is_array())
        throw FormatError(name, line_no, "field 'annotations' must be an array");
      doc.annotations.reserve(anns->size());
      for (const json& ann : *anns)
        doc.annotations.push_back(ParseAnnotation(ann, name, line_no));
    }
    set.docs.push_back(std::move(doc));
  }
  return set;
}

GroundTruthSet LoadGroundTruthFile(const std::string& path,
                                   const std::string& name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ground truth: " + path);
  return LoadGroundTruth(in, name);
}

}  // namespace kbdrift
