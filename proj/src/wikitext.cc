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

#include "kbdrift/wikitext.h"

#include <algorithm>
#include <cctype>

#include "kbdrift/title.h"

namespace kbdrift {

namespace {

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsAsciiSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsAsciiSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool EqualsIgnoreAsciiCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

// Media-like and interlanguage prefixes mark links that are not entity
// mentions. Checked on the raw target, before title normalization, so the
// lowercase interlanguage form ("en:", "de:") is still visible.
bool HasExcludedPrefix(std::string_view target) {
  std::string_view::size_type colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  std::string_view prefix = Trim(target.substr(0, colon));
  for (std::string_view ns : {"File", "Image", "Category", "Media"}) {
    if (EqualsIgnoreAsciiCase(prefix, ns)) return true;
  }
  if (prefix.size() == 2 || prefix.size() == 3) {
    bool all_lower = std::all_of(prefix.begin(), prefix.end(), [](char c) {
      return c >= 'a' && c <= 'z';
    });
    if (all_lower) return true;
  }
  return false;
}

struct PendingAnchor {
  std::size_t start;
  Anchor anchor;
};

// Parses the body of one completed [[...]] link and appends the anchor it
// yields, if any.
void EmitLink(std::string_view body, std::size_t start,
              const std::string& source, std::vector<PendingAnchor>* out,
              AnchorScanStats* stats) {
  std::string_view target_raw = body;
  std::string_view surface_raw;
  bool piped = false;
  std::string_view::size_type pipe = body.find('|');
  if (pipe != std::string_view::npos) {
    piped = true;
    target_raw = body.substr(0, pipe);
    surface_raw = body.substr(pipe + 1);
  }

  target_raw = Trim(target_raw);
  if (!target_raw.empty() && target_raw.front() == ':')
    target_raw = Trim(target_raw.substr(1));

  // Targets never contain newlines or bracket characters; such bodies are
  // stray markup, not links.
  if (target_raw.empty() ||
      target_raw.find_first_of("[]\n") != std::string_view::npos ||
      HasExcludedPrefix(target_raw)) {
    if (stats) ++stats->dropped_links;
    return;
  }

  std::optional<std::string> target = NormalizeTitle(target_raw);
  if (!target) {
    if (stats) ++stats->dropped_links;
    return;
  }

  std::string_view surface = piped ? Trim(surface_raw) : target_raw;
  // Tabs/newlines inside a label are stray markup, never real mentions, and
  // would corrupt the TSV index rows.
  if (surface.empty() ||
      surface.find_first_of("\t\n") != std::string_view::npos) {
    if (stats) ++stats->dropped_links;
    return;
  }

  out->push_back(PendingAnchor{
      start, Anchor{std::string(surface), *std::move(target), source}});
}

}  // namespace

std::vector<Anchor> ExtractAnchors(std::string_view text,
                                   const std::string& source,
                                   AnchorScanStats* stats) {
  std::vector<PendingAnchor> pending;
  std::vector<std::size_t> open;  // positions just past each unmatched "[["

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '<') {
      if (text.compare(i, 4, "<!--") == 0) {
        std::size_t end = text.find("-->", i + 4);
        i = (end == std::string_view::npos) ? n : end + 3;
        continue;
      }
      if (text.compare(i, 9, "<nowiki/>") == 0) {
        i += 9;
        continue;
      }
      if (text.compare(i, 8, "<nowiki>") == 0) {
        std::size_t end = text.find("</nowiki>", i + 8);
        i = (end == std::string_view::npos) ? n : end + 9;
        continue;
      }
      ++i;
      continue;
    }
    if (c == '[' && i + 1 < n && text[i + 1] == '[') {
      open.push_back(i + 2);
      i += 2;
      continue;
    }
    if (c == ']' && i + 1 < n && text[i + 1] == ']') {
      if (!open.empty()) {
        std::size_t start = open.back();
        open.pop_back();
        EmitLink(text.substr(start, i - start), start - 2, source, &pending,
                 stats);
      }
      i += 2;
      continue;
    }
    ++i;
  }
  if (stats) stats->unclosed_links += open.size();

  // Nested links close before their enclosing link; re-establish document
  // order by opening position.
  std::sort(pending.begin(), pending.end(),
            [](const PendingAnchor& a, const PendingAnchor& b) {
              return a.start < b.start;
            });
  std::vector<Anchor> anchors;
  anchors.reserve(pending.size());
  for (PendingAnchor& p : pending) anchors.push_back(std::move(p.anchor));
  return anchors;
}

}  // namespace kbdrift
