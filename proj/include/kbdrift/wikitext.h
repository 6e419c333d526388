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

#ifndef KBDRIFT_WIKITEXT_H_
#define KBDRIFT_WIKITEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kbdrift/types.h"

namespace kbdrift {

struct AnchorScanStats {
  std::uint64_t unclosed_links = 0;  // "[[" with no matching "]]"
  std::uint64_t dropped_links = 0;   // excluded prefix / empty target or surface
};

// Extracts link anchors from raw wikitext, in document order.
//
//   [[Target|Surface]]  ->  surface "Surface", target NormalizeTitle("Target")
//   [[Target]]          ->  surface "Target" (as written, trimmed)
//
// Content inside HTML comments and <nowiki> spans is invisible. Links whose
// target carries a File/Image/Category/Media prefix, or a 2-3 letter
// lowercase interlanguage prefix, are dropped; links nested inside them (file
// caption links) are still extracted. Unclosed brackets are plain text.
// Templates are not expanded: a link written inside {{...}} is still a link.
std::vector<Anchor> ExtractAnchors(std::string_view text,
                                   const std::string& source,
                                   AnchorScanStats* stats = nullptr);

}  // namespace kbdrift

#endif  // KBDRIFT_WIKITEXT_H_
