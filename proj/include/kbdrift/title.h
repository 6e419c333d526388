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

#ifndef KBDRIFT_TITLE_H_
#define KBDRIFT_TITLE_H_

#include <optional>
#include <string>
#include <string_view>

namespace kbdrift {

// Canonicalizes a raw page or link title:
//   - everything from the first '#' (a fragment) is removed,
//   - underscores become spaces,
//   - runs of ASCII whitespace collapse to a single space,
//   - leading/trailing whitespace is trimmed,
//   - the first character is uppercased when it is an ASCII letter.
// Returns nullopt when nothing remains (e.g. the input was "#section").
// Idempotent: NormalizeTitle(*NormalizeTitle(x)) == NormalizeTitle(x).
std::optional<std::string> NormalizeTitle(std::string_view raw);

}  // namespace kbdrift

#endif  // KBDRIFT_TITLE_H_
