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

#ifndef KBDRIFT_DUMP_PARSER_H_
#define KBDRIFT_DUMP_PARSER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>

#include "kbdrift/types.h"

namespace kbdrift {

using PageSink = std::function<void(PageRecord&&)>;

// Streams a snapshot dump and yields the pages whose namespace is in
// `keep_namespaces`, in dump order. Two input formats are auto-detected:
//
//   XML export subset:
//     <mediawiki><page><title/><ns/>[<redirect title="..."/>]
//       <revision><text>...</text></revision></page>...</mediawiki>
//     One revision per page; unknown elements are skipped.
//
//   JSON lines: one object per line with fields
//     title (string), ns (int, default 0), redirect (string|null), text.
//
// Page titles are canonicalized; redirect pages keep the raw redirect target
// and get an empty text body. Memory use is bounded by one page, not the
// dump size. Returns the number of yielded non-redirect pages.
//
// Throws DumpError on malformed input (with byte offset and element
// context) and on invalid UTF-8. An entirely empty stream is an empty
// snapshot.
std::int64_t ParseDump(std::istream& in, const std::set<int>& keep_namespaces,
                       const PageSink& sink);

// Convenience: opens `path` and parses it. Throws Error when unreadable.
std::int64_t ParseDumpFile(const std::string& path,
                           const std::set<int>& keep_namespaces,
                           const PageSink& sink);

// True when `s` is well-formed UTF-8.
bool Utf8Valid(std::string_view s);

}  // namespace kbdrift

#endif  // KBDRIFT_DUMP_PARSER_H_
