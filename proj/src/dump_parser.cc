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

#include "kbdrift/dump_parser.h"

#include <cctype>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kbdrift/errors.h"
#include "kbdrift/title.h"

namespace kbdrift {

namespace {

constexpr std::size_t kBufSize = 256 * 1024;

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_' ||
         c == '-' || c == '.';
}

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Decodes one XML entity reference (without the leading '&') into out.
// Returns false when the name is not recognized.
bool DecodeEntityName(std::string_view name, std::string& out) {
  if (name == "lt") {
    out.push_back('<');
  } else if (name == "gt") {
    out.push_back('>');
  } else if (name == "amp") {
    out.push_back('&');
  } else if (name == "quot") {
    out.push_back('"');
  } else if (name == "apos") {
    out.push_back('\'');
  } else if (name.size() > 1 && name.front() == '#') {
    std::uint32_t cp = 0;
    if (name[1] == 'x' || name[1] == 'X') {
      if (name.size() < 3) return false;
      for (char c : name.substr(2)) {
        int d;
        if (c >= '0' && c <= '9')
          d = c - '0';
        else if (c >= 'a' && c <= 'f')
          d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
          d = c - 'A' + 10;
        else
          return false;
        cp = cp * 16 + static_cast<std::uint32_t>(d);
        if (cp > 0x10FFFF) return false;
      }
    } else {
      for (char c : name.substr(1)) {
        if (c < '0' || c > '9') return false;
        cp = cp * 10 + static_cast<std::uint32_t>(c - '0');
        if (cp > 0x10FFFF) return false;
      }
    }
    if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    AppendUtf8(out, cp);
  } else {
    return false;
  }
  return true;
}

struct RawTag {
  enum Kind { kOpen, kClose, kSelfClose };
  Kind kind = kOpen;
  std::string name;
  std::string attrs;  // raw attribute region, undecoded
  std::uint64_t offset = 0;
};

// Pull parser for the export subset. Owns the read buffer; all offsets are
// absolute byte positions in the input stream.
class XmlDumpParser {
 public:
  XmlDumpParser(std::istream& in, const std::set<int>& keep,
                const PageSink& sink, std::uint64_t start_offset)
      : in_(in), keep_(keep), sink_(sink), buf_(kBufSize),
        base_(start_offset) {}

  std::int64_t Run() {
    RawTag root = NextTag("document");
    if (root.kind != RawTag::kOpen || root.name != "mediawiki") {
      throw DumpError(root.offset, "document", "expected <mediawiki> root");
    }
    for (;;) {
      RawTag tag = NextTag("mediawiki");
      if (tag.kind == RawTag::kClose && tag.name == "mediawiki") break;
      if (tag.kind == RawTag::kOpen && tag.name == "page") {
        ParsePage(tag.offset);
      } else if (tag.kind == RawTag::kOpen) {
        SkipElement(tag.name.c_str());
      }  // self-closing elements need no skipping
    }
    return page_count_;
  }

 private:
  // -- buffered reading ------------------------------------------------

  bool Fill() {
    if (pos_ < len_) return true;
    base_ += len_;
    pos_ = 0;
    in_.read(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    len_ = static_cast<std::size_t>(in_.gcount());
    return len_ > 0;
  }

  std::uint64_t Offset() const { return base_ + pos_; }

  int Peek() {
    if (!Fill()) return -1;
    return static_cast<unsigned char>(buf_[pos_]);
  }

  int Get() {
    if (!Fill()) return -1;
    return static_cast<unsigned char>(buf_[pos_++]);
  }

  // -- tag scanning ----------------------------------------------------

  // Discards content up to the next tag and parses it. Comments, the XML
  // prolog and doctype declarations are skipped transparently.
  RawTag NextTag(const char* ctx) {
    for (;;) {
      while (Fill()) {
        const char* found = static_cast<const char*>(
            std::memchr(buf_.data() + pos_, '<', len_ - pos_));
        if (found) {
          pos_ = static_cast<std::size_t>(found - buf_.data());
          break;
        }
        pos_ = len_;
      }
      if (Peek() < 0) throw DumpError(Offset(), ctx, "unexpected end of input");
      std::uint64_t tag_offset = Offset();
      Get();  // '<'
      int c = Peek();
      if (c < 0) throw DumpError(Offset(), ctx, "unexpected end of input");
      if (c == '!') {
        SkipDeclaration(ctx);
        continue;
      }
      if (c == '?') {
        SkipUntil("?>", ctx);
        continue;
      }
      RawTag tag;
      tag.offset = tag_offset;
      if (c == '/') {
        Get();
        tag.kind = RawTag::kClose;
        tag.name = ReadName(ctx);
        SkipSpace();
        if (Get() != '>')
          throw DumpError(Offset(), ctx, "malformed closing tag");
        return tag;
      }
      tag.kind = RawTag::kOpen;
      tag.name = ReadName(ctx);
      if (tag.name.empty())
        throw DumpError(tag.offset, ctx, "malformed tag");
      // Raw attribute region up to '>', respecting quotes.
      char quote = 0;
      for (;;) {
        int a = Get();
        if (a < 0) throw DumpError(Offset(), ctx, "unterminated tag");
        if (quote) {
          if (a == quote) quote = 0;
          tag.attrs.push_back(static_cast<char>(a));
          continue;
        }
        if (a == '"' || a == '\'') {
          quote = static_cast<char>(a);
          tag.attrs.push_back(static_cast<char>(a));
          continue;
        }
        if (a == '>') break;
        tag.attrs.push_back(static_cast<char>(a));
      }
      if (!tag.attrs.empty() && tag.attrs.back() == '/') {
        tag.kind = RawTag::kSelfClose;
        tag.attrs.pop_back();
      }
      return tag;
    }
  }

  void SkipDeclaration(const char* ctx) {
    // Positioned at '!'. Comments get matched fully; other declarations
    // (doctype) are skipped to the next '>'.
    Get();
    if (Peek() == '-') {
      Get();
      if (Get() != '-') throw DumpError(Offset(), ctx, "malformed comment");
      SkipUntil("-->", ctx);
      return;
    }
    if (Peek() == '[')
      throw DumpError(Offset(), ctx, "CDATA sections are not supported");
    for (;;) {
      int c = Get();
      if (c < 0) throw DumpError(Offset(), ctx, "unterminated declaration");
      if (c == '>') return;
    }
  }

  void SkipUntil(std::string_view marker, const char* ctx) {
    std::size_t matched = 0;
    for (;;) {
      int c = Get();
      if (c < 0) throw DumpError(Offset(), ctx, "unexpected end of input");
      if (static_cast<char>(c) == marker[matched]) {
        if (++matched == marker.size()) return;
      } else {
        matched = (static_cast<char>(c) == marker[0]) ? 1 : 0;
      }
    }
  }

  std::string ReadName(const char* ctx) {
    std::string name;
    for (;;) {
      int c = Peek();
      if (c < 0) throw DumpError(Offset(), ctx, "unexpected end of input");
      if (!IsNameChar(static_cast<char>(c))) break;
      name.push_back(static_cast<char>(Get()));
    }
    return name;
  }

  void SkipSpace() {
    while (Peek() >= 0 && IsAsciiSpace(static_cast<char>(Peek()))) Get();
  }

  // Consumes a balanced element body after an opening tag.
  void SkipElement(const char* ctx) {
    int depth = 1;
    while (depth > 0) {
      RawTag tag = NextTag(ctx);
      if (tag.kind == RawTag::kOpen)
        ++depth;
      else if (tag.kind == RawTag::kClose)
        --depth;
    }
  }

  // Reads element content up to the next '<', decoding entity references.
  void ReadContentInto(std::string& out, const char* ctx) {
    for (;;) {
      if (!Fill()) throw DumpError(Offset(), ctx, "unexpected end of input");
      std::size_t start = pos_;
      while (pos_ < len_ && buf_[pos_] != '<' && buf_[pos_] != '&') ++pos_;
      out.append(buf_.data() + start, pos_ - start);
      if (pos_ == len_) continue;
      if (buf_[pos_] == '<') return;
      DecodeEntity(out, ctx);
    }
  }

  void DecodeEntity(std::string& out, const char* ctx) {
    std::uint64_t ent_offset = Offset();
    Get();  // '&'
    std::string name;
    for (;;) {
      int c = Get();
      if (c < 0) throw DumpError(Offset(), ctx, "unterminated entity");
      if (c == ';') break;
      name.push_back(static_cast<char>(c));
      if (name.size() > 10)
        throw DumpError(ent_offset, ctx, "malformed entity reference");
    }
    if (!DecodeEntityName(name, out))
      throw DumpError(ent_offset, ctx, "unknown entity &" + name + ";");
  }

  // Content of a simple element: everything until its own closing tag.
  std::string ReadSimpleElement(const std::string& name, const char* ctx) {
    std::string content;
    ReadContentInto(content, ctx);
    RawTag close = NextTag(ctx);
    if (close.kind != RawTag::kClose || close.name != name) {
      throw DumpError(close.offset, ctx,
                      "expected </" + name + ">, got <" + close.name + ">");
    }
    return content;
  }

  // -- page structure --------------------------------------------------

  void ParsePage(std::uint64_t page_offset) {
    PageRecord rec;
    bool have_title = false;
    bool have_text = false;
    std::optional<std::string> raw_redirect;

    for (;;) {
      RawTag tag = NextTag("page");
      if (tag.kind == RawTag::kClose && tag.name == "page") break;
      if (tag.kind == RawTag::kClose)
        throw DumpError(tag.offset, "page", "unexpected </" + tag.name + ">");

      if (tag.name == "title" && tag.kind == RawTag::kOpen) {
        rec.title = ReadSimpleElement("title", "page <title>");
        have_title = true;
      } else if (tag.name == "ns" && tag.kind == RawTag::kOpen) {
        std::string content = ReadSimpleElement("ns", "page <ns>");
        rec.ns = ParseNamespace(content, tag.offset);
      } else if (tag.name == "redirect") {
        raw_redirect = RedirectTargetAttr(tag);
        if (tag.kind == RawTag::kOpen) SkipElement("page <redirect>");
      } else if (tag.name == "revision" && tag.kind == RawTag::kOpen) {
        if (have_text) {
          SkipElement("page <revision>");  // one revision per page assumed
        } else {
          ParseRevision(rec);
          have_text = true;
        }
      } else if (tag.kind == RawTag::kOpen) {
        SkipElement("page");
      }
    }

    if (!have_title)
      throw DumpError(page_offset, "page", "missing <title>");
    FinishPage(std::move(rec), std::move(raw_redirect), page_offset);
  }

  void ParseRevision(PageRecord& rec) {
    for (;;) {
      RawTag tag = NextTag("revision");
      if (tag.kind == RawTag::kClose && tag.name == "revision") return;
      if (tag.kind == RawTag::kClose)
        throw DumpError(tag.offset, "revision",
                        "unexpected </" + tag.name + ">");
      if (tag.name == "text" && tag.kind == RawTag::kOpen) {
        rec.text = ReadSimpleElement("text", "revision <text>");
      } else if (tag.kind == RawTag::kOpen) {
        SkipElement("revision");
      }
    }
  }

  int ParseNamespace(const std::string& content, std::uint64_t offset) const {
    std::size_t i = 0;
    while (i < content.size() && IsAsciiSpace(content[i])) ++i;
    bool neg = i < content.size() && content[i] == '-';
    if (neg) ++i;
    if (i >= content.size() || !std::isdigit(static_cast<unsigned char>(content[i])))
      throw DumpError(offset, "page <ns>", "not an integer: '" + content + "'");
    long value = 0;
    for (; i < content.size() && std::isdigit(static_cast<unsigned char>(content[i])); ++i)
      value = value * 10 + (content[i] - '0');
    while (i < content.size() && IsAsciiSpace(content[i])) ++i;
    if (i != content.size())
      throw DumpError(offset, "page <ns>", "not an integer: '" + content + "'");
    return static_cast<int>(neg ? -value : value);
  }

  std::string RedirectTargetAttr(const RawTag& tag) const {
    std::string_view attrs = tag.attrs;
    std::size_t at = 0;
    while (at < attrs.size()) {
      while (at < attrs.size() && IsAsciiSpace(attrs[at])) ++at;
      std::size_t name_start = at;
      while (at < attrs.size() && attrs[at] != '=' &&
             !IsAsciiSpace(attrs[at]))
        ++at;
      std::string_view name = attrs.substr(name_start, at - name_start);
      while (at < attrs.size() && IsAsciiSpace(attrs[at])) ++at;
      if (at >= attrs.size() || attrs[at] != '=') break;
      ++at;
      while (at < attrs.size() && IsAsciiSpace(attrs[at])) ++at;
      if (at >= attrs.size() || (attrs[at] != '"' && attrs[at] != '\'')) break;
      char quote = attrs[at++];
      std::size_t value_start = at;
      while (at < attrs.size() && attrs[at] != quote) ++at;
      if (at >= attrs.size()) break;
      if (name == "title") {
        std::string decoded;
        if (!DecodeAttrValue(attrs.substr(value_start, at - value_start),
                             decoded))
          throw DumpError(tag.offset, "page <redirect>",
                          "malformed entity in attribute");
        return decoded;
      }
      ++at;  // closing quote
    }
    throw DumpError(tag.offset, "page <redirect>", "missing title attribute");
  }

  static bool DecodeAttrValue(std::string_view raw, std::string& out) {
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] != '&') {
        out.push_back(raw[i++]);
        continue;
      }
      std::size_t semi = raw.find(';', i + 1);
      if (semi == std::string_view::npos || semi - i > 11) return false;
      if (!DecodeEntityName(raw.substr(i + 1, semi - i - 1), out))
        return false;
      i = semi + 1;
    }
    return true;
  }

  void FinishPage(PageRecord&& rec, std::optional<std::string>&& raw_redirect,
                  std::uint64_t page_offset) {
    if (keep_.find(rec.ns) == keep_.end()) return;

    if (!Utf8Valid(rec.title))
      throw DumpError(page_offset, "page <title>", "invalid UTF-8");
    std::optional<std::string> title = NormalizeTitle(rec.title);
    if (!title)
      throw DumpError(page_offset, "page <title>",
                      "title '" + rec.title + "' is empty after normalization");
    rec.title = *std::move(title);

    if (raw_redirect) {
      if (!Utf8Valid(*raw_redirect))
        throw DumpError(page_offset, "page <redirect>", "invalid UTF-8");
      rec.redirect_target = std::move(raw_redirect);
      rec.text.clear();  // redirect pages carry no anchors
    } else {
      if (!Utf8Valid(rec.text))
        throw DumpError(page_offset, "revision <text>", "invalid UTF-8");
      ++page_count_;
    }
    sink_(std::move(rec));
  }

  std::istream& in_;
  const std::set<int>& keep_;
  const PageSink& sink_;
  std::vector<char> buf_;
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
  std::uint64_t base_ = 0;
  std::int64_t page_count_ = 0;
};

// -- JSON lines --------------------------------------------------------

std::int64_t ParseJsonLines(std::istream& in, const std::set<int>& keep,
                            const PageSink& sink, std::string first_line,
                            std::uint64_t first_offset) {
  std::int64_t page_count = 0;
  std::int64_t line_no = 0;
  std::uint64_t offset = first_offset;
  std::string line = std::move(first_line);
  bool have_line = !line.empty();

  while (have_line || std::getline(in, line)) {
    have_line = false;
    ++line_no;
    std::string context = "line " + std::to_string(line_no);
    std::uint64_t line_offset = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DumpError(line_offset, context, e.what());
    }
    if (!obj.is_object())
      throw DumpError(line_offset, context, "expected a JSON object");

    PageRecord rec;
    auto title_it = obj.find("title");
    if (title_it == obj.end() || !title_it->is_string())
      throw DumpError(line_offset, context, "missing string field 'title'");
    std::optional<std::string> title =
        NormalizeTitle(title_it->get<std::string>());
    if (!title)
      throw DumpError(line_offset, context, "title is empty after normalization");
    rec.title = *std::move(title);

    if (auto it = obj.find("ns"); it != obj.end() && !it->is_null()) {
      if (!it->is_number_integer())
        throw DumpError(line_offset, context, "field 'ns' must be an integer");
      rec.ns = it->get<int>();
    }
    if (keep.find(rec.ns) == keep.end()) continue;

    if (auto it = obj.find("redirect"); it != obj.end() && !it->is_null()) {
      if (!it->is_string())
        throw DumpError(line_offset, context,
                        "field 'redirect' must be a string or null");
      rec.redirect_target = it->get<std::string>();
    }
    if (!rec.is_redirect()) {
      if (auto it = obj.find("text"); it != obj.end() && !it->is_null()) {
        if (!it->is_string())
          throw DumpError(line_offset, context, "field 'text' must be a string");
        rec.text = it->get<std::string>();
      }
      ++page_count;
    }
    sink(std::move(rec));
  }
  return page_count;
}

}  // namespace

bool Utf8Valid(std::string_view s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    if ((b & 0xE0) == 0xC0)
      len = 2;
    else if ((b & 0xF0) == 0xE0)
      len = 3;
    else if ((b & 0xF8) == 0xF0)
      len = 4;
    else
      return false;
    if (i + len > n) return false;
    std::uint32_t cp = b & (0x7Fu >> len);
    for (std::size_t j = 1; j < len; ++j) {
      unsigned char cb = static_cast<unsigned char>(s[i + j]);
      if ((cb & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cb & 0x3Fu);
    }
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

std::int64_t ParseDump(std::istream& in, const std::set<int>& keep_namespaces,
                       const PageSink& sink) {
  // Sniff the format on the first non-whitespace byte, past a UTF-8 BOM.
  std::uint64_t offset = 0;
  int c = in.get();
  if (c == 0xEF) {
    if (in.get() == 0xBB && in.get() == 0xBF) {
      offset = 3;
      c = in.get();
    } else {
      throw DumpError(0, "document", "invalid byte order mark");
    }
  }
  while (c >= 0 && IsAsciiSpace(static_cast<char>(c))) {
    ++offset;
    c = in.get();
  }
  if (c < 0) return 0;  // empty input: an empty snapshot

  if (static_cast<char>(c) == '<') {
    in.putback('<');
    XmlDumpParser parser(in, keep_namespaces, sink, offset);
    return parser.Run();
  }
  if (static_cast<char>(c) == '{') {
    std::string first_line(1, '{');
    std::string rest;
    if (std::getline(in, rest)) first_line += rest;
    return ParseJsonLines(in, keep_namespaces, sink, std::move(first_line),
                          offset);
  }
  throw DumpError(offset, "document",
                  "unrecognized dump format (expected '<' or '{')");
}

std::int64_t ParseDumpFile(const std::string& path,
                           const std::set<int>& keep_namespaces,
                           const PageSink& sink) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dump: " + path);
  return ParseDump(in, keep_namespaces, sink);
}

}  // namespace kbdrift
