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

#include "kbdrift/index_io.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "kbdrift/errors.h"
#include "sha256.h"

namespace kbdrift {

namespace {

constexpr double kPriorSumTolerance = 1e-9;
constexpr std::string_view kChecksumPrefix = "#sha256 ";

void WriteFileAtomically(const std::string& path, std::string_view data) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write: " + tmp);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot rename " + tmp + " to " + path);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Splits `data` into lines, hashing every byte that precedes the checksum
// trailer, then verifies the trailer. Returns the content lines.
std::vector<std::string_view> ChecksummedLines(std::string_view data,
                                               const std::string& name) {
  std::vector<std::string_view> lines;
  Sha256 hasher;
  std::size_t pos = 0;
  std::int64_t line_no = 0;
  while (pos < data.size()) {
    ++line_no;
    std::size_t eol = data.find('\n', pos);
    if (eol == std::string_view::npos)
      throw FormatError(name, line_no, "missing final newline");
    std::string_view line = data.substr(pos, eol - pos);
    bool is_trailer = line.size() > kChecksumPrefix.size() &&
                      line.substr(0, kChecksumPrefix.size()) == kChecksumPrefix &&
                      line.find('\t') == std::string_view::npos;
    if (is_trailer) {
      if (eol + 1 != data.size())
        throw FormatError(name, line_no + 1, "content after checksum line");
      std::string expected(line.substr(kChecksumPrefix.size()));
      std::string actual = hasher.HexDigest();
      if (expected != actual)
        throw ChecksumError(name, line_no,
                            "checksum mismatch: stored " + expected +
                                ", computed " + actual);
      return lines;
    }
    hasher.Update(data.substr(pos, eol - pos + 1));
    lines.push_back(line);
    pos = eol + 1;
  }
  throw FormatError(name, line_no + 1, "truncated file: missing #sha256 line");
}

std::int64_t ParseInt64(std::string_view text, const std::string& name,
                        std::int64_t line_no) {
  std::string buf(text);
  char* end = nullptr;
  errno = 0;
  long long value = std::strtoll(buf.c_str(), &end, 10);
  if (errno != 0 || end != buf.c_str() + buf.size() || buf.empty())
    throw FormatError(name, line_no, "not an integer: '" + buf + "'");
  return static_cast<std::int64_t>(value);
}

double ParseDouble(std::string_view text, const std::string& name,
                   std::int64_t line_no) {
  std::string buf(text);
  char* end = nullptr;
  errno = 0;
  double value = std::strtod(buf.c_str(), &end);
  if (errno != 0 || end != buf.c_str() + buf.size() || buf.empty())
    throw FormatError(name, line_no, "not a number: '" + buf + "'");
  return value;
}

// Expects `#<key> <value>` on the given header line.
std::string_view HeaderValue(const std::vector<std::string_view>& lines,
                             std::size_t idx, std::string_view key,
                             const std::string& name) {
  std::string prefix = "#" + std::string(key) + " ";
  if (idx >= lines.size() || lines[idx].substr(0, prefix.size()) != prefix)
    throw FormatError(name, static_cast<std::int64_t>(idx) + 1,
                      "expected header '#" + std::string(key) + " ...'");
  return lines[idx].substr(prefix.size());
}

void ValidateEntry(const MentionEntry& entry, const std::string& name,
                   std::int64_t first_line) {
  double prior_sum = 0.0;
  std::int64_t count_sum = 0;
  for (const CandidateEntity& c : entry.candidates) {
    prior_sum += c.prior;
    count_sum += c.count;
  }
  if (std::abs(prior_sum - 1.0) > kPriorSumTolerance)
    throw FormatError(name, first_line,
                      "priors of mention '" + entry.mention +
                          "' sum to " + FormatPrior(prior_sum) + ", not 1");
  if (count_sum != entry.total_count)
    throw FormatError(name, first_line, "internal count mismatch");
  for (std::size_t i = 0; i < entry.candidates.size(); ++i) {
    const CandidateEntity& c = entry.candidates[i];
    double expected = static_cast<double>(c.count) /
                      static_cast<double>(entry.total_count);
    if (std::abs(c.prior - expected) > kPriorSumTolerance)
      throw FormatError(name, first_line + static_cast<std::int64_t>(i),
                        "prior of '" + c.entity + "' under mention '" +
                            entry.mention + "' is inconsistent with counts");
    if (i > 0 && RankBefore(c, entry.candidates[i - 1]))
      throw FormatError(name, first_line + static_cast<std::int64_t>(i),
                        "candidates of mention '" + entry.mention +
                            "' are not in rank order");
  }
}

}  // namespace

std::string FormatPrior(double prior) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", prior);
  return buf;
}

std::string SerializeIndex(const PriorIndex& index) {
  std::string out;
  out += "#snapshot " + index.meta.label + "\n";
  out += "#date " + index.meta.dump_date + "\n";
  out += "#pages " + std::to_string(index.meta.page_count) + "\n";
  out += "#min_count " + std::to_string(index.min_count) + "\n";
  for (const auto& [mention, entry] : index.entries) {
    for (const CandidateEntity& c : entry.candidates) {
      out += mention;
      out += '\t';
      out += c.entity;
      out += '\t';
      out += std::to_string(c.count);
      out += '\t';
      out += FormatPrior(c.prior);
      out += '\n';
    }
  }
  out += kChecksumPrefix;
  out += Sha256Hex(std::string_view(out.data(), out.size() - kChecksumPrefix.size()));
  out += '\n';
  return out;
}

void SaveIndex(const PriorIndex& index, const std::string& path) {
  WriteFileAtomically(path, SerializeIndex(index));
}

PriorIndex ParseIndex(std::string_view data, const std::string& name) {
  std::vector<std::string_view> lines = ChecksummedLines(data, name);
  if (lines.size() < 4)
    throw FormatError(name, static_cast<std::int64_t>(lines.size()) + 1,
                      "missing header lines");

  PriorIndex index;
  index.meta.label = std::string(HeaderValue(lines, 0, "snapshot", name));
  index.meta.dump_date = std::string(HeaderValue(lines, 1, "date", name));
  index.meta.page_count =
      ParseInt64(HeaderValue(lines, 2, "pages", name), name, 3);
  index.min_count =
      ParseInt64(HeaderValue(lines, 3, "min_count", name), name, 4);
  if (index.meta.page_count < 0)
    throw FormatError(name, 3, "negative page count");

  MentionEntry current;
  std::int64_t group_first_line = 0;
  auto flush = [&] {
    if (current.mention.empty() && current.candidates.empty()) return;
    for (const CandidateEntity& c : current.candidates)
      current.total_count += c.count;
    ValidateEntry(current, name, group_first_line);
    std::string key = current.mention;
    index.entries.emplace(std::move(key), std::move(current));
    current = MentionEntry{};
  };

  for (std::size_t i = 4; i < lines.size(); ++i) {
    std::int64_t line_no = static_cast<std::int64_t>(i) + 1;
    std::string_view line = lines[i];

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string_view::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 4)
      throw FormatError(name, line_no,
                        "expected 4 tab-separated fields, got " +
                            std::to_string(fields.size()));
    if (fields[0].empty())
      throw FormatError(name, line_no, "empty mention");
    if (fields[1].empty())
      throw FormatError(name, line_no, "empty entity");

    CandidateEntity candidate;
    candidate.entity = std::string(fields[1]);
    candidate.count = ParseInt64(fields[2], name, line_no);
    candidate.prior = ParseDouble(fields[3], name, line_no);
    if (candidate.count < 1)
      throw FormatError(name, line_no, "candidate count must be >= 1");
    if (!(candidate.prior > 0.0 && candidate.prior <= 1.0))
      throw FormatError(name, line_no, "prior out of (0, 1]");

    if (fields[0] != current.mention) {
      if (!current.mention.empty() && std::string(fields[0]) <= current.mention)
        throw FormatError(name, line_no,
                          "mention groups not in ascending order");
      flush();
      current.mention = std::string(fields[0]);
      group_first_line = line_no;
    }
    current.candidates.push_back(std::move(candidate));
  }
  flush();
  return index;
}

PriorIndex LoadIndex(const std::string& path) {
  return ParseIndex(ReadFile(path), path);
}

void SaveArticles(const ArticleSet& articles, const std::string& path) {
  std::vector<std::string_view> sorted(articles.begin(), articles.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (std::string_view title : sorted) {
    out += title;
    out += '\n';
  }
  out += kChecksumPrefix;
  out += Sha256Hex(std::string_view(out.data(), out.size() - kChecksumPrefix.size()));
  out += '\n';
  WriteFileAtomically(path, out);
}

ArticleSet LoadArticles(const std::string& path) {
  std::string data = ReadFile(path);
  std::vector<std::string_view> lines = ChecksummedLines(data, path);
  ArticleSet articles;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty())
      throw FormatError(path, static_cast<std::int64_t>(i) + 1, "empty title");
    articles.insert(std::string(lines[i]));
  }
  return articles;
}

void SaveRedirects(const RedirectMap& redirects, const std::string& path) {
  std::vector<std::pair<std::string_view, std::string_view>> sorted;
  sorted.reserve(redirects.size());
  for (const auto& [from, to] : redirects.mapping()) sorted.emplace_back(from, to);
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& [from, to] : sorted) {
    out += from;
    out += '\t';
    out += to;
    out += '\n';
  }
  out += kChecksumPrefix;
  out += Sha256Hex(std::string_view(out.data(), out.size() - kChecksumPrefix.size()));
  out += '\n';
  WriteFileAtomically(path, out);
}

RedirectMap LoadRedirects(const std::string& path) {
  std::string data = ReadFile(path);
  std::vector<std::string_view> lines = ChecksummedLines(data, path);
  RedirectMap redirects;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::int64_t line_no = static_cast<std::int64_t>(i) + 1;
    std::size_t tab = lines[i].find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == lines[i].size())
      throw FormatError(path, line_no, "expected 'from<TAB>to'");
    redirects.Add(std::string(lines[i].substr(0, tab)),
                  std::string(lines[i].substr(tab + 1)));
  }
  return redirects;
}

}  // namespace kbdrift
