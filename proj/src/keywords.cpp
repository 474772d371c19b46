// Copyright 2026 The oraclescan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oraclescan/keywords.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "oraclescan/csv.hpp"

namespace oraclescan {

std::string_view ToString(KeywordCategory category) {
  switch (category) {
    case KeywordCategory::kOracleServices: return "OracleServices";
    case KeywordCategory::kCrossChain: return "CrossChain";
  }
  return "?";
}

std::optional<KeywordCategory> KeywordCategoryFromString(
    std::string_view text) {
  if (text == "OracleServices") return KeywordCategory::kOracleServices;
  if (text == "CrossChain") return KeywordCategory::kCrossChain;
  return std::nullopt;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<KeywordEntry> DefaultKeywords() {
  using enum KeywordCategory;
  return {{"oracle", kOracleServices},   {"bridge", kCrossChain},
          {"chainlink", kOracleServices}, {"external", kOracleServices},
          {"api", kCrossChain},           {"dydx", kOracleServices},
          {"crosschain", kCrossChain}};
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<KeywordEntry> LoadKeywords(std::string_view bytes) {
  std::vector<KeywordEntry> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) eol = bytes.size();
    const std::string_view line = Trim(bytes.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw MalformedKeywordFile(line_no, "expected 'category,keyword'");
    }
    const std::string_view category_text = Trim(line.substr(0, comma));
    const std::string_view keyword_text = Trim(line.substr(comma + 1));
    const auto category = KeywordCategoryFromString(category_text);
    if (!category) {
      throw MalformedKeywordFile(
          line_no, "unknown category '" + std::string(category_text) + "'");
    }
    if (keyword_text.empty()) {
      throw MalformedKeywordFile(line_no, "empty keyword");
    }
    if (keyword_text.find_first_of(" \t,") != std::string_view::npos) {
      throw MalformedKeywordFile(line_no, "keyword contains whitespace");
    }
    KeywordEntry entry{ToLower(keyword_text), *category};
    if (std::find(out.begin(), out.end(), entry) != out.end()) {
      throw MalformedKeywordFile(line_no,
                                 "duplicate keyword '" + entry.keyword + "'");
    }
    out.push_back(std::move(entry));
  }
  if (out.empty()) throw EmptyKeywordList();
  return out;
}

std::string KeywordsToCsv(std::span<const KeywordEntry> keywords) {
  std::string out;
  for (const KeywordEntry& k : keywords) {
    out += CsvRow({std::string(ToString(k.category)), k.keyword});
  }
  return out;
}

std::vector<KeywordMatch> MatchNames(std::span<const NameEntry> entries,
                                     std::span<const KeywordEntry> keywords) {
  std::vector<KeywordMatch> out;
  for (const NameEntry& entry : entries) {
    const std::string lowered = ToLower(entry.name);
    for (const KeywordEntry& k : keywords) {
      if (lowered.find(ToLower(k.keyword)) != std::string::npos) {
        out.push_back({k.keyword, k.category, entry});
      }
    }
  }
  return out;
}

std::vector<KeywordUsage> UsageCounts(std::span<const KeywordMatch> matches) {
  std::map<std::pair<std::string, KeywordCategory>, std::size_t> counts;
  for (const KeywordMatch& m : matches) ++counts[{m.keyword, m.category}];
  std::vector<KeywordUsage> out;
  for (const auto& [key, count] : counts) {
    out.push_back({key.first, key.second, count});
  }
  return out;
}

std::vector<KeywordUsage> UsageTable(std::span<const KeywordEntry> keywords,
                                     std::span<const KeywordMatch> matches) {
  std::vector<KeywordUsage> out;
  for (const KeywordEntry& k : keywords) out.push_back({k.keyword, k.category});
  for (const KeywordMatch& m : matches) {
    for (KeywordUsage& u : out) {
      if (u.keyword == m.keyword && u.category == m.category) ++u.count;
    }
  }
  return out;
}

std::vector<KeywordMatch> MatchesWithin(std::span<const KeywordMatch> matches,
                                        std::string_view file,
                                        const Span& span) {
  std::vector<KeywordMatch> out;
  for (const KeywordMatch& m : matches) {
    if (m.entry.file == file && span.Contains(m.entry.span)) out.push_back(m);
  }
  return out;
}

bool ContractInteracts(const AstNode& contract,
                       std::span<const KeywordMatch> scoped) {
  return std::any_of(scoped.begin(), scoped.end(),
                     [&](const KeywordMatch& m) {
                       return contract.span.Contains(m.entry.span);
                     });
}

}  // namespace oraclescan
