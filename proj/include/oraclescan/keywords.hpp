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

#ifndef ORACLESCAN_KEYWORDS_HPP_
#define ORACLESCAN_KEYWORDS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oraclescan/name_index.hpp"

namespace oraclescan {

enum class KeywordCategory { kOracleServices, kCrossChain };

std::string_view ToString(KeywordCategory category);
std::optional<KeywordCategory> KeywordCategoryFromString(std::string_view text);

struct KeywordEntry {
  std::string keyword;  // lowercase, no whitespace
  KeywordCategory category;

  friend bool operator==(const KeywordEntry&, const KeywordEntry&) = default;
};

class MalformedKeywordFile : public std::runtime_error {
 public:
  MalformedKeywordFile(int line, const std::string& reason)
      : std::runtime_error("keyword file line " + std::to_string(line) + ": " +
                           reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class EmptyKeywordList : public std::runtime_error {
 public:
  EmptyKeywordList() : std::runtime_error("keyword list is empty") {}
};

// The built-in list, one entry per usage-count table row, in table order.
std::vector<KeywordEntry> DefaultKeywords();

// Parses `category,keyword` lines. `#` lines and blank lines are skipped;
// keywords are lowercased; a repeated (keyword, category) pair is an error.
std::vector<KeywordEntry> LoadKeywords(std::string_view bytes);

// Canonical `category,keyword\n` rendering, used for hashing.
std::string KeywordsToCsv(std::span<const KeywordEntry> keywords);

std::string ToLower(std::string_view text);

struct KeywordMatch {
  std::string keyword;
  KeywordCategory category;
  NameEntry entry;
};

// One match per (entry, keyword) pair where the lowercased name contains the
// keyword. Output is ordered by entry, then keyword list order.
std::vector<KeywordMatch> MatchNames(std::span<const NameEntry> entries,
                                     std::span<const KeywordEntry> keywords);

inline std::vector<KeywordMatch> MatchNames(
    const NameIndex& index, std::span<const KeywordEntry> keywords) {
  return MatchNames(std::span<const NameEntry>(index.entries), keywords);
}

struct KeywordUsage {
  std::string keyword;
  KeywordCategory category;
  std::size_t count = 0;

  friend bool operator==(const KeywordUsage&, const KeywordUsage&) = default;
};

// Counts per (keyword, category) that occur in `matches`, ordered by
// keyword then category. Counts sum to matches.size().
std::vector<KeywordUsage> UsageCounts(std::span<const KeywordMatch> matches);

// Every keyword of `keywords` in list order, zero where unmatched.
std::vector<KeywordUsage> UsageTable(std::span<const KeywordEntry> keywords,
                                     std::span<const KeywordMatch> matches);

// Matches whose entry lies inside `span` of `file`.
std::vector<KeywordMatch> MatchesWithin(std::span<const KeywordMatch> matches,
                                        std::string_view file,
                                        const Span& span);

// True iff at least one match hits the contract's own name or a member name.
// `scoped` must already be filtered to the contract (see MatchesWithin).
bool ContractInteracts(const AstNode& contract,
                       std::span<const KeywordMatch> scoped);

}  // namespace oraclescan

#endif  // ORACLESCAN_KEYWORDS_HPP_
