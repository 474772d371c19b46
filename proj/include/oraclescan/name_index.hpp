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

#ifndef ORACLESCAN_NAME_INDEX_HPP_
#define ORACLESCAN_NAME_INDEX_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oraclescan/ast.hpp"

namespace oraclescan {

enum class NameKind { kContract, kInterface, kLibrary, kFunction, kModifier,
                      kEvent };

std::string_view ToString(NameKind kind);
std::optional<NameKind> NameKindFromString(std::string_view text);
std::optional<NameKind> NameKindOf(NodeKind kind);

struct NameEntry {
  std::string name;
  NameKind kind;
  std::string file;
  Span span;

  friend bool operator==(const NameEntry&, const NameEntry&) = default;
};

// Corpus-wide list of declared names, ordered by file path then span start.
// `file_offsets[i]` is the index of the first entry of the i-th distinct
// file (in path order); entries of that file end at the next offset.
struct NameIndex {
  std::vector<NameEntry> entries;
  std::vector<std::size_t> file_offsets;

  std::span<const NameEntry> EntriesOf(std::size_t file_slot) const;
};

// Named definitions in `ast`, in pre-order. Constructors, parameters and
// inheritance specifiers are not definitions and produce no entry.
std::vector<NameEntry> IndexUnit(const AstNode& ast, const std::string& file);

struct IndexedUnit {
  const AstNode* ast;
  std::string file;
};

NameIndex BuildIndex(std::span<const IndexedUnit> units);

// `name,kind,file,line` with a header row.
std::string IndexToCsv(const NameIndex& index);

}  // namespace oraclescan

#endif  // ORACLESCAN_NAME_INDEX_HPP_
