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

#include "oraclescan/name_index.hpp"

#include <algorithm>

#include "oraclescan/csv.hpp"

namespace oraclescan {

std::string_view ToString(NameKind kind) {
  switch (kind) {
    case NameKind::kContract: return "Contract";
    case NameKind::kInterface: return "Interface";
    case NameKind::kLibrary: return "Library";
    case NameKind::kFunction: return "Function";
    case NameKind::kModifier: return "Modifier";
    case NameKind::kEvent: return "Event";
  }
  return "?";
}

std::optional<NameKind> NameKindFromString(std::string_view text) {
  for (NameKind kind : {NameKind::kContract, NameKind::kInterface,
                        NameKind::kLibrary, NameKind::kFunction,
                        NameKind::kModifier, NameKind::kEvent}) {
    if (ToString(kind) == text) return kind;
  }
  return std::nullopt;
}

std::optional<NameKind> NameKindOf(NodeKind kind) {
  switch (kind) {
    case NodeKind::kContractDef: return NameKind::kContract;
    case NodeKind::kInterfaceDef: return NameKind::kInterface;
    case NodeKind::kLibraryDef: return NameKind::kLibrary;
    case NodeKind::kFunctionDef: return NameKind::kFunction;
    case NodeKind::kModifierDef: return NameKind::kModifier;
    case NodeKind::kEventDef: return NameKind::kEvent;
    default: return std::nullopt;
  }
}

std::span<const NameEntry> NameIndex::EntriesOf(std::size_t file_slot) const {
  const std::size_t begin = file_offsets.at(file_slot);
  const std::size_t end = file_slot + 1 < file_offsets.size()
                              ? file_offsets[file_slot + 1]
                              : entries.size();
  return std::span<const NameEntry>(entries).subspan(begin, end - begin);
}

std::vector<NameEntry> IndexUnit(const AstNode& ast, const std::string& file) {
  std::vector<NameEntry> out;
  ForEachNode(ast, [&](const AstNode& node) {
    const auto kind = NameKindOf(node.kind);
    if (kind && node.name && !node.name->empty()) {
      out.push_back({*node.name, *kind, file, node.span});
    }
  });
  return out;
}

NameIndex BuildIndex(std::span<const IndexedUnit> units) {
  std::vector<const IndexedUnit*> ordered;
  ordered.reserve(units.size());
  for (const IndexedUnit& unit : units) ordered.push_back(&unit);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const IndexedUnit* a, const IndexedUnit* b) {
                     return a->file < b->file;
                   });
  NameIndex index;
  for (const IndexedUnit* unit : ordered) {
    index.file_offsets.push_back(index.entries.size());
    std::vector<NameEntry> entries = IndexUnit(*unit->ast, unit->file);
    std::stable_sort(entries.begin(), entries.end(),
                     [](const NameEntry& a, const NameEntry& b) {
                       return a.span.start < b.span.start;
                     });
    for (NameEntry& e : entries) index.entries.push_back(std::move(e));
  }
  return index;
}

std::string IndexToCsv(const NameIndex& index) {
  std::string out = "name,kind,file,line\n";
  for (const NameEntry& e : index.entries) {
    out += CsvRow({e.name, std::string(ToString(e.kind)), e.file,
                   std::to_string(e.span.start.line)});
  }
  return out;
}

}  // namespace oraclescan
