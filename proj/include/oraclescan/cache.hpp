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

#ifndef ORACLESCAN_CACHE_HPP_
#define ORACLESCAN_CACHE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oraclescan/finding.hpp"

namespace oraclescan {

// Append-only store of findings keyed by (content hash, options hash), one
// JSON record per line in `<dir>/findings.jsonl`. Unreadable or corrupted
// lines are skipped and reported through warnings(); I/O failures disable
// the cache instead of failing the caller.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // ORACLE_SCAN_CACHE_DIR, else $XDG_CACHE_HOME/oraclescan, else
  // $HOME/.cache/oraclescan, else ./.oraclescan-cache.
  static std::filesystem::path DefaultDirectory();

  // The cached finding with its `file` field set to `file`.
  std::optional<ContractFinding> Lookup(const std::string& content_hash,
                                        const std::string& options_hash,
                                        const std::string& file) const;

  void Store(const std::string& options_hash, const ContractFinding& finding);

  bool enabled() const { return enabled_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::filesystem::path file() const { return dir_ / "findings.jsonl"; }

 private:
  void Load();

  std::filesystem::path dir_;
  bool enabled_ = true;
  std::map<std::pair<std::string, std::string>, ContractFinding> records_;
  std::vector<std::string> warnings_;
};

}  // namespace oraclescan

#endif  // ORACLESCAN_CACHE_HPP_
