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

#include "oraclescan/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <system_error>

namespace oraclescan {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) {
    enabled_ = false;
    warnings_.push_back("cache disabled: cannot create " + dir_.string() +
                        ": " + ec.message());
    return;
  }
  Load();
}

fs::path ResultCache::DefaultDirectory() {
  if (const char* env = std::getenv("ORACLE_SCAN_CACHE_DIR"); env && *env) {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "oraclescan";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "oraclescan";
  }
  return ".oraclescan-cache";
}

void ResultCache::Load() {
  std::ifstream in(file());
  if (!in) return;  // no cache yet
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const nlohmann::json record = nlohmann::json::parse(line);
      ContractFinding finding = FindingFromJson(record.at("finding"));
      finding.file.clear();
      records_.insert_or_assign(
          {record.at("content_hash").get<std::string>(),
           record.at("options_hash").get<std::string>()},
          std::move(finding));
    } catch (const std::exception& e) {
      warnings_.push_back("cache line " + std::to_string(line_no) +
                          " skipped: " + e.what());
    }
  }
}

std::optional<ContractFinding> ResultCache::Lookup(
    const std::string& content_hash, const std::string& options_hash,
    const std::string& file) const {
  if (!enabled_) return std::nullopt;
  const auto it = records_.find({content_hash, options_hash});
  if (it == records_.end()) return std::nullopt;
  ContractFinding finding = it->second;
  finding.file = file;
  return finding;
}

void ResultCache::Store(const std::string& options_hash,
                        const ContractFinding& finding) {
  if (!enabled_) return;
  ContractFinding stored = finding;
  stored.file.clear();
  nlohmann::ordered_json record;
  record["content_hash"] = finding.content_hash;
  record["options_hash"] = options_hash;
  record["finding"] = FindingToJson(stored);
  const std::string line = record.dump() + "\n";

  // One write() per record on an O_APPEND descriptor keeps concurrent
  // writers from interleaving within a line.
  const int fd = ::open(file().c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) {
    enabled_ = false;
    warnings_.push_back("cache disabled: cannot open " + file().string());
    return;
  }
  const ssize_t written = ::write(fd, line.data(), line.size());
  ::close(fd);
  if (written != static_cast<ssize_t>(line.size())) {
    enabled_ = false;
    warnings_.push_back("cache disabled: short write to " + file().string());
    return;
  }
  records_.insert_or_assign({finding.content_hash, options_hash},
                            std::move(stored));
}

}  // namespace oraclescan
