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

#ifndef ORACLESCAN_TESTS_FIXTURES_HPP_
#define ORACLESCAN_TESTS_FIXTURES_HPP_

#include <array>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "oraclescan/source.hpp"

namespace oraclescan::testing {

inline std::filesystem::path FixtureDir() {
  return std::filesystem::path(ORACLESCAN_FIXTURE_DIR);
}

inline constexpr std::array<std::string_view, 5> kListingFiles = {
    "listing1_centralized_oracle.sol", "listing2_decentralized_oracle.sol",
    "listing3_sidechain.sol", "listing4_cross_chain.sol", "listing5_zkp.sol"};

inline std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void WriteText(const std::filesystem::path& path,
                      std::string_view text) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// listing: 1..5
inline SourceFile Listing(int listing) {
  const std::string name(kListingFiles.at(listing - 1));
  return SourceFile::FromText(
      name, ReadText(FixtureDir() / "listings" / name));
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("oraclescan-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view rel) const {
    return path_ / rel;
  }

 private:
  std::filesystem::path path_;
};

inline void CopyListings(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::string_view name : kListingFiles) {
    std::filesystem::copy_file(FixtureDir() / "listings" / name, dir / name,
                               std::filesystem::copy_options::overwrite_existing);
  }
}

}  // namespace oraclescan::testing

#endif  // ORACLESCAN_TESTS_FIXTURES_HPP_
