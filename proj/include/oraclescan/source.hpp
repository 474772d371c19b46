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

#ifndef ORACLESCAN_SOURCE_HPP_
#define ORACLESCAN_SOURCE_HPP_

#include <string>
#include <string_view>

namespace oraclescan {

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(std::string_view bytes);

// A source file as read from disk. `path` is the corpus-relative path used
// in reports; `content_hash` is the SHA-256 of `text`.
struct SourceFile {
  std::string path;
  std::string text;
  std::string content_hash;

  static SourceFile FromText(std::string path, std::string text) {
    SourceFile file{std::move(path), std::move(text), {}};
    file.content_hash = Sha256Hex(file.text);
    return file;
  }
};

}  // namespace oraclescan

#endif  // ORACLESCAN_SOURCE_HPP_
