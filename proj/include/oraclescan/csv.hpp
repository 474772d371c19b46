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

#ifndef ORACLESCAN_CSV_HPP_
#define ORACLESCAN_CSV_HPP_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace oraclescan {

// RFC 4180 quoting: fields containing `,`, `"`, CR or LF are quoted.
std::string CsvField(std::string_view field);

// Joined, quoted fields terminated by "\n".
std::string CsvRow(std::initializer_list<std::string> fields);

// Splits one line into fields, honouring double-quoted fields. Returns false
// on an unterminated quote.
bool SplitCsvLine(std::string_view line, std::vector<std::string>& fields);

}  // namespace oraclescan

#endif  // ORACLESCAN_CSV_HPP_
