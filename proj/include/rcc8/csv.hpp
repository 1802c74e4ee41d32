// Copyright 2026 The rcc8 Authors
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

#ifndef RCC8_CSV_HPP_
#define RCC8_CSV_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rcc8 {

// Reader for the plain comma-separated files this library writes: no
// quoting, fixed header, every row as wide as the header. Errors are
// DataError with source and line number.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string source,
            std::vector<std::string> expected_header);

  // Header columns when no fixed header was requested.
  const std::vector<std::string>& header() const { return header_; }

  std::optional<std::vector<std::string>> next();

  [[noreturn]] void fail(const std::string& what) const;
  std::uint64_t to_u64(const std::string& field) const;
  double to_double(const std::string& field) const;

 private:
  std::istream& in_;
  std::string source_;
  std::vector<std::string> header_;
  int line_no_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);

// Rejects fields that would break the unquoted format.
const std::string& csv_field(const std::string& field);

}  // namespace rcc8

#endif  // RCC8_CSV_HPP_
