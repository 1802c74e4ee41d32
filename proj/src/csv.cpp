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

#include "rcc8/csv.hpp"

#include <charconv>
#include <istream>
#include <stdexcept>

#include "rcc8/relation.hpp"

namespace rcc8 {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

const std::string& csv_field(const std::string& field) {
  if (field.find_first_of(",\n\r") != std::string::npos) {
    throw DataError("value not representable in CSV: " + field);
  }
  return field;
}

CsvReader::CsvReader(std::istream& in, std::string source,
                     std::vector<std::string> expected_header)
    : in_(in), source_(std::move(source)) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) break;
  }
  if (line.empty()) fail("missing header");
  header_ = split_csv_line(line);
  if (!expected_header.empty() && header_ != expected_header) {
    fail("unexpected header");
  }
}

std::optional<std::vector<std::string>> CsvReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header_.size()) {
      fail("expected " + std::to_string(header_.size()) + " fields, got " +
           std::to_string(fields.size()));
    }
    return fields;
  }
  return std::nullopt;
}

void CsvReader::fail(const std::string& what) const {
  throw DataError(source_ + ":" + std::to_string(line_no_) + ": " + what);
}

std::uint64_t CsvReader::to_u64(const std::string& field) const {
  std::uint64_t v = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    fail("not an unsigned integer: '" + field + "'");
  }
  return v;
}

double CsvReader::to_double(const std::string& field) const {
  double v = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    fail("not a number: '" + field + "'");
  }
  return v;
}

}  // namespace rcc8
