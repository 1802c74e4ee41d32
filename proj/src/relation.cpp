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

#include "rcc8/relation.hpp"

namespace rcc8 {

std::optional<Base> parse_base(std::string_view token) {
  for (Base b : kAllBases) {
    if (name(b) == token) return b;
  }
  return std::nullopt;
}

std::string to_string(Relation r) {
  if (r.is_universal()) return "*";
  if (r.is_empty()) return "{}";
  std::string out;
  r.for_each([&](Base b) {
    if (!out.empty()) out += '|';
    out += name(b);
  });
  return out;
}

Relation parse_relation(std::string_view text) {
  if (text == "*") return Relation::universal();
  if (text == "{}") return Relation::empty();
  if (text.empty()) throw DataError("empty relation token");
  Relation out;
  while (!text.empty()) {
    auto bar = text.find('|');
    auto token = text.substr(0, bar);
    auto base = parse_base(token);
    if (!base) {
      throw DataError("unknown base relation '" + std::string(token) + "'");
    }
    out = out | Relation(*base);
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
    if (text.empty()) throw DataError("dangling '|' in relation");
  }
  return out;
}

}  // namespace rcc8
