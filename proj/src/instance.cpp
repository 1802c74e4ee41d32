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

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rcc8/network.hpp"

namespace rcc8 {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string write_instance(const Instance& inst) {
  const Network& net = inst.network;
  std::ostringstream out;
  out << "rcc8 n=" << net.size() << " model=" << inst.model
      << " d=" << format_double(inst.d) << " l=" << format_double(inst.l)
      << " seed=" << inst.seed << '\n';
  for (const auto& c : inst.comments) out << "# " << c << '\n';
  for (int i = 0; i < net.size(); ++i) {
    for (int j = i + 1; j < net.size(); ++j) {
      Relation r = net.at(i, j);
      if (r.is_universal()) continue;
      out << i << ' ' << j << " : " << to_string(r) << '\n';
    }
  }
  return out.str();
}

void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << write_instance(inst);
  if (!out) throw DataError("write failed: " + path);
}

namespace {

template <typename T>
bool parse_number(std::string_view text, T& value) {
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

Instance parse_instance(std::string_view text, std::string_view source) {
  Instance inst;
  std::istringstream in{std::string(text)};
  bool have_header = false;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw DataError(std::string(source) + ":" + std::to_string(line_no) +
                    ": " + what);
  };
  std::vector<bool> seen;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      if (have_header) {
        auto c = line.substr(hash + 1);
        if (!c.empty() && c.front() == ' ') c.erase(0, 1);
        if (line.find_first_not_of(" \t") == hash) inst.comments.push_back(c);
      }
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok[0] != "rcc8") fail("expected header starting with 'rcc8'");
      int n = -1;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        auto eq = tok[k].find('=');
        if (eq == std::string::npos) fail("malformed header field '" + tok[k] + "'");
        std::string key = tok[k].substr(0, eq);
        std::string_view val = std::string_view(tok[k]).substr(eq + 1);
        bool ok = true;
        if (key == "n") {
          ok = parse_number(val, n) && n >= 0;
        } else if (key == "model") {
          inst.model = std::string(val);
        } else if (key == "d") {
          ok = parse_number(val, inst.d);
        } else if (key == "l") {
          ok = parse_number(val, inst.l);
        } else if (key == "seed") {
          ok = parse_number(val, inst.seed);
        }
        if (!ok) fail("bad value for header field '" + key + "'");
      }
      if (n < 0) fail("header lacks n=<regions>");
      inst.network = Network(n);
      seen.assign(static_cast<std::size_t>(n) * n, false);
      have_header = true;
      continue;
    }
    if (tok.size() != 4 || tok[2] != ":") fail("expected 'i j : RELATION'");
    int i = 0, j = 0;
    const int n = inst.network.size();
    if (!parse_number(std::string_view(tok[0]), i) ||
        !parse_number(std::string_view(tok[1]), j) || i < 0 || j < 0 ||
        i >= n || j >= n) {
      fail("edge index out of range");
    }
    if (i >= j) fail("edges must be listed with i < j");
    if (seen[static_cast<std::size_t>(i) * n + j]) fail("duplicate edge");
    seen[static_cast<std::size_t>(i) * n + j] = true;
    Relation r;
    try {
      r = parse_relation(tok[3]);
    } catch (const DataError& e) {
      fail(e.what());
    }
    inst.network.set(i, j, r);
  }
  if (!have_header) {
    throw DataError(std::string(source) + ": missing 'rcc8' header");
  }
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

}  // namespace rcc8
