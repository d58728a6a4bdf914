// Copyright 2026 The hausdorff-trees Authors
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

#ifndef HAUSDORFF_IO_HPP
#define HAUSDORFF_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hausdorff/engine.hpp"
#include "hausdorff/tree.hpp"

namespace hausdorff {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

/// Splits a line into whitespace-separated tokens, ignoring everything after
/// a '#'.
inline std::vector<std::string_view> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace detail

/// Parses the edge-list document format: a header line holding the vertex
/// count n, followed by n-1 lines "a b" of 0-based endpoints. '#' starts a
/// comment; blank lines are skipped.
inline Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int header_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::tokens_of(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, "header must be a single vertex count");
      }
      if (!detail::parse_int(tokens[0], n) || n < 1) {
        throw ParseError(line_no, "bad vertex count '" + std::string(tokens[0]) + "'");
      }
      header_line = line_no;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected an edge 'a b', found " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    int a = 0;
    int b = 0;
    if (!detail::parse_int(tokens[0], a)) {
      throw ParseError(line_no, "non-integer token '" + std::string(tokens[0]) + "'");
    }
    if (!detail::parse_int(tokens[1], b)) {
      throw ParseError(line_no, "non-integer token '" + std::string(tokens[1]) + "'");
    }
    edges.emplace_back(a, b);
  }
  if (n < 0) throw ParseError(line_no, "missing header line");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw ParseError(line_no, "expected " + std::to_string(n - 1) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Tree(n, std::move(edges));
  } catch (const TreeError& e) {
    throw ParseError(header_line, e.what());
  }
}

/// Inverse of parse_edge_list: header plus normalized sorted edges, one per
/// line, '\n' endings.
inline std::string serialize_edge_list(const Tree& tree) {
  std::string out = std::to_string(tree.vertex_count());
  out += '\n';
  for (const auto& [a, b] : tree.edges()) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

inline Tree load_tree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

/// Computed distance plus its witness, as written by `compute --out` and read
/// back by `verify`. JSON with a stable key order.
struct ResultDocument {
  int distance = 0;
  int root1 = 0;
  int root2 = 0;
  bool swapped = false;
  std::vector<std::pair<int, int>> mapping;
  int cover_distance = 0;

  static ResultDocument from_result(const HausdorffResult& result,
                                    const CoverDistanceReport& report) {
    ResultDocument doc;
    doc.distance = result.distance;
    doc.root1 = result.root1;
    doc.root2 = result.root2;
    doc.swapped = result.swapped;
    doc.mapping = result.mapping;
    doc.cover_distance = report.cover_distance;
    return doc;
  }

  HausdorffResult to_result() const {
    HausdorffResult result;
    result.distance = distance;
    result.root1 = root1;
    result.root2 = root2;
    result.swapped = swapped;
    result.mapping = mapping;
    return result;
  }

  // Hand-rolled emitter keeps each mapping pair on one line; stable key
  // order makes the documents diffable.
  std::string to_json() const {
    std::string out = "{\n";
    out += "  \"distance\": " + std::to_string(distance) + ",\n";
    out += "  \"root1\": " + std::to_string(root1) + ",\n";
    out += "  \"root2\": " + std::to_string(root2) + ",\n";
    out += std::string("  \"swapped\": ") + (swapped ? "true" : "false") + ",\n";
    out += "  \"mapping\": [";
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      out += i == 0 ? "" : ", ";
      out += "[" + std::to_string(mapping[i].first) + ", " +
             std::to_string(mapping[i].second) + "]";
    }
    out += "],\n";
    out += "  \"cover_distance\": " + std::to_string(cover_distance) + "\n";
    out += "}\n";
    return out;
  }

  static ResultDocument from_json(const std::string& text) {
    ResultDocument doc;
    try {
      const auto j = nlohmann::json::parse(text);
      doc.distance = j.at("distance").get<int>();
      doc.root1 = j.at("root1").get<int>();
      doc.root2 = j.at("root2").get<int>();
      doc.swapped = j.at("swapped").get<bool>();
      doc.cover_distance = j.at("cover_distance").get<int>();
      for (const auto& pair : j.at("mapping")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw std::runtime_error("mapping entries must be [v, w] pairs");
        }
        doc.mapping.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("bad result document: ") + e.what());
    }
    return doc;
  }
};

}  // namespace hausdorff

#endif  // HAUSDORFF_IO_HPP
