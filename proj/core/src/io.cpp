// Copyright 2026 The RAP Toolkit Authors
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

#include "rap/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rap/reductions.hpp"

namespace rap {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits the stream into non-empty, comment-stripped token lines.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (const auto hash = text.find('#'); hash != std::string::npos) {
      text.erase(hash);
    }
    std::istringstream words(text);
    Line line{number, {}};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& token) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line.number, "expected an integer, got '" + token + "'");
  }
  return value;
}

double parse_cost(const Line& line, const std::string& token) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value,
                      std::chars_format::fixed);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      !std::isfinite(value) || value < 0.0) {
    throw ParseError(line.number,
                     "expected a non-negative decimal, got '" + token + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " +
                                      std::to_string(count - 1) + " fields");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                       std::chars_format::fixed);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buffer, ptr);
}

RapInstance read_instance(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty instance");
  const Line& header = lines[0];
  if (header.tokens[0] != "rap" || header.tokens.size() != 2 ||
      header.tokens[1] != "1") {
    throw ParseError(header.number, "expected 'rap 1'");
  }
  if (lines.size() < 2 || lines[1].tokens[0] != "graph") {
    throw ParseError(lines.size() < 2 ? header.number : lines[1].number,
                     "expected 'graph <n_r> <n_t>'");
  }
  expect_arity(lines[1], 3);
  const int num_r = parse_int(lines[1], lines[1].tokens[1]);
  const int num_t = parse_int(lines[1], lines[1].tokens[2]);
  if (num_r < 0 || num_t < 0) {
    throw ParseError(lines[1].number, "negative node count");
  }
  std::vector<Edge> edges;
  std::vector<double> costs;
  EdgeSet vulnerable;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "edge") {
      throw ParseError(line.number, "unexpected '" + line.tokens[0] + "'");
    }
    expect_arity(line, 5);
    const int r = parse_int(line, line.tokens[1]);
    const int t = parse_int(line, line.tokens[2]);
    if (r < 0 || r >= num_r || t < 0 || t >= num_t) {
      throw ParseError(line.number, "endpoint out of range");
    }
    const std::string& flag = line.tokens[4];
    if (flag != "v" && flag != "i") {
      throw ParseError(line.number, "vulnerability flag must be 'v' or 'i'");
    }
    if (flag == "v") vulnerable.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({r, t});
    costs.push_back(parse_cost(line, line.tokens[3]));
  }
  return RapInstance(BipartiteMultigraph(num_r, num_t, std::move(edges)),
                     std::move(vulnerable), std::move(costs));
}

RapInstance read_instance_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const RapInstance& inst,
                    const std::vector<std::string>& edge_comments,
                    const std::vector<std::string>& header_comments) {
  const BipartiteMultigraph& g = inst.graph();
  out << "rap 1\n";
  for (const std::string& c : header_comments) out << "# " << c << '\n';
  out << "graph " << g.num_r() << ' ' << g.num_t() << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "edge " << g.edge(e).r << ' ' << g.edge(e).t << ' '
        << format_number(inst.cost(e)) << ' '
        << (inst.is_vulnerable(e) ? 'v' : 'i');
    if (e < static_cast<EdgeId>(edge_comments.size()) &&
        !edge_comments[e].empty()) {
      out << "  # " << edge_comments[e];
    }
    out << '\n';
  }
}

void write_instance_file(const std::string& path, const RapInstance& inst,
                         const std::vector<std::string>& edge_comments,
                         const std::vector<std::string>& header_comments) {
  std::ofstream out = open_output(path);
  write_instance(out, inst, edge_comments, header_comments);
}

EdgeSet read_solution(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "solution") {
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "expected 'solution <count>'");
  }
  expect_arity(lines[0], 2);
  const int count = parse_int(lines[0], lines[0].tokens[1]);
  if (count < 0 || static_cast<std::size_t>(count) != lines.size() - 1) {
    throw ParseError(lines[0].number, "edge count does not match");
  }
  EdgeSet edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_arity(lines[i], 1);
    const int e = parse_int(lines[i], lines[i].tokens[0]);
    if (e < 0 || (!edges.empty() && e <= edges.back())) {
      throw ParseError(lines[i].number, "edge ids must be ascending");
    }
    edges.push_back(e);
  }
  return edges;
}

EdgeSet read_solution_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_solution(in);
}

void write_solution(std::ostream& out, const EdgeSet& edges) {
  out << "solution " << edges.size() << '\n';
  for (EdgeId e : edges) out << e << '\n';
}

void write_solution_file(const std::string& path, const EdgeSet& edges) {
  std::ofstream out = open_output(path);
  write_solution(out, edges);
}

SetCoverInstance read_set_cover(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "setcover") {
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "expected 'setcover <k> <l>'");
  }
  expect_arity(lines[0], 3);
  SetCoverInstance sc;
  sc.k = parse_int(lines[0], lines[0].tokens[1]);
  const int l = parse_int(lines[0], lines[0].tokens[2]);
  if (sc.k < 0 || l < 0 || static_cast<std::size_t>(l) != lines.size() - 1) {
    throw ParseError(lines[0].number, "set count does not match");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] != "set") {
      throw ParseError(lines[i].number, "expected 'set <elem> ...'");
    }
    std::vector<int> set;
    for (std::size_t j = 1; j < lines[i].tokens.size(); ++j) {
      const int elem = parse_int(lines[i], lines[i].tokens[j]);
      if (elem < 1 || elem > sc.k) {
        throw ParseError(lines[i].number, "element out of range");
      }
      set.push_back(elem);
    }
    sc.sets.push_back(std::move(set));
  }
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].number, e.what());
  }
  return sc;
}

SetCoverInstance read_set_cover_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_set_cover(in);
}

void write_set_cover(std::ostream& out, const SetCoverInstance& sc) {
  out << "setcover " << sc.k << ' ' << sc.sets.size() << '\n';
  for (const auto& set : sc.sets) {
    out << "set";
    for (int elem : set) out << ' ' << elem;
    out << '\n';
  }
}

}  // namespace rap
