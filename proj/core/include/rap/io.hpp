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

// Line-based text formats.
//
// Instance:
//   rap 1
//   graph <n_r> <n_t>
//   edge <r> <t> <cost> <v|i>        one line per edge, in id order
//
// Solution:
//   solution <count>
//   <edge id>                         ascending, one per line
//
// Set cover:
//   setcover <k> <l>
//   set <elem> <elem> ...             l lines, elements 1-based
//
// '#' starts a comment that runs to the end of the line.

#ifndef RAP_IO_HPP_
#define RAP_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rap/instance.hpp"

namespace rap {

struct SetCoverInstance;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

RapInstance read_instance(std::istream& in);
RapInstance read_instance_file(const std::string& path);

// `edge_comments`, when non-empty, holds one trailing comment per edge.
// `header_comments` are written as '#' lines before the graph line.
void write_instance(std::ostream& out, const RapInstance& inst,
                    const std::vector<std::string>& edge_comments = {},
                    const std::vector<std::string>& header_comments = {});
void write_instance_file(const std::string& path, const RapInstance& inst,
                         const std::vector<std::string>& edge_comments = {},
                         const std::vector<std::string>& header_comments = {});

EdgeSet read_solution(std::istream& in);
EdgeSet read_solution_file(const std::string& path);
void write_solution(std::ostream& out, const EdgeSet& edges);
void write_solution_file(const std::string& path, const EdgeSet& edges);

SetCoverInstance read_set_cover(std::istream& in);
SetCoverInstance read_set_cover_file(const std::string& path);
void write_set_cover(std::ostream& out, const SetCoverInstance& sc);

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace rap

#endif  // RAP_IO_HPP_
