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


#ifndef RAP_TESTS_FIXTURES_HPP_
#define RAP_TESTS_FIXTURES_HPP_

#include <vector>

#include "rap/instance.hpp"

namespace rap::testing {

// r0-t0-r1-t1-r0: e0 = {r0,t0}, e1 = {r1,t0}, e2 = {r1,t1}, e3 = {r0,t1}.
inline BipartiteMultigraph c4() {
  return BipartiteMultigraph(2, 2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// r0-t0-r1-t1: the middle edge e1 is in no perfect matching.
inline BipartiteMultigraph p4() {
  return BipartiteMultigraph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
}

inline RapInstance uniform_unit(const BipartiteMultigraph& g) {
  return RapInstance(g, all_edges(g), std::vector<double>(g.num_edges(), 1.0));
}

inline RapInstance nominal(const BipartiteMultigraph& g, std::vector<double> costs) {
  return RapInstance(g, {}, std::move(costs));
}

}  // namespace rap::testing

#endif  // RAP_TESTS_FIXTURES_HPP_
