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


#ifndef RAP_TESTS_SETCOVER_CATALOGUE_HPP_
#define RAP_TESTS_SETCOVER_CATALOGUE_HPP_

#include <algorithm>
#include <vector>

#include "rap/reductions.hpp"
#include "rap/rng.hpp"

namespace rap::testing {

// Hand-picked coverable instances with k <= 5 and at most four sets.
inline std::vector<SetCoverInstance> setcover_catalogue() {
  return {
      {1, {{1}}},
      {1, {{1}, {1}}},
      {2, {{1, 2}}},
      {2, {{1}, {2}}},
      {2, {{1, 2}, {1}}},
      {2, {{1}, {1, 2}, {2}}},
      {3, {{1, 2, 3}}},
      {3, {{1}, {2}, {3}}},
      {3, {{1, 2}, {2, 3}}},
      {3, {{1, 2}, {2, 3}, {1, 3}}},
      {3, {{1}, {2, 3}, {1, 2}, {3}}},
      {3, {{1, 2, 3}, {1}, {2}, {3}}},
      {4, {{1, 2}, {3, 4}}},
      {4, {{1, 2}, {2, 3}, {3, 4}}},
      {4, {{1, 2, 3}, {2, 3, 4}, {1, 4}}},
      {4, {{1}, {2}, {3}, {4}}},
      {4, {{1, 2, 3, 4}, {1, 2}, {3, 4}}},
      {4, {{1, 3}, {2, 4}, {1, 2}, {3, 4}}},
      {5, {{1, 2, 3, 4, 5}}},
      {5, {{1, 2, 3}, {4, 5}}},
      {5, {{1, 2}, {3, 4}, {5}}},
      {5, {{1, 2, 3}, {3, 4, 5}, {1, 5}, {2, 4}}},
      {5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}},
      {5, {{1, 4}, {2, 5}, {3}, {1, 2, 3}}},
      {5, {{1, 2, 3, 4}, {2, 3, 4, 5}, {1}, {5}}},
  };
}

// Random coverable instance with k <= 5 and |S| <= 4: each set picks each
// element with probability 1/2; uncovered elements go into a random set.
inline SetCoverInstance random_setcover(std::uint64_t seed) {
  Rng rng(seed);
  SetCoverInstance sc;
  sc.k = static_cast<int>(rng.uniform_int(1, 5));
  sc.sets.resize(static_cast<std::size_t>(rng.uniform_int(1, 4)));
  for (auto& s : sc.sets) {
    for (int e = 1; e <= sc.k; ++e) {
      if (rng.bernoulli(0.5)) s.push_back(e);
    }
  }
  for (int e = 1; e <= sc.k; ++e) {
    const bool covered = std::any_of(sc.sets.begin(), sc.sets.end(), [&](const auto& s) {
      return std::find(s.begin(), s.end(), e) != s.end();
    });
    if (covered) continue;
    auto& s = sc.sets[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(sc.sets.size()) - 1))];
    s.insert(std::upper_bound(s.begin(), s.end(), e), e);
  }
  for (auto& s : sc.sets) {
    if (s.empty()) s.push_back(static_cast<int>(rng.uniform_int(1, sc.k)));
  }
  return sc;
}

// Every coverable instance with k <= 2 and |S| <= 2, up to set order.
inline std::vector<SetCoverInstance> tiny_setcovers() {
  return {
      {1, {{1}}},
      {1, {{1}, {1}}},
      {2, {{1, 2}}},
      {2, {{1}, {2}}},
      {2, {{1, 2}, {1}}},
      {2, {{1, 2}, {2}}},
      {2, {{1, 2}, {1, 2}}},
  };
}

// All subsets of {0..l-1} as index lists.
inline std::vector<std::vector<int>> all_subsets(int l) {
  std::vector<std::vector<int>> out;
  for (int bits = 0; bits < (1 << l); ++bits) {
    std::vector<int> c;
    for (int i = 0; i < l; ++i) {
      if ((bits >> i) & 1) c.push_back(i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace rap::testing

#endif  // RAP_TESTS_SETCOVER_CATALOGUE_HPP_
