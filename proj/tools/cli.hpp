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


// The `rap` command-line front end: solve, gen, verify and bench.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 infeasible instance,
// 3 solution rejected by the verifier.

#ifndef RAP_TOOLS_CLI_HPP_
#define RAP_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitRejected = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// A bound for display: values within 1e-6 of an integer print as that
// integer, hiding LP round-off.
std::string format_bound(double value);

struct ManifestEntry {
  std::string instance;  // as written in the manifest
  std::string path;      // resolved against the manifest's directory
  std::vector<std::string> algos;
};

// Lines "<instance path> <algo>[,<algo>...]"; '#' comments and blank lines
// are skipped. Throws std::runtime_error on bad lines or unknown algorithms.
std::vector<ManifestEntry> read_manifest(const std::string& path);

// "a..b" (inclusive) or a single number.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text);

struct BenchRow {
  std::string instance;
  std::string algo;
  std::uint64_t seed = 0;
  std::string cost;     // "error: ..." when the run failed
  std::string lb;
  std::string exact;    // blank when the exact solver was skipped
  std::string ratio;    // against exact if known, else against lb
  std::string iters;
  std::string ms;
};

struct BenchOptions {
  std::uint64_t seed_first = 0;
  std::uint64_t seed_last = 0;
  int jobs = 1;
  int exact_max_edges = 26;
};

// Rows sorted by (instance, algo, seed), independent of `jobs`.
std::vector<BenchRow> run_bench(const std::vector<ManifestEntry>& manifest,
                                const BenchOptions& opts);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace rap::cli

#endif  // RAP_TOOLS_CLI_HPP_
