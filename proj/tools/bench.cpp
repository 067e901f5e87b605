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


#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cli.hpp"
#include "rap/ear.hpp"
#include "rap/exact.hpp"
#include "rap/io.hpp"
#include "rap/round.hpp"

namespace rap::cli {
namespace {

bool known_algo(const std::string& name) {
  return name == "lp-round" || name == "ear" || name == "exact";
}

// Runs fn(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  const auto count = std::min<std::size_t>(std::max(jobs, 1), n);
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
}

struct Prepared {
  std::optional<RapInstance> inst;
  std::string load_error;
  std::string lb;
  std::optional<double> exact;
};

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string error_text(const std::exception& e) {
  return std::string("error: ") + e.what();
}

BenchRow run_one(const ManifestEntry& entry, const Prepared& prep,
                 const std::string& algo, std::uint64_t seed) {
  BenchRow row{entry.instance, algo, seed, "", prep.lb, "", "", "", ""};
  if (prep.exact) row.exact = format_number(*prep.exact);
  if (!prep.inst) {
    row.cost = prep.load_error;
    return row;
  }
  const RapInstance& inst = *prep.inst;
  try {
    const auto start = std::chrono::steady_clock::now();
    Solution solution;
    if (algo == "lp-round") {
      RoundOptions opts;
      opts.seed = seed;
      const RoundResult result = solve_lp_round(inst, opts);
      solution = result.solution;
      row.iters = std::to_string(result.trace.steps.size());
    } else if (algo == "ear") {
      solution = solve_ear(inst).solution;
    } else {
      BnbStats stats;
      solution = solve_exact(inst, {}, &stats);
      row.iters = std::to_string(stats.nodes);
    }
    row.ms = format_ms(std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count());
    verify_solution(inst, solution);
    row.cost = format_number(solution.cost);
    double denom = 0.0;
    if (prep.exact) {
      denom = *prep.exact;
    } else if (!prep.lb.empty()) {
      denom = std::stod(prep.lb);
    }
    if (denom > 0) row.ratio = format_number(solution.cost / denom);
  } catch (const std::exception& e) {
    row.cost = error_text(e);
  }
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c == '\n' ? ' ' : c;
  }
  return quoted + "\"";
}

}  // namespace

std::string format_bound(double value) {
  const double nearest = std::round(value);
  return format_number(std::abs(value - nearest) <= 1e-6 ? nearest : value);
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    ManifestEntry entry;
    std::string algos;
    if (!(tokens >> entry.instance)) continue;
    std::string extra;
    if (!(tokens >> algos) || (tokens >> extra)) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected '<instance> <algo>[,<algo>]'");
    }
    std::istringstream split(algos);
    for (std::string algo; std::getline(split, algo, ',');) {
      if (!known_algo(algo)) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": unknown algorithm " + algo);
      }
      entry.algos.push_back(algo);
    }
    const std::filesystem::path p(entry.instance);
    entry.path = p.is_absolute() ? p.string() : (base / p).string();
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::uint64_t seed = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {seed, seed};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const std::uint64_t a = std::stoull(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const std::uint64_t b = std::stoull(hi, &used);
    if (used != hi.size() || b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad seed range '" + text + "'");
  }
}

std::vector<BenchRow> run_bench(const std::vector<ManifestEntry>& manifest,
                                const BenchOptions& opts) {
  std::vector<Prepared> prepared(manifest.size());
  parallel_for(manifest.size(), opts.jobs, [&](std::size_t i) {
    Prepared& p = prepared[i];
    try {
      p.inst = read_instance_file(manifest[i].path);
    } catch (const std::exception& e) {
      p.load_error = error_text(e);
      return;
    }
    try {
      p.lb = format_bound(lower_bounds(*p.inst).best());
    } catch (const std::exception&) {
      // Infeasible instances have no bound; the solver rows say why.
    }
    if (p.inst->num_edges() <= opts.exact_max_edges) {
      try {
        BnbConfig cfg;
        cfg.max_edges = opts.exact_max_edges;
        p.exact = solve_exact(*p.inst, cfg).cost;
      } catch (const std::exception&) {
      }
    }
  });

  struct Task {
    std::size_t entry;
    std::string algo;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    for (const std::string& algo : manifest[i].algos) {
      for (std::uint64_t s = opts.seed_first; s <= opts.seed_last; ++s) {
        tasks.push_back({i, algo, s});
        if (s == opts.seed_last) break;  // guards seed_last == UINT64_MAX
      }
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  parallel_for(tasks.size(), opts.jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    rows[i] = run_one(manifest[t.entry], prepared[t.entry], t.algo, t.seed);
  });
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.instance, a.algo, a.seed) < std::tie(b.instance, b.algo, b.seed);
  });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,algo,seed,cost,lb,exact,ratio,iters,ms\n";
  for (const BenchRow& r : rows) {
    out << csv_field(r.instance) << ',' << r.algo << ',' << r.seed << ','
        << csv_field(r.cost) << ',' << r.lb << ',' << r.exact << ',' << r.ratio
        << ',' << r.iters << ',' << r.ms << '\n';
  }
}

}  // namespace rap::cli
