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


#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "rap/ear.hpp"
#include "rap/error.hpp"
#include "rap/exact.hpp"
#include "rap/io.hpp"
#include "rap/lp.hpp"
#include "rap/reductions.hpp"
#include "rap/round.hpp"

namespace rap::cli {
namespace {

struct SolveArgs {
  std::string algo;
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::string trace;
  std::string dump_lp;
  std::string ear_order = "lowest";
  std::string ear_dump;
  std::string lp = "cuts";
  int max_edges = BnbConfig{}.max_edges;
  bool check = false;
};

struct GenArgs {
  std::string family;
  std::string out;
  std::string variant = "basic";
  std::string in;
  int k = 3;
  int s = 0;
  int t = 0;
  RandomInstanceParams random;
};

struct VerifyArgs {
  std::string in;
  std::string solution;
};

struct BenchArgs {
  std::string manifest;
  std::string seeds = "0..0";
  std::string out;
  int jobs = 1;
  int exact_max_edges = BnbConfig{}.max_edges;
};

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Fn>
void write_to(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  fn(file);
  if (!file) throw std::runtime_error("error writing " + path);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// The LP that lp-round actually solves for `inst`.
RapInstance rounding_instance(const RapInstance& inst) {
  RapInstance work =
      inst.graph().balanced() ? inst : balanced_completion(inst).instance;
  if (!work.vulnerable().empty() && !work.uniform()) {
    work = uniformize(work).instance;
  }
  return work;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const RapInstance inst = read_instance_file(a.in);
  if (a.algo == "ear" && !inst.unit_costs()) {
    err << "warning: ear ignores edge costs and minimizes the edge count\n";
  }
  if (!a.dump_lp.empty()) {
    const RapLp lp = build_lp(rounding_instance(inst));
    write_to(a.dump_lp, out,
             [&](std::ostream& o) { lp.program.write_lp_format(o); });
  }

  const auto start = std::chrono::steady_clock::now();
  Solution solution;
  std::string iters = "-";
  if (a.algo == "lp-round") {
    RoundOptions opts;
    opts.seed = a.seed;
    opts.check_invariants = a.check;
    opts.lp_method = a.lp == "full" ? LpMethod::kFull : LpMethod::kCuts;
    const RoundResult result = solve_lp_round(inst, opts);
    solution = result.solution;
    iters = std::to_string(result.trace.steps.size());
    if (!a.trace.empty()) {
      write_to(a.trace, out, [&](std::ostream& o) { result.trace.write(o); });
    }
  } else if (a.algo == "ear") {
    const EarResult result = solve_ear(inst, parse_ear_order(a.ear_order));
    solution = result.solution;
    if (!a.ear_dump.empty()) {
      write_to(a.ear_dump, out,
               [&](std::ostream& o) { result.write_decomposition(o); });
    }
  } else {
    BnbConfig cfg;
    cfg.max_edges = a.max_edges;
    BnbStats stats;
    solution = solve_exact(inst, cfg, &stats);
    iters = std::to_string(stats.nodes);
  }
  const double ms = elapsed_ms(start);

  // Trust the verifier, not the solver.
  try {
    verify_solution(inst, solution);
  } catch (const InfeasibleError& e) {
    err << "error: solver output rejected: " << e.what() << "\n";
    return kExitRejected;
  }
  if (!a.out.empty()) {
    write_to(a.out, out,
             [&](std::ostream& o) { write_solution(o, solution.edges); });
  }
  const LowerBounds lb = lower_bounds(inst);
  out << "instance=" << a.in << " algo=" << a.algo << " seed=" << a.seed
      << " cost=" << format_number(solution.cost)
      << " edges=" << solution.edges.size() << " feasible=yes iters=" << iters
      << " lb=" << format_bound(lb.best());
  if (lb.best() > 0) {
    out << " ratio_to_lb=" << format_number(solution.cost / lb.best());
  }
  out << " ms=" << format_ms(ms) << "\n";
  return kExitOk;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  RapInstance inst;
  std::vector<std::string> edge_comments;
  std::vector<std::string> header;
  if (a.family == "setcover") {
    if (a.in.empty()) throw std::invalid_argument("--in <set cover file> is required");
    const SetCoverInstance sc = read_set_cover_file(a.in);
    const ReducedInstance ri = from_set_cover(sc, parse_cover_variant(a.variant));
    inst = ri.rap;
    edge_comments = ri.edge_comments();
    header = ri.header_comments();
  } else if (a.family == "gk") {
    inst = gk_family(a.k);
    header.push_back("G_" + std::to_string(a.k));
  } else if (a.family == "snpp") {
    if (a.in.empty()) throw std::invalid_argument("--in <graph instance> is required");
    const SnppReduction red = from_snpp(read_instance_file(a.in).graph(), a.s, a.t);
    inst = red.rap;
    header.push_back("f1 = e" + std::to_string(red.f1) + ", f2 = e" +
                     std::to_string(red.f2) + ", g = e" + std::to_string(red.g));
    header.push_back("optimum = " + std::to_string(red.h_nodes / 2) +
                     " + L/2 + 2 for a shortest nice path of L nodes");
  } else if (a.family == "random") {
    inst = random_instance(a.random);
    header.push_back("random seed " + std::to_string(a.random.seed));
  } else {
    throw std::invalid_argument("unknown family " + a.family);
  }
  write_to(a.out, out, [&](std::ostream& o) {
    write_instance(o, inst, edge_comments, header);
  });
  std::ostream& report = a.out.empty() || a.out == "-" ? err : out;
  report << "nodes r=" << inst.graph().num_r() << " t=" << inst.graph().num_t()
         << " edges=" << inst.num_edges()
         << " vulnerable=" << inst.vulnerable().size() << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const RapInstance inst = read_instance_file(a.in);
  EdgeSet edges = read_solution_file(a.solution);
  for (EdgeId e : edges) {
    if (e < 0 || e >= inst.num_edges()) {
      throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
    }
  }
  const Solution x = make_solution(inst, std::move(edges));
  Certificate cert;
  try {
    cert = verify_solution(inst, x);
  } catch (const InfeasibleError& e) {
    err << e.what() << "\n";
    return kExitRejected;
  }
  out << "feasible cost=" << format_number(x.cost) << " edges=" << x.edges.size()
      << " scenarios=" << cert.matchings.size() << "\n";
  for (const auto& [f, m] : cert.matchings) {
    out << "scenario " << (f == kNoEdge ? std::string("nominal") : "e" + std::to_string(f))
        << ":";
    for (EdgeId e : m.edges) out << " " << e;
    out << "\n";
  }
  return kExitOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream&) {
  BenchOptions opts;
  std::tie(opts.seed_first, opts.seed_last) = parse_seed_range(a.seeds);
  opts.jobs = a.jobs;
  opts.exact_max_edges = a.exact_max_edges;
  const std::vector<BenchRow> rows = run_bench(read_manifest(a.manifest), opts);
  write_to(a.out, out, [&](std::ostream& o) { write_bench_csv(o, rows); });
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Robust assignment solver toolkit", "rap"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--algo", solve.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"lp-round", "ear", "exact"}));
  solve_cmd->add_option("--in", solve.in, "Instance file")->required();
  solve_cmd->add_option("--out", solve.out, "Solution file ('-' for stdout)");
  solve_cmd->add_option("--seed", solve.seed, "Seed for lp-round");
  solve_cmd->add_option("--trace", solve.trace, "Rounding trace file");
  solve_cmd->add_option("--dump-lp", solve.dump_lp,
                        "Write the LP solved by lp-round in CPLEX LP format");
  solve_cmd->add_option("--lp", solve.lp, "LP route for lp-round")
      ->check(CLI::IsMember({"cuts", "full"}));
  solve_cmd->add_option("--ear-order", solve.ear_order, "lowest | random:<seed>");
  solve_cmd->add_option("--ear-dump", solve.ear_dump, "Ear decomposition file");
  solve_cmd->add_option("--max-edges", solve.max_edges, "Edge guard for exact");
  solve_cmd->add_flag("--check-invariants", solve.check,
                      "Check rounding invariants after every iteration");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"setcover", "gk", "snpp", "random"}));
  gen_cmd->add_option("--out", gen.out, "Instance file (default stdout)");
  gen_cmd->add_option("--variant", gen.variant,
                      "basic | uniform_weighted | uniform_card");
  gen_cmd->add_option("--in", gen.in, "Set cover file, or graph instance for snpp");
  gen_cmd->add_option("--k", gen.k, "G_k parameter");
  gen_cmd->add_option("--s", gen.s, "snpp: T-side terminal of the graph");
  gen_cmd->add_option("--t", gen.t, "snpp: R-side terminal of the graph");
  gen_cmd->add_option("--nr", gen.random.num_r, "random: R-side size");
  gen_cmd->add_option("--nt", gen.random.num_t, "random: T-side size");
  gen_cmd->add_option("--edge-prob", gen.random.edge_prob, "random: edge probability");
  gen_cmd->add_option("--vuln-prob", gen.random.vuln_prob,
                      "random: vulnerability probability");
  gen_cmd->add_option("--cost-min", gen.random.cost_min, "random: smallest cost");
  gen_cmd->add_option("--cost-max", gen.random.cost_max, "random: largest cost");
  gen_cmd->add_option("--seed", gen.random.seed, "random: seed");
  gen_cmd->add_option("--max-attempts", gen.random.max_attempts,
                      "random: regeneration cap");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify a solution");
  verify_cmd->add_option("--in", verify.in, "Instance file")->required();
  verify_cmd->add_option("--solution", verify.solution, "Solution file")->required();

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark manifest");
  bench_cmd->add_option("--manifest", bench.manifest, "Manifest file")->required();
  bench_cmd->add_option("--seeds", bench.seeds, "Seed range a..b");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");
  bench_cmd->add_option("--exact-max-edges", bench.exact_max_edges,
                        "Skip the exact column above this many edges");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    return cmd_bench(bench, out, err);
  } catch (const InfeasibleError& e) {
    err << "error: instance is " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rap::cli
