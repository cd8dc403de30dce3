// Copyright 2026 The bihole-lab Authors
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

// bihole-lab: generation, single runs, oracles and multi-seed benches.
//
// stdout carries exactly one JSON document per invocation (a single line);
// human-readable summaries go to stderr.
//
// Exit codes: 0 answer produced (including "infeasible"), 1 usage error,
// 2 input error, 3 operational failure or failed bench suite.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bihole/bench.hpp"
#include "bihole/bihole.hpp"
#include "bihole/coloring.hpp"
#include "bihole/coupon.hpp"
#include "bihole/errors.hpp"
#include "bihole/generators.hpp"
#include "bihole/graph.hpp"
#include "bihole/matching.hpp"
#include "bihole/oracle.hpp"
#include "bihole/report.hpp"

namespace {

using namespace bihole;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kFailure = 3;

// Input problems (unreadable file, parse error, unbalanced graph, oracle cap).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BipartiteGraph load(const std::string& path) {
  try {
    return read_edge_list_file(path);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

void require_balanced(const BipartiteGraph& g, const std::string& path) {
  if (!g.balanced()) throw InputError(path + ": graph is not balanced");
  if (g.left_count() == 0) throw InputError(path + ": graph is empty");
}

double since_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string join(const std::vector<Vertex>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

struct GenArgs {
  Vertex n = 0;
  std::optional<double> p, delta;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  double p = a.p ? *a.p : *a.delta / static_cast<double>(a.n);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  const BipartiteGraph g = gnnp(a.n, p, Seed{a.seed});
  write_edge_list_file(g, a.out);
  GraphDescriptor d = describe_graph(g, a.out);
  d.seed = a.seed;
  d.p = p;
  emit(to_json(d));
  std::cerr << "wrote " << a.out << ": " << g.left_count() << "x" << g.right_count() << ", "
            << g.edge_count() << " edges\n";
  return kOk;
}

struct BiholeArgs {
  std::string input;
  double epsilon = 0.5;
  std::uint64_t seed = 1;
  std::uint32_t retries = 3;
  std::string witness;
  bool timing = false;
};

int run_find_bihole(const BiholeArgs& a) {
  const BipartiteGraph g = load(a.input);
  require_balanced(g, a.input);
  const BiholeParams params{a.epsilon, a.retries, Seed{a.seed}};
  const auto start = std::chrono::steady_clock::now();
  const BiholeResult res = find_bihole(g, params);
  const double ms = since_ms(start);
  if (!verify_bihole(g, res.hole)) {
    std::cerr << "internal error: bi-hole failed verification\n";
    return kFailure;
  }
  emit(to_json(bihole_report(describe_graph(g, a.input), params, res, ms), a.timing));
  if (!a.witness.empty())
    write_text(a.witness, join(res.hole.left_set) + '\n' + join(res.hole.right_set) + '\n');
  std::cerr << "bi-hole t=" << res.report.t << " target=" << res.report.target
            << (res.report.target_met ? " (met)" : " (missed)") << " in " << ms << " ms\n";
  return kOk;
}

struct ColorArgs {
  std::string input;
  double epsilon = 0.5;
  std::uint64_t seed = 1;
  std::uint32_t retries = 3;
  std::uint64_t resample_cap = 0;
  std::uint64_t stall_window = 0;
  std::string trace_out;
  bool timing = false;
};

int run_color(const ColorArgs& a) {
  const BipartiteGraph g = load(a.input);
  require_balanced(g, a.input);
  ColoringParams params;
  params.epsilon = a.epsilon;
  params.seed = Seed{a.seed};
  params.retries = a.retries;
  params.resample_cap = a.resample_cap;
  params.stall_window = a.stall_window;
  const auto start = std::chrono::steady_clock::now();
  const ColoringResult res = color_balanced(g, params);
  const double ms = since_ms(start);
  if (res.coloring && !verify_coloring(g, *res.coloring)) {
    std::cerr << "internal error: coloring failed verification\n";
    return kFailure;
  }
  emit(to_json(coloring_report(describe_graph(g, a.input), params, res, ms), a.timing));
  if (!a.trace_out.empty()) write_text(a.trace_out, trace_to_json(res.trace).dump(2) + '\n');
  std::cerr << "color: " << outcome_name(res.outcome) << ", phase " << phase_name(res.trace.phase_taken);
  if (res.coloring) std::cerr << ", " << res.coloring->palette_size << " colors";
  std::cerr << " in " << ms << " ms\n";
  return res.outcome == Outcome::Failure ? kFailure : kOk;
}

int run_check_colorable(const std::string& input) {
  const BipartiteGraph g = load(input);
  if (!g.balanced()) throw InputError(input + ": graph is not balanced");
  const Matching m = max_matching_complement(g);
  emit({{"balanced_colorable", m.perfect}, {"matching_size", m.size()}});
  return kOk;
}

int run_oracle(const std::string& input, const std::string& mode, bool complement) {
  const BipartiteGraph g = load(input);
  json out = {{"mode", mode}};
  try {
    if (mode == "bihole") {
      const OracleResult r = max_bihole_exact(g);
      out["optimum"] = *r.optimum;
      out["explored"] = r.explored;
      out["witness"] = {{"left", r.hole->left_set}, {"right", r.hole->right_set}};
    } else if (mode == "chib") {
      const OracleResult r = chi_b_exact(g);
      out["explored"] = r.explored;
      if (r.optimum) {
        out["optimum"] = *r.optimum;
        out["witness"] = {{"left_colors", r.coloring->left_colors},
                          {"right_colors", r.coloring->right_colors}};
      } else {
        out["optimum"] = "infeasible";
      }
    } else {
      out["complement"] = complement;
      out["optimum"] = max_matching_exact(g, complement);
    }
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  emit(out);
  return kOk;
}

int run_coupon(std::uint32_t q, std::uint32_t delta, std::uint64_t trials, std::uint64_t seed) {
  const CouponStats s = coupon_sim(q, delta, trials, Seed{seed});
  emit(to_json(s));
  std::cerr << "coupon q=" << q << ": mean T=" << s.mean_T << " (q H_q=" << coupon_expected_time(q)
            << "), var T=" << s.var_T << ", P[T<=" << delta << "]=" << s.p_hat << '\n';
  return kOk;
}

int run_bench_cmd(const BenchOptions& o, const std::string& csv) {
  const BenchSummary s = run_bench(o);
  emit(s.to_json());
  if (!csv.empty()) write_text(csv, s.to_csv());
  std::cerr << "bench " << s.suite << ": " << s.rows.size() << " trials, success "
            << s.success_fraction << ", " << s.metric << " min/median/max " << s.metric_min << '/'
            << s.metric_median << '/' << s.metric_max << " -> " << (s.passed ? "PASS" : "FAIL")
            << " [" << s.threshold << "]\n";
  return s.passed ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-holes and balanced colorings of bipartite graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate G(n, n, p) as an edge list");
  gen_cmd->add_option("--n", gen.n, "Vertices per side")->required();
  auto* p_opt = gen_cmd->add_option("--p", gen.p, "Edge probability");
  auto* d_opt = gen_cmd->add_option("--delta", gen.delta, "Expected degree (p = delta / n)");
  p_opt->excludes(d_opt);
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--out", gen.out, "Output edge-list file")->required();

  BiholeArgs bh;
  auto* bh_cmd = app.add_subcommand("find-bihole", "Randomized large bi-hole");
  bh_cmd->add_option("--input", bh.input, "Edge-list file")->required();
  bh_cmd->add_option("--epsilon", bh.epsilon, "Epsilon in (0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  bh_cmd->add_option("--seed", bh.seed, "Seed");
  bh_cmd->add_option("--retries", bh.retries, "Extra attempts while below target");
  bh_cmd->add_option("--emit-witness", bh.witness, "Write left/right index lines to file");
  bh_cmd->add_flag("--timing", bh.timing, "Include wall_time_ms in the report");

  ColorArgs col;
  auto* col_cmd = app.add_subcommand("color", "Randomized balanced coloring");
  col_cmd->add_option("--input", col.input, "Edge-list file")->required();
  col_cmd->add_option("--epsilon", col.epsilon, "Epsilon in (0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  col_cmd->add_option("--seed", col.seed, "Seed");
  col_cmd->add_option("--retries", col.retries, "Pipeline retries before falling back");
  col_cmd->add_option("--resample-cap", col.resample_cap, "Resampling cap (0: 1000 (n + q))");
  col_cmd->add_option("--stall-window", col.stall_window,
                      "Stop resampling after this many resamples without progress (0: n + q)");
  col_cmd->add_option("--trace-out", col.trace_out, "Write the per-phase trace as JSON");
  col_cmd->add_flag("--timing", col.timing, "Include wall_time_ms in the report");

  std::string cc_input;
  auto* cc_cmd = app.add_subcommand("check-colorable", "Balanced colorability via complement matching");
  cc_cmd->add_option("--input", cc_input, "Edge-list file")->required();

  std::string or_input, or_mode = "bihole";
  bool or_complement = false;
  auto* or_cmd = app.add_subcommand("oracle", "Exhaustive answers for small graphs");
  or_cmd->add_option("--input", or_input, "Edge-list file")->required();
  or_cmd->add_option("--mode", or_mode, "bihole | chib | matching")
      ->check(CLI::IsMember({"bihole", "chib", "matching"}));
  or_cmd->add_flag("--complement", or_complement, "matching mode: match in the complement");

  BenchOptions bench;
  std::string bench_csv;
  auto* bench_cmd = app.add_subcommand("bench", "Multi-seed suites with pass/fail thresholds");
  bench_cmd->add_option("--suite", bench.suite, "bihole | color | coupon")
      ->required()
      ->check(CLI::IsMember({"bihole", "color", "coupon"}));
  bench_cmd->add_option("--seeds", bench.seeds, "Number of trials");
  bench_cmd->add_option("--base-seed", bench.base_seed, "Seed of the first trial");
  bench_cmd->add_option("--n", bench.n, "Vertices per side");
  auto* bp = bench_cmd->add_option("--p", bench.p, "Edge probability");
  auto* bd = bench_cmd->add_option("--delta", bench.delta,
                                   "Degree (p = delta / n; color caps max degree; coupon: T bound)");
  (void)bp;
  (void)bd;
  bench_cmd->add_option("--epsilon", bench.epsilon, "Epsilon in (0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--retries", bench.retries, "Retries per trial");
  bench_cmd->add_option("--q", bench.q, "Coupon colors");
  bench_cmd->add_option("--trials", bench.trials, "Coupon trials per seed");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0: BIHOLE_LAB_THREADS)");
  bench_cmd->add_option("--csv", bench_csv, "Also write per-seed rows as CSV");
  bench_cmd->add_flag("--timing", bench.include_timing, "Include wall_time_ms in reports");

  std::uint32_t cq = 20, cdelta = 64;
  std::uint64_t ctrials = 100000, cseed = 1;
  auto* coupon_cmd = app.add_subcommand("coupon", "Coupon-collector simulation");
  coupon_cmd->add_option("--q", cq, "Colors")->check(CLI::PositiveNumber);
  coupon_cmd->add_option("--delta", cdelta, "Report P[T <= delta]");
  coupon_cmd->add_option("--trials", ctrials, "Trials")->check(CLI::PositiveNumber);
  coupon_cmd->add_option("--seed", cseed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (*gen_cmd && !gen.p && !gen.delta) {
    std::cerr << "gen: one of --p or --delta is required\n";
    return kUsage;
  }
  if ((*bh_cmd && (bh.epsilon <= 0 || bh.epsilon >= 1)) ||
      (*col_cmd && (col.epsilon <= 0 || col.epsilon >= 1)) ||
      (*bench_cmd && (bench.epsilon <= 0 || bench.epsilon >= 1))) {
    std::cerr << "--epsilon must lie strictly between 0 and 1\n";
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*bh_cmd) return run_find_bihole(bh);
    if (*col_cmd) return run_color(col);
    if (*cc_cmd) return run_check_colorable(cc_input);
    if (*or_cmd) return run_oracle(or_input, or_mode, or_complement);
    if (*bench_cmd) return run_bench_cmd(bench, bench_csv);
    if (*coupon_cmd) return run_coupon(cq, cdelta, ctrials, cseed);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
