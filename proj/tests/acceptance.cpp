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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Criteria are checked exactly as stated; where a check is
// informational only, the line says so.
//
// Set BIHOLE_UPDATE_GOLDEN=1 to (re)write the golden CLI outputs.

#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bihole/bihole.hpp"
#include "bihole/coloring.hpp"
#include "bihole/coupon.hpp"
#include "bihole/generators.hpp"
#include "bihole/oracle.hpp"
#include "cli_runner.hpp"

namespace {

using namespace bihole;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double x, int digits = 3) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

BipartiteGraph random_graph(Vertex n, double p, std::uint64_t seed) { return gnnp(n, p, Seed{seed}); }

// Desk-scale instance of criterion 5: G(n, n, 64/n) with edges deleted at
// max-degree vertices until the max degree is 64.
BipartiteGraph capped_instance(std::uint64_t seed) {
  return cap_max_degree(gnnp(20000, 64.0 / 20000, Seed{seed}), 64);
}

// u ~ v_{(u + o_j) mod n} for 64 distinct random offsets o_j: exactly
// d-regular on both sides.
BipartiteGraph random_circulant(Vertex n, Vertex d, Seed seed) {
  Rng rng(seed);
  std::vector<Vertex> offsets;
  while (offsets.size() < d) {
    const auto o = static_cast<Vertex>(rng.below(n));
    if (std::find(offsets.begin(), offsets.end(), o) == offsets.end()) offsets.push_back(o);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex o : offsets) edges.emplace_back(u, (u + o) % n);
  return BipartiteGraph::build(n, n, edges);
}

Verdict c1_bihole_soundness() {
  const auto start = Clock::now();
  const std::array<double, 3> ps{0.05, 0.2, 0.5};
  int ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vertex n = 4 + static_cast<Vertex>(mix64(i) % 197);
    const auto g = random_graph(n, ps[i % 3], 1000 + i);
    const auto r = find_bihole(g, {0.5, 3, Seed{static_cast<std::uint64_t>(i)}});
    ok += verify_bihole(g, r.hole);
  }
  const double secs = seconds_since(start);
  return {ok == 1000 && secs < 30,
          std::to_string(ok) + "/1000 verified in " + fmt(secs, 2) + " s (limit 30 s)"};
}

Verdict c2_bihole_desk_scale() {
  int met = 0;
  double worst = 0;
  std::string ts;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto g = gnnp(20000, 64.0 / 20000, Seed{s});
    const auto start = Clock::now();
    const auto r = find_bihole(g, {0.5, 3, Seed{s}});
    worst = std::max(worst, seconds_since(start));
    met += r.hole.size() >= 650 && verify_bihole(g, r.hole);
    ts += (ts.empty() ? "" : ",") + std::to_string(r.hole.size());
  }
  // eps = 0.25 asks for t >= 975: reported, not gated.
  int met_quarter = 0;
  std::string tq;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const auto g = gnnp(20000, 64.0 / 20000, Seed{s});
    const auto r = find_bihole(g, {0.25, 3, Seed{s}});
    met_quarter += r.report.target_met;
    tq += (tq.empty() ? "" : ",") + std::to_string(r.hole.size());
  }
  return {met >= 9 && worst < 5.0,
          std::to_string(met) + "/10 seeds with t >= 650 (t = " + ts + "), slowest trial " +
              fmt(worst, 2) + " s; eps=0.25 (target 975, informational): " +
              std::to_string(met_quarter) + "/10 (t = " + tq + ")"};
}

Verdict c3_left_classes() {
  const double n = 20000, q = 20;
  const double lo = n / q - n / std::log(n), hi = n / q + n / std::log(n);
  std::uint64_t min_size = UINT64_MAX, max_size = 0;
  bool ok = true;
  for (std::uint64_t s = 0; s < 50; ++s) {
    std::vector<std::uint64_t> size(20, 0);
    for (Color c : phase1_color_U(20000, 20, derive(Seed{s}, Stream::ColorLeft))) ++size[c];
    for (auto x : size) {
      ok = ok && x >= lo && x <= hi;
      min_size = std::min(min_size, x);
      max_size = std::max(max_size, x);
    }
  }
  return {ok, "50 seeds, |U_c| range [" + std::to_string(min_size) + ", " +
                  std::to_string(max_size) + "] within [" + fmt(lo, 1) + ", " + fmt(hi, 1) + "]"};
}

Verdict c4_coloring_soundness() {
  const auto start = Clock::now();
  int verified = 0, infeasible = 0, agree = 0;
  for (int i = 0; i < 500; ++i) {
    const Vertex n = 1 + static_cast<Vertex>(mix64(7000 + i) % 12);
    const double p = std::array{0.1, 0.3, 0.5, 0.8}[i % 4];
    const auto g = random_graph(n, p, 5000 + i);
    ColoringParams params;
    params.seed = Seed{static_cast<std::uint64_t>(i)};
    const ColoringResult r = color_balanced(g, params);
    const bool feasible = max_matching_exact(g, true) == n;
    if (r.outcome == Outcome::Infeasible) {
      ++infeasible;
      agree += !feasible;
    } else if (r.outcome == Outcome::Colored && r.coloring && verify_coloring(g, *r.coloring)) {
      ++verified;
      agree += feasible;
    }
  }
  const double secs = seconds_since(start);
  return {agree == 500 && secs < 60,
          std::to_string(verified) + " verified colorings, " + std::to_string(infeasible) +
              " infeasible, " + std::to_string(agree) + "/500 agree with the exact matching, " +
              fmt(secs, 2) + " s (limit 60 s)"};
}

struct DeskRun {
  ColoringResult result;
  bool verified = false;
};

std::vector<DeskRun>& desk_runs() {
  static std::vector<DeskRun> runs = [] {
    std::vector<DeskRun> out;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const auto g = capped_instance(s);
      ColoringParams p;
      p.seed = Seed{s};
      DeskRun run{color_balanced(g, p), false};
      run.verified = run.result.coloring && verify_coloring(g, *run.result.coloring);
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

Verdict c5_palette() {
  int pipeline_ok = 0, verified = 0;
  std::string phases;
  for (const DeskRun& run : desk_runs()) {
    const auto& r = run.result;
    verified += run.verified;
    const bool pipeline = r.trace.phase_taken == Phase::SmallS || r.trace.phase_taken == Phase::LargeS;
    const std::uint32_t palette = r.coloring ? r.coloring->palette_size : 0;
    pipeline_ok += pipeline && run.verified && palette <= 38;
    phases += (phases.empty() ? "" : " ") + phase_name(r.trace.phase_taken) + ":" +
              std::to_string(palette) + (r.trace.fallback_rung.empty() ? "" : "/" + r.trace.fallback_rung);
  }
  const auto& t = desk_runs().front().result.trace;
  return {pipeline_ok >= 8 && verified == 10,
          std::to_string(pipeline_ok) + "/10 seeds colored by the pipeline with palette <= 38 (q=" +
              std::to_string(t.q) + ", d*=" + std::to_string(t.residual_cap) +
              "; needed >= 8); " + std::to_string(verified) + "/10 verified; runs [" + phases +
              "]; the asymptotic (1+eps) D/ln D ~ 23 colors is not expected at D = 64"};
}

Verdict c6_lemma() {
  const auto start = Clock::now();
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    const Vertex d = 1 + i % 5, n = 2 * d + 3;
    const auto g = cap_max_degree(random_graph(n, 0.5, 9000 + i), d);
    const std::uint32_t delta = max_degree(g);
    try {
      const BalancedColoring c = lemma_easy_color(g);
      ok += verify_coloring(g, c) && c.palette_size <= 2 * delta + 1;
    } catch (const std::exception&) {
    }
  }
  const double secs = seconds_since(start);
  return {ok == 200 && secs < 5,
          std::to_string(ok) + "/200 succeed with <= 2D+1 colors, " + fmt(secs, 3) + " s (limit 5 s)"};
}

Verdict c7_oracles() {
  const auto start = Clock::now();
  int bounded = 0, equal = 0, equal_cases = 0;
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 1 + i % 6;
    BipartiteGraph g;
    const bool special = i % 10 == 0 || i % 10 == 5;
    if (i % 10 == 0) g = empty(n);
    else if (i % 10 == 5) g = complete(n);
    else g = random_graph(n, std::array{0.2, 0.4, 0.6}[i % 3], 11000 + i);
    const auto found = find_bihole(g, {0.5, 3, Seed{static_cast<std::uint64_t>(i)}}).hole.size();
    const auto best = *max_bihole_exact(g).optimum;
    bounded += found <= best;
    if (special) {
      ++equal_cases;
      equal += found == best;
    }
  }
  int compared = 0, palette_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const Vertex n = 1 + i % 4;
    const auto g = random_graph(n, std::array{0.2, 0.4, 0.6}[i % 3], 12000 + i);
    ColoringParams p;
    p.seed = Seed{static_cast<std::uint64_t>(i)};
    const ColoringResult r = color_balanced(g, p);
    const OracleResult exact = chi_b_exact(g);
    if (r.coloring && exact.optimum) {
      ++compared;
      palette_ok += r.coloring->palette_size >= *exact.optimum;
    }
  }
  const double secs = seconds_since(start);
  return {bounded == 200 && equal == equal_cases && palette_ok == compared && secs < 60,
          "bi-hole <= optimum " + std::to_string(bounded) + "/200, equality on empty/complete " +
              std::to_string(equal) + "/" + std::to_string(equal_cases) + "; palette >= chi_B " +
              std::to_string(palette_ok) + "/" + std::to_string(compared) + " comparable; " +
              fmt(secs, 2) + " s"};
}

Verdict c8_coupon() {
  const CouponStats two = coupon_sim(2, 2, 100000, Seed{1});
  const CouponStats twenty = coupon_sim(20, 64, 100000, Seed{1});
  const bool mean2 = std::abs(two.mean_T - 3.0) <= 0.05 * 3.0;
  const bool var20 = twenty.var_T < 800;
  const bool mean20 = twenty.mean_T >= 0.95 * 20 * std::log(20.0);

  // At d(v) = D every right vertex sees exactly D independent uniform colors,
  // so on a 64-regular graph |S|/n estimates P[T <= 64] directly. Offsets
  // are random so that neighborhoods barely overlap (a plain circulant makes
  // neighboring v nearly copies of each other). On the capped random
  // instance most degrees are below 64 and |S|/n may only fall short.
  const auto regular = random_circulant(20000, 64, Seed{77});
  double max_gap = 0, max_excess = -1;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto left = phase1_color_U(20000, 20, derive(Seed{s}, Stream::ColorLeft));
    const auto rc = phase2_color_V(regular, left, 20, derive(Seed{s}, Stream::ColorRight));
    max_gap = std::max(max_gap, std::abs(double(rc.uncolored.size()) / 20000 - twenty.p_hat));
  }
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto g = capped_instance(s);
    const auto left = phase1_color_U(20000, 20, derive(Seed{s}, Stream::ColorLeft));
    const auto rc = phase2_color_V(g, left, 20, derive(Seed{s}, Stream::ColorRight));
    max_excess = std::max(max_excess, double(rc.uncolored.size()) / 20000 - twenty.p_hat);
  }
  const bool relate = max_gap <= 0.02 && max_excess <= 0.02;
  return {mean2 && var20 && mean20 && relate,
          "q=2 mean_T " + fmt(two.mean_T) + " (3 +- 5%); q=20 var_T " + fmt(twenty.var_T, 1) +
              " (< 800), mean_T " + fmt(twenty.mean_T, 2) + " (>= " +
              fmt(0.95 * 20 * std::log(20.0), 2) + "); p_hat " + fmt(twenty.p_hat, 4) +
              ", random 64-regular |S|/n max gap " + fmt(max_gap, 4) + " over 20 seeds, capped G(n,n,p) max excess " +
              fmt(max_excess, 4) + " (both <= 0.02)"};
}

// Checks the degree bound on the (S_U, S') graph rebuilt from the trace.
bool large_s_bound_holds(const BipartiteGraph& g, const ColoringTrace& t) {
  std::vector<Vertex> residual = t.uncolored_S;
  residual.insert(residual.end(), t.equalize_removed.begin(), t.equalize_removed.end());
  return max_degree(induced(g, t.selected_SU, residual).graph) <= t.residual_cap;
}

Verdict c9_residual_degree() {
  int desk_large = 0, desk_ok = 0;
  for (std::size_t i = 0; i < desk_runs().size(); ++i) {
    const auto& t = desk_runs()[i].result.trace;
    if (t.phase_taken != Phase::LargeS) continue;
    ++desk_large;
    desk_ok += large_s_bound_holds(capped_instance(i + 1), t);
  }
  // A desk-scale graph on which the large-S branch does complete.
  const auto g = circulant_with_hub(100000, 20, 64);
  int hub_large = 0, hub_ok = 0;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    ColoringParams p;
    p.epsilon = 0.05;
    p.seed = Seed{s};
    const ColoringResult r = color_balanced(g, p);
    if (r.trace.phase_taken != Phase::LargeS) continue;
    ++hub_large;
    hub_ok += large_s_bound_holds(g, r.trace) && r.coloring && verify_coloring(g, *r.coloring);
  }
  return {desk_ok == desk_large && hub_ok == hub_large && desk_large + hub_large > 0,
          "capped G(n,n,64/n): " + std::to_string(desk_ok) + "/" + std::to_string(desk_large) +
              " large-S runs within d*=8; circulant(100000, 20)+hub(64), eps=0.05: " +
              std::to_string(hub_ok) + "/" + std::to_string(hub_large) + " large-S runs within d*=8"};
}

Verdict c10_determinism() {
  namespace fs = std::filesystem;
  const fs::path work = fs::temp_directory_path() / "bihole_lab_golden";
  fs::remove_all(work);
  fs::create_directories(work);
  const fs::path previous = fs::current_path();
  fs::current_path(work);

  const std::array<std::pair<const char*, const char*>, 5> commands{{
      {"gen", "gen --n 40 --delta 4 --seed 3 --out g.txt"},
      {"find_bihole", "find-bihole --input g.txt --epsilon 0.5 --seed 5"},
      {"color", "color --input g.txt --seed 5"},
      {"check_colorable", "check-colorable --input g.txt"},
      {"coupon", "coupon --q 8 --delta 20 --trials 20000 --seed 2"},
  }};
  const bool update = std::getenv("BIHOLE_UPDATE_GOLDEN") != nullptr;
  int stable = 0, golden = 0;
  std::string bad;
  for (const auto& [name, args] : commands) {
    const auto a = testing::run_cli(args);
    const auto b = testing::run_cli(args);
    const bool same = a.exit_code == 0 && a.out == b.out && !a.out.empty();
    stable += same;
    const fs::path file = fs::path(BIHOLE_GOLDEN_DIR) / (std::string(name) + ".jsonl");
    if (update) {
      std::ofstream(file, std::ios::binary) << a.out;
    }
    std::ifstream in(file, std::ios::binary);
    const std::string expected((std::istreambuf_iterator<char>(in)), {});
    if (same && in && expected == a.out) ++golden;
    else bad += std::string(" ") + name;
  }
  fs::current_path(previous);
  fs::remove_all(work);
  return {stable == 5 && golden == 5,
          std::to_string(stable) + "/5 commands byte-identical across runs, " +
              std::to_string(golden) + "/5 match golden files" + (bad.empty() ? "" : " (mismatch:" + bad + ")")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 bi-hole soundness sweep", c1_bihole_soundness},
      {"2 bi-hole size at desk scale", c2_bihole_desk_scale},
      {"3 left color classes", c3_left_classes},
      {"4 coloring soundness and infeasibility", c4_coloring_soundness},
      {"5 palette accounting at desk scale", c5_palette},
      {"6 2D+1 coloring property", c6_lemma},
      {"7 oracle equivalence", c7_oracles},
      {"8 coupon collector", c8_coupon},
      {"9 residual degree bound", c9_residual_degree},
      {"10 CLI determinism", c10_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << v.detail << " ["
              << fmt(seconds_since(start), 1) << " s]" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criterion(s) failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
