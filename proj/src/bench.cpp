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

#include "bihole/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "bihole/bihole.hpp"
#include "bihole/coloring.hpp"
#include "bihole/coupon.hpp"
#include "bihole/errors.hpp"
#include "bihole/generators.hpp"
#include "bihole/matching.hpp"
#include "bihole/report.hpp"

namespace bihole {

using nlohmann::json;

unsigned default_threads() {
  if (const char* env = std::getenv("BIHOLE_LAB_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& task) {
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          task(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

double edge_probability(const BenchOptions& o) {
  if (o.p) return *o.p;
  if (o.delta) return std::min(1.0, *o.delta / static_cast<double>(o.n));
  throw DomainError("bench: --p or --delta is required for suite " + o.suite);
}

json bihole_row(const BenchOptions& o, std::uint64_t seed) {
  const double p = edge_probability(o);
  const BipartiteGraph g = gnnp(o.n, p, Seed{seed});
  GraphDescriptor desc = describe_graph(g, "gnnp");
  desc.seed = seed;
  desc.p = p;
  const BiholeParams params{o.epsilon, o.retries, Seed{seed}};
  const auto start = std::chrono::steady_clock::now();
  const BiholeResult res = find_bihole(g, params);
  const double ms = elapsed_ms(start);
  const bool verified = verify_bihole(g, res.hole);
  return {{"seed", seed},
          {"success", verified && res.report.target_met},
          {"verified", verified},
          {"t", res.report.t},
          {"report", to_json(bihole_report(desc, params, res, ms), o.include_timing)}};
}

json color_row(const BenchOptions& o, std::uint64_t seed) {
  const double p = edge_probability(o);
  BipartiteGraph g = gnnp(o.n, p, Seed{seed});
  if (o.delta && !o.p) g = cap_max_degree(g, static_cast<std::uint32_t>(std::lround(*o.delta)));
  GraphDescriptor desc = describe_graph(g, o.delta && !o.p ? "gnnp+cap" : "gnnp");
  desc.seed = seed;
  desc.p = p;
  ColoringParams params;
  params.epsilon = o.epsilon;
  params.seed = Seed{seed};
  params.retries = o.retries;
  const auto start = std::chrono::steady_clock::now();
  const ColoringResult res = color_balanced(g, params);
  const double ms = elapsed_ms(start);
  bool success = false;
  bool verified = false;
  if (res.outcome == Outcome::Colored && res.coloring) {
    verified = verify_coloring(g, *res.coloring);
    success = verified;
  } else if (res.outcome == Outcome::Infeasible) {
    success = !has_balanced_coloring(g);
  }
  json row = {{"seed", seed},
              {"success", success},
              {"verified", verified},
              {"report", to_json(coloring_report(desc, params, res, ms), o.include_timing)}};
  row["palette_size"] = res.coloring ? json(res.coloring->palette_size) : json(nullptr);
  return row;
}

json coupon_row(const BenchOptions& o, std::uint64_t seed) {
  const auto delta = static_cast<std::uint32_t>(o.delta ? std::lround(*o.delta) : 0);
  const CouponStats s = coupon_sim(o.q, delta, o.trials, Seed{seed});
  const double expected = coupon_expected_time(o.q);
  const double q2 = static_cast<double>(o.q) * o.q;
  const bool mean_ok = std::abs(s.mean_T - expected) <= 0.05 * expected;
  const bool var_ok = s.var_T < 2.0 * q2;
  json row = to_json(s);
  row["seed"] = seed;
  row["expected_mean_T"] = expected;
  row["success"] = mean_ok && var_ok;
  return row;
}

}  // namespace

BenchSummary run_bench(const BenchOptions& o) {
  BenchSummary summary;
  summary.suite = o.suite;
  std::function<json(std::uint64_t)> trial;
  if (o.suite == "bihole") {
    summary.metric = "t";
    summary.threshold = "success_fraction >= 0.9 (t >= target and verified)";
    trial = [&](std::uint64_t s) { return bihole_row(o, s); };
  } else if (o.suite == "color") {
    summary.metric = "palette_size";
    summary.threshold = "every coloring verifies; infeasible only without a complement perfect matching";
    trial = [&](std::uint64_t s) { return color_row(o, s); };
  } else if (o.suite == "coupon") {
    if (o.q == 0 || o.trials == 0) throw DomainError("bench: coupon suite needs q, trials >= 1");
    summary.metric = "mean_T";
    summary.threshold = "|mean_T - q H_q| <= 5% and var_T < 2 q^2 for every seed";
    trial = [&](std::uint64_t s) { return coupon_row(o, s); };
  } else {
    throw DomainError("bench: unknown suite '" + o.suite + "'");
  }
  if (o.seeds == 0) throw DomainError("bench: --seeds must be >= 1");
  if (o.suite != "coupon" && o.n == 0) throw DomainError("bench: --n must be >= 1");

  summary.rows.resize(o.seeds);
  parallel_for(o.seeds, o.threads != 0 ? o.threads : default_threads(),
               [&](std::size_t i) { summary.rows[i] = trial(o.base_seed + i); });

  std::size_t successes = 0;
  std::vector<double> values;
  for (const json& row : summary.rows) {
    successes += row["success"].get<bool>();
    if (row.contains(summary.metric) && row[summary.metric].is_number())
      values.push_back(row[summary.metric].get<double>());
  }
  summary.success_fraction = static_cast<double>(successes) / summary.rows.size();
  if (!values.empty()) {
    std::sort(values.begin(), values.end());
    summary.metric_min = values.front();
    summary.metric_max = values.back();
    const std::size_t mid = values.size() / 2;
    summary.metric_median =
        values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
  }
  summary.passed = o.suite == "bihole" ? summary.success_fraction >= 0.9
                                       : successes == summary.rows.size();
  return summary;
}

json BenchSummary::to_json() const {
  return {{"suite", suite},
          {"rows", rows},
          {"aggregate",
           {{"trials", rows.size()},
            {"success_fraction", success_fraction},
            {"metric", metric},
            {"min", metric_min},
            {"median", metric_median},
            {"max", metric_max}}},
          {"threshold", threshold},
          {"passed", passed}};
}

std::string BenchSummary::to_csv() const {
  std::ostringstream out;
  out << "seed,success," << metric << '\n';
  for (const json& row : rows) {
    out << row["seed"].get<std::uint64_t>() << ',' << (row["success"].get<bool>() ? 1 : 0) << ',';
    if (row.contains(metric) && row[metric].is_number()) out << row[metric].dump();
    out << '\n';
  }
  return out.str();
}

}  // namespace bihole
