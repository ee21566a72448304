// Copyright 2026 The TopoInf Authors.
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

#include "topoinf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "topoinf/compat.hpp"
#include "topoinf/csbm.hpp"
#include "topoinf/error.hpp"
#include "topoinf/pseudo.hpp"
#include "topoinf/rewire.hpp"
#include "topoinf/topoinf.hpp"

namespace topoinf::verify {
namespace {

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(6);
  ss << x;
  return ss.str();
}

LabelData random_labels(NodeId n, ClassId c, std::mt19937_64& rng) {
  std::uniform_int_distribution<ClassId> pick(0, c - 1);
  std::vector<ClassId> hard(n);
  for (auto& h : hard) h = pick(rng);
  return LabelData::from_labels(c, std::move(hard));
}

std::vector<FilterSpec> sweep_specs(unsigned k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<double> gamma(k + 1);
  for (double& g : gamma) g = weight(rng);
  return {
      {Preset::kSGC, k, 0.1, {}},   {Preset::kS2GC, k, 0.15, {}},  {Preset::kAPPNP, k, 0.1, {}},
      {Preset::kGCN, k, 0.1, {}},   {Preset::kGCNII, k, 0.2, {}},  {Preset::kGPRGNN, k, 0.1, gamma},
  };
}

}  // namespace

std::vector<CheckResult> oracle_suite(const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const NodeId sizes[] = {20, 50, 100, 200};
  std::mt19937_64 rng(opts.seed);
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::size_t locality_checks = 0;
  std::size_t locality_violations = 0;
  double worst = 0.0;
  for (unsigned graph_idx = 0; graph_idx < 20; ++graph_idx) {
    const NodeId n = sizes[graph_idx % 4];
    const double mean_degree = 4.0 + static_cast<double>(graph_idx % 7);
    const Graph g = erdos_renyi(n, mean_degree / (n - 1.0), rng());
    const LabelData labels = random_labels(n, 3, rng);
    // Alternate between the whole node set and a random half as target.
    NodeSet target = NodeSet::all(n);
    if (graph_idx % 2 == 1) {
      std::vector<NodeId> ids;
      std::bernoulli_distribution keep(0.5);
      for (NodeId v = 0; v < n; ++v) {
        if (keep(rng)) ids.push_back(v);
      }
      target = NodeSet(std::move(ids));
    }
    const double lambda = graph_idx % 3 == 0 ? 0.0 : 0.05;
    for (unsigned k = 1; k <= 3; ++k) {
      for (const FilterSpec& spec : sweep_specs(k, rng)) {
        const ScoringProblem problem{expand_preset(spec), target, lambda, Similarity::kHard};
        const OracleScorer oracle(g, labels, problem);
        const DeltaWorkspace ws(g, labels, problem);
        DeltaWorkspace::Scratch scratch;
        const NodeSet all = NodeSet::all(n);
        const SoftLabelMatrix base = soft_labels(problem.filter, NormalizedAdjacency(g), labels);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const TopoInfScore exact = oracle.score(e);
          const TopoInfScore fast = ws.score(e, scratch);
          ++comparisons;
          const bool both_excluded = exact.sign == Sign::kExcluded && fast.sign == Sign::kExcluded;
          const double diff = both_excluded ? 0.0 : std::abs(exact.value - fast.value);
          if (!(diff <= 1e-10)) ++mismatches;
          if (std::isfinite(diff)) worst = std::max(worst, diff);

          // Locality: any node whose I changed lies within K hops.
          const Edge& ed = g.edge(e);
          const NodeSet hood = khop_set(g, NodeSet({ed.u, ed.v}), k);
          const SoftLabelMatrix after =
              soft_labels(problem.filter, NormalizedAdjacency(remove_edge(g, e)), labels);
          for (NodeId v : all) {
            ++locality_checks;
            const double before_i = base.values(v, labels.label(v));
            const double after_i = after.values(v, labels.label(v));
            if (before_i != after_i && !hood.contains(v)) ++locality_violations;
          }
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {
      {"oracle-equivalence", mismatches == 0,
       std::to_string(comparisons) + " edge scores, " + std::to_string(mismatches) +
           " beyond 1e-10, max |diff| " + fmt(worst) + ", " + fmt(seconds) + " s"},
      {"locality", locality_violations == 0,
       std::to_string(locality_checks) + " node checks, " + std::to_string(locality_violations) +
           " changed outside the K-hop set"},
  };
}

std::vector<CheckResult> fixture_suite(const SuiteOptions&) {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  const Graph g = Graph::from_edges(3, edges);
  const LabelData labels = LabelData::from_labels(2, {0, 0, 1});
  const PolynomialFilter pf({0.0, 1.0});
  const NodeSet all = NodeSet::all(3);
  const EdgeId e02 = *g.find_edge(0, 2);

  const double c0 = compatibility(g, pf, labels, all, 0.0).C;
  const double t0 = topoinf_oracle(g, pf, labels, all, 0.0, e02).value;
  const double t1 = topoinf_oracle(g, pf, labels, all, 0.1, e02).value;
  const DeltaWorkspace ws(g, labels, {pf, all, 0.0, Similarity::kHard});
  const TopoInfScore inc = topoinf_incremental(ws, e02);
  return {
      {"triangle-compat", std::abs(c0 - 5.0 / 3.0) <= 1e-9, "C = " + fmt(c0) + " (expect 5/3)"},
      {"triangle-topoinf", std::abs(t0 - 0.52879) <= 1e-4 && std::abs(inc.value - 0.52879) <= 1e-4,
       "oracle " + fmt(t0) + ", incremental " + fmt(inc.value) + " (expect 0.52879)"},
      {"triangle-topoinf-lambda", std::abs(t1 - 0.42879) <= 1e-4,
       "TopoInf = " + fmt(t1) + " (expect 0.42879)"},
  };
}

std::vector<CheckResult> theorem2_suite(const SuiteOptions& opts) {
  const FilterSpec specs[] = {
      {Preset::kSGC, 2, 0.1, {}},
      {Preset::kAPPNP, 2, 0.1, {}},
      {Preset::kS2GC, 2, 0.1, {}},
  };
  std::size_t distance_violations = 0;
  std::size_t frobenius_failures = 0;
  std::size_t variance_failures = 0;
  double worst_ratio = 0.0;
  double worst_frob = 0.0;
  for (unsigned s = 0; s < 10; ++s) {
    CsbmParams params;
    params.n = 60;
    params.c = 3;
    params.p = 0.5;
    params.q = 0.1;
    params.d = 8;
    params.sigma = 1.0;
    params.seed = opts.seed + s;
    const CsbmSample sample = generate_csbm(params);
    for (const FilterSpec& spec : specs) {
      const PolynomialFilter pf = expand_preset(spec);
      const DistanceReport dist = check_distance_contraction(sample, pf);
      distance_violations += dist.violations;
      const VarianceReport var =
          check_variance_reduction(sample.graph, params.d, params.sigma, pf, 200, opts.seed + 100 + s);
      if (!var.frobenius_holds) ++frobenius_failures;
      if (!var.empirical_holds) ++variance_failures;
      worst_frob = std::max(worst_frob, var.filter_frobenius_sq / static_cast<double>(var.n));
      worst_ratio = std::max(worst_ratio, var.mean_filtered_noise_sq / var.mean_noise_sq);
    }
  }
  return {
      {"distance-contraction", distance_violations == 0,
       std::to_string(distance_violations) + " violations over 30 sample/filter pairs"},
      {"frobenius-bound", frobenius_failures == 0,
       "max ||RowNorm f(A)||_F^2 / n = " + fmt(worst_frob)},
      {"variance-reduction", variance_failures == 0,
       "max filtered/raw noise energy = " + fmt(worst_ratio) + " over 200 trials"},
  };
}

std::vector<CheckResult> directional_suite(const SuiteOptions& opts) {
  std::size_t wins = 0;
  std::size_t monotone_runs = 0;
  constexpr unsigned kSeeds = 20;
  constexpr std::size_t kGreedySteps = 3;
  std::string first_failure;
  for (unsigned s = 0; s < kSeeds; ++s) {
    CsbmParams params;
    params.n = 300;
    params.c = 3;
    params.p = 0.8;
    params.q = 0.05;
    params.d = 4;
    params.sigma = 0.0;
    params.seed = opts.seed + 1000 + s;
    const CsbmSample sample = generate_csbm(params);
    const ScoringProblem problem{expand_preset({Preset::kSGC, 2, 0.1, {}}),
                                 NodeSet::all(params.n), 0.0, Similarity::kHard};
    const GreedyResult greedy =
        greedy_refine(sample.graph, sample.labels, problem, kGreedySteps, 1, opts.threads);
    const ScoreTable& table = *greedy.initial_scores;
    double inter = 0.0;
    double intra = 0.0;
    std::size_t n_inter = 0;
    std::size_t n_intra = 0;
    for (const auto& sc : table.ranked) {
      const Edge& e = sample.graph.edge(sc.edge);
      if (sample.labels.label(e.u) == sample.labels.label(e.v)) {
        intra += sc.value;
        ++n_intra;
      } else {
        inter += sc.value;
        ++n_inter;
      }
    }
    if (n_inter > 0 && n_intra > 0 && inter / n_inter > intra / n_intra) ++wins;

    bool monotone = true;
    double prev = greedy.initial_compat;
    for (const GreedyStep& step : greedy.trace) {
      if (!(step.compat_after > prev) ||
          std::abs(step.compat_after - prev - step.score) > 1e-10) {
        monotone = false;
      }
      prev = step.compat_after;
    }
    if (monotone) {
      ++monotone_runs;
    } else if (first_failure.empty()) {
      first_failure = " (first failure at seed offset " + std::to_string(s) + ")";
    }
  }
  return {
      {"inter-exceeds-intra", wins >= 19,
       std::to_string(wins) + "/" + std::to_string(kSeeds) + " seeds (need >= 19)"},
      {"greedy-monotone", monotone_runs == kSeeds,
       std::to_string(monotone_runs) + "/" + std::to_string(kSeeds) + " runs strictly increasing" +
           first_failure},
  };
}

double gradient_relative_error(const Matrix& features, const LabelData& labels,
                               const Matrix& weights, std::span<const double> bias,
                               double l2_penalty, double h) {
  Matrix grad_w;
  std::vector<double> grad_b;
  softmax_loss(features, labels, weights, bias, l2_penalty, &grad_w, &grad_b);
  std::vector<double> analytic(grad_w.data().begin(), grad_w.data().end());
  analytic.insert(analytic.end(), grad_b.begin(), grad_b.end());

  std::vector<double> numeric;
  Matrix w = weights;
  std::vector<double> b(bias.begin(), bias.end());
  auto loss = [&] { return softmax_loss(features, labels, w, b, l2_penalty, nullptr, nullptr); };
  for (double& x : w.data()) {
    const double keep = x;
    x = keep + h;
    const double up = loss();
    x = keep - h;
    const double down = loss();
    x = keep;
    numeric.push_back((up - down) / (2.0 * h));
  }
  for (double& x : b) {
    const double keep = x;
    x = keep + h;
    const double up = loss();
    x = keep - h;
    const double down = loss();
    x = keep;
    numeric.push_back((up - down) / (2.0 * h));
  }
  double max_diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    max_diff = std::max(max_diff, std::abs(analytic[i] - numeric[i]));
    scale = std::max({scale, std::abs(analytic[i]), std::abs(numeric[i])});
  }
  return scale == 0.0 ? max_diff : max_diff / scale;
}

std::vector<CheckResult> gradient_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::bernoulli_distribution known(0.7);
  double worst = 0.0;
  for (unsigned trial = 0; trial < 10; ++trial) {
    const NodeId n = 15 + trial;
    const std::size_t d = 3 + trial % 4;
    const ClassId c = 2 + trial % 3;
    Matrix x(n, d);
    for (double& v : x.data()) v = gauss(rng);
    Matrix w(d, c);
    for (double& v : w.data()) v = 0.5 * gauss(rng);
    std::vector<double> b(c);
    for (double& v : b) v = 0.3 * gauss(rng);
    std::uniform_int_distribution<ClassId> pick(0, c - 1);
    std::vector<ClassId> hard(n);
    std::vector<bool> mask(n);
    for (NodeId v = 0; v < n; ++v) {
      hard[v] = pick(rng);
      mask[v] = v == 0 || known(rng);
    }
    const LabelData labels(c, hard, mask);
    worst = std::max(worst, gradient_relative_error(x, labels, w, b, 0.01 * (trial % 3)));
  }
  return {{"gradient-check", worst < 1e-4,
           "max relative error " + fmt(worst) + " over 10 instances (need < 1e-4)"}};
}

std::vector<CheckResult> sampler_suite(const SuiteOptions& opts) {
  constexpr std::size_t kTrials = 10000;
  std::mt19937_64 rng(opts.seed + 11);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Single draws from a 10-edge TopoInf-weighted distribution.
  std::vector<TopoInfScore> scores(10);
  for (EdgeId e = 0; e < scores.size(); ++e) {
    scores[e].edge = e;
    scores[e].value = gauss(rng);
    scores[e].sign = classify(scores[e].value);
  }
  const DropEdgeDistribution dist = dropedge_weights(scores, 1.0);
  std::vector<std::size_t> hits(scores.size(), 0);
  for (std::size_t t = 0; t < kTrials; ++t) {
    for (EdgeId e : sample_dropedge(dist, 0.1, epoch_seed(opts.seed, t))) ++hits[e];
  }
  double worst_drop = 0.0;
  for (std::size_t e = 0; e < hits.size(); ++e) {
    worst_drop = std::max(worst_drop, std::abs(static_cast<double>(hits[e]) / kTrials -
                                               dist.probability[e]));
  }

  // Uniform removal of 3 of 10 edges.
  std::vector<Edge> path;
  for (NodeId v = 0; v < 10; ++v) path.push_back({v, v + 1});
  const Graph g = Graph::from_edges(11, path);
  std::vector<std::size_t> picked(g.edge_count(), 0);
  for (std::size_t t = 0; t < kTrials; ++t) {
    for (EdgeId e : remove_random(g, 0.3, epoch_seed(opts.seed + 1, t))) ++picked[e];
  }
  double worst_uniform = 0.0;
  for (std::size_t e = 0; e < picked.size(); ++e) {
    worst_uniform =
        std::max(worst_uniform, std::abs(static_cast<double>(picked[e]) / kTrials - 0.3));
  }
  return {
      {"dropedge-frequencies", worst_drop <= 0.02,
       "max |freq - p| = " + fmt(worst_drop) + " over 10^4 single draws"},
      {"random-uniform", worst_uniform <= 0.02,
       "max |freq - 0.3| = " + fmt(worst_uniform) + " over 10^4 trials"},
  };
}

std::vector<std::string_view> suite_names() {
  return {"oracle", "fixtures", "theorem2", "directional", "gradients", "sampler", "all"};
}

std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opts) {
  using Suite = std::vector<CheckResult> (*)(const SuiteOptions&);
  const std::pair<std::string_view, Suite> suites[] = {
      {"oracle", oracle_suite},         {"fixtures", fixture_suite},
      {"theorem2", theorem2_suite},     {"directional", directional_suite},
      {"gradients", gradient_suite},    {"sampler", sampler_suite},
  };
  std::vector<CheckResult> out;
  for (const auto& [suite_name, fn] : suites) {
    if (name == "all" || name == suite_name) {
      auto part = fn(opts);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (out.empty()) throw ValidationError("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace topoinf::verify
