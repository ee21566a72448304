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

#include "topoinf/topoinf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "topoinf/error.hpp"
#include "topoinf/parallel.hpp"

namespace topoinf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Calls fn(w) for w in the closed neighborhood of r (r included), columns
// ascending, skipping `skip` (pass r itself to skip nothing extra).
template <typename Fn>
void for_closed_neighbors(const Graph& g, NodeId r, NodeId skip, Fn&& fn) {
  bool self_done = false;
  for (NodeId w : g.neighbors(r)) {
    if (!self_done && w > r) {
      fn(r);
      self_done = true;
    }
    if (w != skip) fn(w);
  }
  if (!self_done) fn(r);
}

// I(v) for every target node on graph g; NaN where the row is
// non-normalizable.
std::vector<double> target_influence(const Graph& g, const PolynomialFilter& pf,
                                     const SimilarityModel& sim, const NodeSet& target) {
  const SoftLabelMatrix lbar = soft_labels(pf, NormalizedAdjacency(g), sim.label_matrix());
  std::vector<double> out;
  out.reserve(target.size());
  for (NodeId v : target) {
    out.push_back(std::isnan(lbar.values(v, 0))
                      ? std::numeric_limits<double>::quiet_NaN()
                      : sim.influence(v, lbar.values.row(v)));
  }
  return out;
}

// Applies the regularizer change of the two endpoints. Returns false when an
// endpoint in the target becomes isolated under lambda > 0.
bool apply_regularizer_delta(const Graph& g, const Edge& removed, const NodeSet& target,
                             double lambda, double& sum) {
  if (lambda == 0.0) return true;
  for (NodeId v : {removed.u, removed.v}) {
    if (!target.contains(v)) continue;
    const std::uint32_t before = g.degree(v);
    if (before == 1) return false;
    sum -= lambda * (1.0 / static_cast<double>(before - 1) - 1.0 / static_cast<double>(before));
  }
  return true;
}

TopoInfScore make_score(EdgeId e, double value, std::uint32_t affected, bool excluded) {
  TopoInfScore s;
  s.edge = e;
  s.value = excluded ? -kInf : value;
  s.affected_nodes = affected;
  s.sign = classify(s.value);
  return s;
}

void validate_problem(const Graph& g, const LabelData& labels, const ScoringProblem& problem) {
  for (NodeId v : problem.target) {
    if (v >= g.node_count()) {
      throw ValidationError("target node " + std::to_string(v) + " out of range");
    }
  }
  if (labels.node_count() != g.node_count()) {
    throw ValidationError("labels cover " + std::to_string(labels.node_count()) +
                          " nodes, graph has " + std::to_string(g.node_count()));
  }
}

}  // namespace

std::string_view sign_name(Sign s) {
  switch (s) {
    case Sign::kPositive:
      return "positive";
    case Sign::kNegative:
      return "negative";
    case Sign::kZero:
      return "zero";
    case Sign::kExcluded:
      return "excluded";
  }
  return "unknown";
}

Sign classify(double value) {
  if (value == -kInf) return Sign::kExcluded;
  if (std::abs(value) < kZeroThreshold) return Sign::kZero;
  return value > 0.0 ? Sign::kPositive : Sign::kNegative;
}

OracleScorer::OracleScorer(const Graph& g, const LabelData& labels, ScoringProblem problem)
    : graph_(g), labels_(labels), problem_(std::move(problem)) {
  validate_problem(graph_, labels_, problem_);
  baseline_ = compatibility(graph_, problem_.filter, labels_, problem_.target, problem_.lambda,
                            problem_.similarity);
}

TopoInfScore OracleScorer::score(EdgeId e) const {
  const Edge removed = graph_.edge(e);
  const Graph after = remove_edge(graph_, e);
  const SimilarityModel sim(labels_, problem_.similarity);
  const std::vector<double> influence = target_influence(after, problem_.filter, sim,
                                                         problem_.target);
  bool excluded = false;
  double sum = 0.0;
  std::uint32_t affected = 0;
  for (std::size_t idx = 0; idx < influence.size(); ++idx) {
    if (std::isnan(influence[idx])) {
      excluded = true;
      continue;
    }
    const double d = influence[idx] - baseline_.nodes[idx].influence;
    if (std::abs(d) > kZeroThreshold) ++affected;
    sum += d;
  }
  if (!apply_regularizer_delta(graph_, removed, problem_.target, problem_.lambda, sum)) {
    excluded = true;
  }
  return make_score(e, sum, affected, excluded);
}

TopoInfScore topoinf_oracle(const Graph& g, const PolynomialFilter& pf, const LabelData& labels,
                            const NodeSet& target, double lambda, EdgeId e, Similarity mode) {
  if (e >= g.edge_count()) {
    throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
  }
  return OracleScorer(g, labels, {pf, target, lambda, mode}).score(e);
}

DeltaWorkspace::DeltaWorkspace(const Graph& g, const LabelData& labels, ScoringProblem problem)
    : graph_(g),
      problem_(std::move(problem)),
      sim_(labels, problem_.similarity),
      classes_(labels.classes()) {
  validate_problem(graph_, labels, problem_);
  baseline_ = compatibility(graph_, problem_.filter, labels, problem_.target, problem_.lambda,
                            problem_.similarity);

  const NodeId n = graph_.node_count();
  const NormalizedAdjacency adj(graph_);
  Matrix block(n, width());
  const Matrix& lm = sim_.label_matrix();
  for (NodeId v = 0; v < n; ++v) {
    std::copy(lm.row(v).begin(), lm.row(v).end(), block.row(v).begin());
    block(v, classes_) = 1.0;
  }
  const unsigned order = problem_.filter.order();
  filtered_ = apply_filter(problem_.filter, adj, block);
  powers_.reserve(order);
  powers_.push_back(std::move(block));
  for (unsigned k = 1; k < order; ++k) powers_.push_back(propagate(adj, powers_.back()));

  std::uint32_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, graph_.degree(v));
  inv_sqrt_.resize(max_degree + 2);
  for (std::uint32_t d = 1; d < inv_sqrt_.size(); ++d) inv_sqrt_[d] = 1.0 / std::sqrt(double(d));

  in_target_.assign(n, 0);
  influence_.assign(n, 0.0);
  for (const NodeCompat& nc : baseline_.nodes) {
    in_target_[nc.id] = 1;
    influence_[nc.id] = nc.influence;
  }
}

void DeltaWorkspace::check_graph(const Graph& g) const {
  if (g.node_count() != graph_.node_count() || g.edge_count() != graph_.edge_count() ||
      !std::equal(g.edges().begin(), g.edges().end(), graph_.edges().begin())) {
    throw ValidationError("graph does not match the one the workspace was built for");
  }
}

TopoInfScore DeltaWorkspace::score(EdgeId e, Scratch& s) const {
  const Edge removed = graph_.edge(e);
  const NodeId n = graph_.node_count();
  const std::size_t m = width();
  const auto gamma = problem_.filter.coefficients();
  const unsigned order = problem_.filter.order();

  if (s.slot.size() != n) {
    s.slot.assign(n, -1);
  }
  s.active.clear();
  auto activate = [&](NodeId v) {
    if (s.slot[v] < 0) {
      s.slot[v] = static_cast<std::int32_t>(s.active.size());
      s.active.push_back(v);
    }
  };

  // Rows of ΔÂ = Â' - Â: the endpoints and everything adjacent to them.
  activate(removed.u);
  activate(removed.v);
  for (NodeId w : graph_.neighbors(removed.u)) activate(w);
  for (NodeId w : graph_.neighbors(removed.v)) activate(w);
  const std::size_t seed_count = s.active.size();

  auto other_endpoint = [&](NodeId r) {
    return r == removed.u ? removed.v : (r == removed.v ? removed.u : r);
  };

  // out += (ΔÂ P)[r, :]
  auto add_delta_row = [&](NodeId r, const Matrix& p, double* out) {
    const std::uint32_t dr_old = graph_.degree(r) + 1;
    auto accumulate = [&](NodeId w, double delta) {
      if (delta == 0.0) return;
      auto src = p.row(w);
      for (std::size_t j = 0; j < m; ++j) out[j] += delta * src[j];
    };
    if (r == removed.u || r == removed.v) {
      const std::uint32_t dr_new = dr_old - 1;
      const NodeId partner = other_endpoint(r);
      for_closed_neighbors(graph_, r, r, [&](NodeId w) {
        const double old_w = normalized_weight(dr_old, graph_.degree(w) + 1);
        const double new_w =
            w == partner ? 0.0 : normalized_weight(dr_new, augmented_degree(w, removed));
        accumulate(w, new_w - old_w);
      });
      return;
    }
    auto nbrs = graph_.neighbors(r);
    for (NodeId w : {removed.u, removed.v}) {
      if (!std::binary_search(nbrs.begin(), nbrs.end(), w)) continue;
      accumulate(w, normalized_weight(dr_old, augmented_degree(w, removed)) -
                        normalized_weight(dr_old, graph_.degree(w) + 1));
    }
  };

  // E_1 = ΔÂ P_0, then E_k = Â' E_{k-1} + ΔÂ P_{k-1}; ΔU = Σ γ_k E_k.
  s.cur.assign(seed_count * m, 0.0);
  for (std::size_t i = 0; i < seed_count; ++i) {
    add_delta_row(s.active[i], powers_[0], &s.cur[i * m]);
  }
  s.acc.assign(seed_count * m, 0.0);
  if (order >= 1 && gamma[1] != 0.0) {
    for (std::size_t i = 0; i < s.cur.size(); ++i) s.acc[i] += gamma[1] * s.cur[i];
  }
  for (unsigned k = 2; k <= order; ++k) {
    std::swap(s.prev, s.cur);
    const std::size_t prev_count = s.active.size();
    s.cur.assign(prev_count * m, 0.0);
    // Scatter Â' E_{k-1}: only rows of E_{k-1} can contribute.
    for (std::size_t i = 0; i < prev_count; ++i) {
      const NodeId w = s.active[i];
      const double sw = inv_sqrt_[augmented_degree(w, removed)];
      const double* src = &s.prev[i * m];
      for_closed_neighbors(graph_, w, other_endpoint(w), [&](NodeId u) {
        if (s.slot[u] < 0) {
          activate(u);
          s.cur.resize(s.cur.size() + m, 0.0);
        }
        const double weight = sw * inv_sqrt_[augmented_degree(u, removed)];
        double* out = &s.cur[static_cast<std::size_t>(s.slot[u]) * m];
        for (std::size_t j = 0; j < m; ++j) out[j] += weight * src[j];
      });
    }
    for (std::size_t i = 0; i < seed_count; ++i) {
      add_delta_row(s.active[i], powers_[k - 1], &s.cur[i * m]);
    }
    s.acc.resize(s.cur.size(), 0.0);
    if (gamma[k] != 0.0) {
      for (std::size_t i = 0; i < s.cur.size(); ++i) s.acc[i] += gamma[k] * s.cur[i];
    }
  }

  // Re-evaluate I only for target nodes whose filtered row moved.
  std::vector<std::pair<NodeId, std::size_t>> touched;
  for (std::size_t i = 0; i < s.active.size(); ++i) {
    if (in_target_[s.active[i]]) touched.emplace_back(s.active[i], i);
  }
  std::sort(touched.begin(), touched.end());

  bool excluded = false;
  double sum = 0.0;
  std::uint32_t affected = 0;
  std::vector<double> row(m);
  for (const auto& [u, i] : touched) {
    auto base = filtered_.row(u);
    for (std::size_t j = 0; j < m; ++j) row[j] = base[j] + s.acc[i * m + j];
    const double row_sum = row[classes_];
    if (!(row_sum > kRowSumTolerance)) {
      excluded = true;
      continue;
    }
    const double d = sim_.influence(u, std::span<const double>(row.data(), classes_), row_sum) -
                     influence_[u];
    if (std::abs(d) > kZeroThreshold) ++affected;
    sum += d;
  }
  if (!apply_regularizer_delta(graph_, removed, problem_.target, problem_.lambda, sum)) {
    excluded = true;
  }

  for (NodeId v : s.active) s.slot[v] = -1;
  return make_score(e, sum, affected, excluded);
}

TopoInfScore topoinf_incremental(const DeltaWorkspace& ws, EdgeId e) {
  DeltaWorkspace::Scratch scratch;
  return ws.score(e, scratch);
}

TopoInfScore topoinf_incremental(const DeltaWorkspace& ws, const Graph& g, EdgeId e) {
  ws.check_graph(g);
  return topoinf_incremental(ws, e);
}

std::vector<TopoInfScore> ScoreTable::by_edge() const {
  std::vector<TopoInfScore> out(ranked.size());
  for (const auto& s : ranked) out.at(s.edge) = s;
  return out;
}

ScoreTable score_all_edges(const Graph& g, const LabelData& labels, const ScoringProblem& problem,
                           const ScoreOptions& options) {
  ScoreTable table;
  std::vector<TopoInfScore> scores(g.edge_count());
  const unsigned threads = resolve_threads(options.threads);
  if (options.mode == ScoreMode::kExact) {
    const OracleScorer scorer(g, labels, problem);
    parallel_for(scores.size(), threads,
                 [&](unsigned, std::size_t i) { scores[i] = scorer.score(static_cast<EdgeId>(i)); });
    table.baseline = scorer.baseline();
  } else {
    const DeltaWorkspace ws(g, labels, problem);
    std::vector<DeltaWorkspace::Scratch> scratch(threads);
    parallel_for(scores.size(), threads, [&](unsigned w, std::size_t i) {
      scores[i] = ws.score(static_cast<EdgeId>(i), scratch[w]);
    });
    table.baseline = ws.baseline();
  }
  for (const auto& s : scores) {
    switch (s.sign) {
      case Sign::kPositive:
        ++table.positive;
        break;
      case Sign::kNegative:
        ++table.negative;
        break;
      case Sign::kZero:
        ++table.zero;
        break;
      case Sign::kExcluded:
        ++table.excluded;
        break;
    }
  }
  std::sort(scores.begin(), scores.end(), [](const TopoInfScore& a, const TopoInfScore& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.edge < b.edge;
  });
  table.ranked = std::move(scores);
  return table;
}

GreedyResult greedy_refine(const Graph& g, const LabelData& labels, const ScoringProblem& problem,
                           std::size_t max_removals, std::size_t rescore_every,
                           unsigned threads) {
  if (rescore_every == 0) throw ValidationError("rescore interval must be >= 1");
  GreedyResult result;
  result.graph = g;
  result.initial_compat = compatibility(g, problem.filter, labels, problem.target,
                                        problem.lambda, problem.similarity)
                              .C;
  std::vector<std::pair<Edge, double>> candidates;
  std::size_t next = 0;
  std::size_t since_rescore = 0;
  bool fresh = false;
  auto rescore = [&] {
    const ScoreTable table = score_all_edges(result.graph, labels, problem,
                                             {ScoreMode::kIncremental, threads});
    candidates.clear();
    if (!result.initial_scores) result.initial_scores = table;
    for (const auto& s : table.ranked) {
      if (s.sign == Sign::kPositive) candidates.emplace_back(result.graph.edge(s.edge), s.value);
    }
    next = 0;
    since_rescore = 0;
    fresh = true;
  };
  while (result.trace.size() < max_removals) {
    if (result.trace.empty() || since_rescore >= rescore_every) rescore();
    std::optional<EdgeId> index;
    double score = 0.0;
    Edge edge;
    for (;;) {
      while (next < candidates.size() && !index) {
        edge = candidates[next].first;
        score = candidates[next].second;
        index = result.graph.find_edge(edge.u, edge.v);
        ++next;
      }
      if (index || fresh) break;
      rescore();
    }
    if (!index) break;
    fresh = false;
    result.graph = remove_edge(result.graph, *index);
    ++since_rescore;
    const double after = compatibility(result.graph, problem.filter, labels, problem.target,
                                       problem.lambda, problem.similarity)
                             .C;
    result.trace.push_back({edge, *index, score, after});
  }
  return result;
}

}  // namespace topoinf
