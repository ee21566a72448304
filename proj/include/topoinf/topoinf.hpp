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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topoinf/compat.hpp"
#include "topoinf/filter.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"

namespace topoinf {

// |value| below this counts as zero, and |ΔI| below it as "unchanged" when
// counting affected nodes.
inline constexpr double kZeroThreshold = 1e-12;

enum class Sign { kPositive, kNegative, kZero, kExcluded };

std::string_view sign_name(Sign s);
Sign classify(double value);

// Influence of removing one edge: C(A') - C(A). Excluded scores are -inf
// and mark removals that isolate a target node while lambda > 0 or leave a
// target node with a non-positive filter row sum.
struct TopoInfScore {
  EdgeId edge = 0;
  double value = 0.0;
  std::uint32_t affected_nodes = 0;
  Sign sign = Sign::kZero;
};

// Everything a TopoInf evaluation depends on besides the edge.
struct ScoringProblem {
  PolynomialFilter filter;
  NodeSet target;
  double lambda = 0.0;
  Similarity similarity = Similarity::kHard;
};

// Full-recompute scorer: removes the edge, rebuilds Â', re-filters and
// compares per-node terms against the cached baseline.
class OracleScorer {
 public:
  OracleScorer(const Graph& g, const LabelData& labels, ScoringProblem problem);

  TopoInfScore score(EdgeId e) const;
  const CompatReport& baseline() const noexcept { return baseline_; }

 private:
  Graph graph_;
  LabelData labels_;
  ScoringProblem problem_;
  CompatReport baseline_;
};

TopoInfScore topoinf_oracle(const Graph& g, const PolynomialFilter& pf, const LabelData& labels,
                            const NodeSet& target, double lambda, EdgeId e,
                            Similarity mode = Similarity::kHard);

// Cached powers P_k = Â^k [L | 1] for k < K and the filtered baseline,
// from which single-edge removals are evaluated by propagating only the
// rows that change.
class DeltaWorkspace {
 public:
  // Per-worker buffers; reuse across calls to avoid allocation.
  class Scratch {
   public:
    Scratch() = default;

   private:
    friend class DeltaWorkspace;
    std::vector<std::int32_t> slot;
    std::vector<NodeId> active;
    std::vector<double> prev, cur, acc;
  };

  DeltaWorkspace(const Graph& g, const LabelData& labels, ScoringProblem problem);

  const Graph& graph() const noexcept { return graph_; }
  const ScoringProblem& problem() const noexcept { return problem_; }
  const CompatReport& baseline() const noexcept { return baseline_; }

  // Exact C(A') - C(A) for removing edge e. Throws std::out_of_range for a
  // bad index.
  TopoInfScore score(EdgeId e, Scratch& scratch) const;

  // Throws ValidationError unless g has the same nodes and edges as the
  // workspace graph.
  void check_graph(const Graph& g) const;

 private:
  std::size_t width() const noexcept { return classes_ + 1; }
  std::uint32_t augmented_degree(NodeId v, const Edge& removed) const {
    return graph_.degree(v) + 1 - ((v == removed.u || v == removed.v) ? 1u : 0u);
  }

  Graph graph_;
  ScoringProblem problem_;
  SimilarityModel sim_;
  std::size_t classes_ = 0;
  std::vector<char> in_target_;
  // powers_[k] is n × (c+1): filtered labels with the row-sum column last.
  std::vector<Matrix> powers_;
  Matrix filtered_;
  std::vector<double> influence_;
  std::vector<double> inv_sqrt_;  // 1/sqrt(d) by augmented degree d
  CompatReport baseline_;
};

TopoInfScore topoinf_incremental(const DeltaWorkspace& ws, EdgeId e);
TopoInfScore topoinf_incremental(const DeltaWorkspace& ws, const Graph& g, EdgeId e);

enum class ScoreMode { kExact, kIncremental };

struct ScoreOptions {
  ScoreMode mode = ScoreMode::kIncremental;
  unsigned threads = 1;
};

struct ScoreTable {
  // Descending value; ties by ascending edge index; excluded last.
  std::vector<TopoInfScore> ranked;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t excluded = 0;
  CompatReport baseline;

  // Scores indexed by edge id.
  std::vector<TopoInfScore> by_edge() const;
};

// Scores every edge against the unmodified graph.
ScoreTable score_all_edges(const Graph& g, const LabelData& labels, const ScoringProblem& problem,
                           const ScoreOptions& options = {});

struct GreedyStep {
  Edge edge;
  // Index of the edge in the graph it was removed from.
  EdgeId index = 0;
  double score = 0.0;
  double compat_after = 0.0;
};

struct GreedyResult {
  Graph graph;
  double initial_compat = 0.0;
  // Scores on the input graph; empty when nothing was scored.
  std::optional<ScoreTable> initial_scores;
  std::vector<GreedyStep> trace;
};

// Repeatedly removes the highest positive-TopoInf edge, rescoring the
// current graph every `rescore_every` removals. Stops after max_removals or
// when no positive edge remains. max_removals = 0 is a no-op.
GreedyResult greedy_refine(const Graph& g, const LabelData& labels, const ScoringProblem& problem,
                           std::size_t max_removals, std::size_t rescore_every = 1,
                           unsigned threads = 1);

}  // namespace topoinf
