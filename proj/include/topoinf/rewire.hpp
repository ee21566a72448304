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
#include <span>
#include <string>
#include <vector>

#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"
#include "topoinf/topoinf.hpp"

namespace topoinf {

enum class Strategy { kTopoInf, kRandom, kAdaEdge };
enum class EdgeSet { kPositive, kNegative };

Strategy parse_strategy(std::string_view name);
EdgeSet parse_edge_set(std::string_view name);

struct RemovalPlan {
  Strategy strategy = Strategy::kTopoInf;
  EdgeSet set = EdgeSet::kPositive;
  double ratio = 0.0;
  std::uint64_t seed = 0;
};

// floor(ratio * edges). Throws ValidationError unless ratio is in [0, 1].
std::size_t removal_count(double ratio, std::size_t edges);

struct EdgeSelection {
  // In removal order.
  std::vector<EdgeId> edges;
  std::vector<std::string> warnings;
};

// Top floor(ratio·|E|) edges of the chosen sign partition by |score|
// descending, ties by ascending edge index. Truncates with a warning when
// the partition is smaller than requested.
EdgeSelection remove_by_topoinf(std::span<const TopoInfScore> scores, std::size_t total_edges,
                                const RemovalPlan& plan);

// Uniform sample without replacement of floor(ratio·|E|) edges.
std::vector<EdgeId> remove_random(const Graph& g, double ratio, std::uint64_t seed);

struct AdaEdgePartition {
  std::vector<EdgeId> same_label;
  std::vector<EdgeId> diff_label;
  // Edges with an unlabeled endpoint.
  std::vector<EdgeId> unassigned;
};

AdaEdgePartition adaedge_partition(const Graph& g, const LabelData& labels);

// Samples uniformly within the different-label (positive) or same-label
// (negative) set.
EdgeSelection remove_adaedge(const Graph& g, const LabelData& labels, const RemovalPlan& plan);

// Softmax of TopoInf / τ over non-excluded edges.
struct DropEdgeDistribution {
  double temperature = 1.0;
  // Indexed by edge id; excluded edges have probability 0.
  std::vector<double> probability;
  std::size_t support = 0;
};

// Throws ValidationError for τ <= 0 or when every edge is excluded.
DropEdgeDistribution dropedge_weights(std::span<const TopoInfScore> scores, double tau);

// Sequential draws without replacement, renormalizing after each draw.
// Draws min(floor(fraction·|E|), support) edges.
std::vector<EdgeId> sample_dropedge(const DropEdgeDistribution& dist, double drop_fraction,
                                    std::uint64_t seed);

// Deterministic per-epoch seed derived from (seed, epoch).
std::uint64_t epoch_seed(std::uint64_t seed, std::uint64_t epoch);

}  // namespace topoinf
