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

#include <span>
#include <vector>

#include "json.hpp"
#include "topoinf/filter.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"

namespace topoinf {

// How a node's filtered label row is compared with its own label.
//   kHard: I(v) = L̄[v, c_v]  (inner product with the one-hot label)
//   kSoft: I(v) = <L̄[v,:], soft[v,:]>  (extension for soft pseudo labels)
enum class Similarity { kHard, kSoft };

// The label matrix that gets filtered plus the per-node similarity.
class SimilarityModel {
 public:
  // kSoft requires labels.soft(). Nodes without a label contribute zero
  // rows in hard mode.
  SimilarityModel(const LabelData& labels, Similarity mode);

  Similarity mode() const noexcept { return mode_; }
  const Matrix& label_matrix() const noexcept { return matrix_; }
  bool has_label(NodeId v) const;

  // Similarity of v given its unnormalized filtered row and row sum.
  double influence(NodeId v, std::span<const double> filtered_row, double row_sum) const;
  // Similarity of v given its normalized soft-label row.
  double influence(NodeId v, std::span<const double> normalized_row) const;

 private:
  LabelData labels_;
  Similarity mode_;
  Matrix matrix_;
};

// I(v) = L̄[v, c_v]. Throws ValidationError if v is unlabeled or its row is
// non-normalizable.
double node_influence(const SoftLabelMatrix& lbar, const LabelData& labels, NodeId v);

// R(v) = 1/deg(v) in A (no self-loop); +inf for isolated nodes.
double node_regularizer(const Graph& g, NodeId v);

struct NodeCompat {
  NodeId id = 0;
  double influence = 0.0;
  double regularizer = 0.0;
};

struct CompatReport {
  double lambda = 0.0;
  NodeSet target;
  // One entry per target node, ascending id.
  std::vector<NodeCompat> nodes;
  // Σ (I - λR). -inf when lambda > 0 and a target node is isolated.
  double C = 0.0;
  // Same sum with the λR term dropped for isolated nodes.
  double finite_C = 0.0;
  // Target nodes with R = +inf.
  std::vector<NodeId> isolated;
};

// C = Σ_{v in target} I(v) - λR(v), accumulated in ascending node order.
// Throws ValidationError for unlabeled or non-normalizable target nodes,
// negative lambda, or out-of-range ids.
CompatReport compatibility(const Graph& g, const PolynomialFilter& pf, const LabelData& labels,
                           const NodeSet& target, double lambda,
                           Similarity mode = Similarity::kHard);

// {lambda, C, nodes:[{id, I, R}]}; infinities as "inf" / "-inf".
nlohmann::json to_json(const CompatReport& report);

// Per-node term I - λR, treating λ = 0 as cancelling an infinite R.
inline double node_term(double influence, double regularizer, double lambda) {
  return lambda == 0.0 ? influence : influence - lambda * regularizer;
}

}  // namespace topoinf
