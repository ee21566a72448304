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

// Small fixtures shared by the unit tests.

#pragma once

#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "topoinf/csbm.hpp"
#include "topoinf/filter.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"

namespace topoinf::testing {

inline Graph make_graph(NodeId n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline Graph path(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return make_graph(n, edges);
}

inline LabelData triangle_labels() { return LabelData::from_labels(2, {0, 0, 1}); }

inline PolynomialFilter gamma_filter(std::vector<double> gamma) {
  return PolynomialFilter(std::move(gamma));
}

inline LabelData random_labels(NodeId n, ClassId c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ClassId> pick(0, c - 1);
  std::vector<ClassId> labels(n);
  for (auto& l : labels) l = pick(rng);
  return LabelData::from_labels(c, std::move(labels));
}

inline DenseProblem to_dense(const Graph& g, const LabelData& labels, const PolynomialFilter& pf,
                             const NodeSet& target, double lambda) {
  DenseProblem p;
  p.n = g.node_count();
  for (const Edge& e : g.edges()) p.edges.emplace_back(e.u, e.v);
  for (NodeId v = 0; v < p.n; ++v) p.labels.push_back(labels.label(v));
  p.classes = labels.classes();
  p.gamma.assign(pf.coefficients().begin(), pf.coefficients().end());
  p.target.assign(target.begin(), target.end());
  p.lambda = lambda;
  return p;
}

}  // namespace topoinf::testing
