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

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace topoinf {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge in canonical orientation (u < v).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free set of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> ids);

  static NodeSet all(NodeId n);

  std::span<const NodeId> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(NodeId v) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<NodeId> ids_;
};

// Immutable undirected simple graph. Adjacency is CSR with every edge stored
// in both rows; neighbor lists are sorted. The canonical edge list is sorted
// lexicographically and its positions are the stable edge indices.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes orientation and collapses duplicates. Throws
  // ValidationError on self-loops or endpoints >= n.
  static Graph from_edges(NodeId n, std::span<const Edge> edges);

  NodeId node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }

 private:
  NodeId n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<Edge> edges_;
};

// Returns a copy without edge `e`. Throws std::out_of_range for bad indices.
Graph remove_edge(const Graph& g, EdgeId e);
Graph remove_edges(const Graph& g, std::span<const EdgeId> edges);
Graph add_edge(const Graph& g, Edge e);

// Nodes within shortest-path distance k of any seed (seeds included).
NodeSet khop_set(const Graph& g, const NodeSet& seeds, unsigned k);

// Entry of the self-loop-augmented symmetric normalization for endpoints
// whose augmented degrees are du and dv.
inline double normalized_weight(std::uint32_t du, std::uint32_t dv) {
  return 1.0 / std::sqrt(static_cast<double>(du) * static_cast<double>(dv));
}

// Sparse D̃^{-1/2}(A+I)D̃^{-1/2} in CSR form. Each row holds the node itself
// and its neighbors, columns ascending.
class NormalizedAdjacency {
 public:
  NormalizedAdjacency() = default;
  explicit NormalizedAdjacency(const Graph& g);

  NodeId node_count() const noexcept { return n_; }
  std::span<const NodeId> columns(NodeId r) const {
    return {cols_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }
  std::span<const double> values(NodeId r) const {
    return {vals_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }
  double at(NodeId r, NodeId c) const;

 private:
  NodeId n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> cols_;
  std::vector<double> vals_;
};

inline NormalizedAdjacency normalized_adjacency(const Graph& g) {
  return NormalizedAdjacency(g);
}

}  // namespace topoinf
