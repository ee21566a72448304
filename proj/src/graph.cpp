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

#include "topoinf/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "topoinf/error.hpp"

namespace topoinf {

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::all(NodeId n) {
  std::vector<NodeId> ids(n);
  for (NodeId v = 0; v < n; ++v) ids[v] = v;
  return NodeSet(std::move(ids));
}

bool NodeSet::contains(NodeId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

Graph Graph::from_edges(NodeId n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ValidationError("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") out of range for " +
                            std::to_string(n) + " nodes");
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each row receives ascending neighbors
  // as long as the lower endpoints are written in a second pass.
  for (const Edge& e : g.edges_) g.neighbors_[fill[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.neighbors_[fill[e.u]++] = e.v;
  return g;
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  const Edge key = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph remove_edge(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count() - 1);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i != e) kept.push_back(g.edges()[i]);
  }
  return Graph::from_edges(g.node_count(), kept);
}

Graph remove_edges(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) {
      throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    }
    drop[e] = 1;
  }
  std::vector<Edge> kept;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (!drop[i]) kept.push_back(g.edges()[i]);
  }
  return Graph::from_edges(g.node_count(), kept);
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  all.push_back(e);
  return Graph::from_edges(g.node_count(), all);
}

NodeSet khop_set(const Graph& g, const NodeSet& seeds, unsigned k) {
  const NodeId n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeId> frontier;
  for (NodeId s : seeds) {
    if (s >= n) throw std::out_of_range("seed " + std::to_string(s) + " out of range");
    if (!seen[s]) {
      seen[s] = 1;
      frontier.push_back(s);
    }
  }
  std::vector<NodeId> reached = frontier;
  for (unsigned hop = 0; hop < k && !frontier.empty(); ++hop) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    reached.insert(reached.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return NodeSet(std::move(reached));
}

NormalizedAdjacency::NormalizedAdjacency(const Graph& g) : n_(g.node_count()) {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  cols_.reserve(2 * g.edge_count() + n_);
  vals_.reserve(2 * g.edge_count() + n_);
  for (NodeId r = 0; r < n_; ++r) {
    const std::uint32_t dr = g.degree(r) + 1;
    bool diag_done = false;
    for (NodeId c : g.neighbors(r)) {
      if (!diag_done && c > r) {
        cols_.push_back(r);
        vals_.push_back(normalized_weight(dr, dr));
        diag_done = true;
      }
      cols_.push_back(c);
      vals_.push_back(normalized_weight(dr, g.degree(c) + 1));
    }
    if (!diag_done) {
      cols_.push_back(r);
      vals_.push_back(normalized_weight(dr, dr));
    }
    offsets_[r + 1] = cols_.size();
  }
}

double NormalizedAdjacency::at(NodeId r, NodeId c) const {
  auto cs = columns(r);
  auto it = std::lower_bound(cs.begin(), cs.end(), c);
  if (it == cs.end() || *it != c) return 0.0;
  return values(r)[static_cast<std::size_t>(it - cs.begin())];
}

}  // namespace topoinf
