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

#include "topoinf/rewire.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "topoinf/error.hpp"

namespace topoinf {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

// Partial Fisher-Yates: the first `count` entries of `pool` become a
// uniform sample without replacement.
void shuffle_prefix(std::vector<EdgeId>& pool, std::size_t count, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
}

// Fenwick tree over non-negative weights supporting "find the index whose
// prefix interval contains x".
class WeightTree {
 public:
  explicit WeightTree(std::span<const double> w) : tree_(w.size() + 1, 0.0) {
    for (std::size_t i = 0; i < w.size(); ++i) add(i, w[i]);
  }
  void add(std::size_t i, double delta) {
    for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) tree_[k] += delta;
  }
  double total() const {
    double s = 0.0;
    for (std::size_t k = tree_.size() - 1; k > 0; k -= k & (~k + 1)) s += tree_[k];
    return s;
  }
  std::size_t find(double x) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= x) {
        pos += step;
        x -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<double> tree_;
};

}  // namespace

Strategy parse_strategy(std::string_view name) {
  const std::string s = lower(name);
  if (s == "topoinf") return Strategy::kTopoInf;
  if (s == "random") return Strategy::kRandom;
  if (s == "adaedge") return Strategy::kAdaEdge;
  throw ValidationError("unknown strategy '" + std::string(name) + "'");
}

EdgeSet parse_edge_set(std::string_view name) {
  const std::string s = lower(name);
  if (s == "positive") return EdgeSet::kPositive;
  if (s == "negative") return EdgeSet::kNegative;
  throw ValidationError("unknown edge set '" + std::string(name) + "'");
}

std::size_t removal_count(double ratio, std::size_t edges) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw ValidationError("ratio must lie in [0, 1]");
  // The epsilon keeps products such as 0.3 * 10 from flooring to 2.
  const double raw = ratio * static_cast<double>(edges);
  return std::min(edges, static_cast<std::size_t>(std::floor(raw + 1e-9)));
}

EdgeSelection remove_by_topoinf(std::span<const TopoInfScore> scores, std::size_t total_edges,
                                const RemovalPlan& plan) {
  const std::size_t want = removal_count(plan.ratio, total_edges);
  const Sign sign = plan.set == EdgeSet::kPositive ? Sign::kPositive : Sign::kNegative;
  std::vector<TopoInfScore> pool;
  for (const auto& s : scores) {
    if (s.sign == sign) pool.push_back(s);
  }
  std::sort(pool.begin(), pool.end(), [](const TopoInfScore& a, const TopoInfScore& b) {
    const double ma = std::abs(a.value);
    const double mb = std::abs(b.value);
    if (ma != mb) return ma > mb;
    return a.edge < b.edge;
  });
  EdgeSelection out;
  if (want > pool.size()) {
    out.warnings.push_back("requested " + std::to_string(want) + " edges but the " +
                           std::string(sign_name(sign)) + " set has only " +
                           std::to_string(pool.size()));
  }
  const std::size_t take = std::min(want, pool.size());
  for (std::size_t i = 0; i < take; ++i) out.edges.push_back(pool[i].edge);
  return out;
}

std::vector<EdgeId> remove_random(const Graph& g, double ratio, std::uint64_t seed) {
  const std::size_t want = removal_count(ratio, g.edge_count());
  std::vector<EdgeId> pool(g.edge_count());
  std::iota(pool.begin(), pool.end(), EdgeId{0});
  std::mt19937_64 rng(seed);
  shuffle_prefix(pool, want, rng);
  return pool;
}

AdaEdgePartition adaedge_partition(const Graph& g, const LabelData& labels) {
  if (labels.node_count() != g.node_count()) {
    throw ValidationError("labels do not match the graph");
  }
  AdaEdgePartition out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!labels.known(ed.u) || !labels.known(ed.v)) {
      out.unassigned.push_back(e);
    } else if (labels.label(ed.u) == labels.label(ed.v)) {
      out.same_label.push_back(e);
    } else {
      out.diff_label.push_back(e);
    }
  }
  return out;
}

EdgeSelection remove_adaedge(const Graph& g, const LabelData& labels, const RemovalPlan& plan) {
  const AdaEdgePartition part = adaedge_partition(g, labels);
  std::vector<EdgeId> pool =
      plan.set == EdgeSet::kPositive ? part.diff_label : part.same_label;
  const std::size_t want = removal_count(plan.ratio, g.edge_count());
  EdgeSelection out;
  if (!part.unassigned.empty()) {
    out.warnings.push_back(std::to_string(part.unassigned.size()) +
                           " edges have an unlabeled endpoint and were not assigned");
  }
  if (want > pool.size()) {
    out.warnings.push_back("requested " + std::to_string(want) + " edges but the set has only " +
                           std::to_string(pool.size()));
  }
  std::mt19937_64 rng(plan.seed);
  shuffle_prefix(pool, std::min(want, pool.size()), rng);
  out.edges = std::move(pool);
  return out;
}

DropEdgeDistribution dropedge_weights(std::span<const TopoInfScore> scores, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ValidationError("temperature must be a positive finite number");
  }
  DropEdgeDistribution dist;
  dist.temperature = tau;
  dist.probability.assign(scores.size(), 0.0);
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& s : scores) {
    if (s.sign != Sign::kExcluded) top = std::max(top, s.value);
  }
  if (!std::isfinite(top)) throw ValidationError("every edge is excluded; empty support");
  double total = 0.0;
  for (const auto& s : scores) {
    if (s.sign == Sign::kExcluded) continue;
    const double w = std::exp((s.value - top) / tau);
    dist.probability.at(s.edge) = w;
    total += w;
    ++dist.support;
  }
  for (double& p : dist.probability) p /= total;
  return dist;
}

std::vector<EdgeId> sample_dropedge(const DropEdgeDistribution& dist, double drop_fraction,
                                    std::uint64_t seed) {
  const std::size_t want =
      std::min(removal_count(drop_fraction, dist.probability.size()), dist.support);
  std::vector<double> weights = dist.probability;
  WeightTree tree(weights);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<EdgeId> out;
  out.reserve(want);
  for (std::size_t drawn = 0; drawn < want; ++drawn) {
    const double total = tree.total();
    std::size_t idx = tree.find(unit(rng) * total);
    // Rounding in the prefix sums can land on a spent slot; fall back to the
    // nearest live one.
    if (idx >= weights.size() || weights[idx] <= 0.0) {
      std::size_t j = std::min(idx, weights.size() - 1);
      while (j > 0 && weights[j] <= 0.0) --j;
      while (j < weights.size() && weights[j] <= 0.0) ++j;
      idx = j;
    }
    out.push_back(static_cast<EdgeId>(idx));
    tree.add(idx, -weights[idx]);
    weights[idx] = 0.0;
  }
  return out;
}

std::uint64_t epoch_seed(std::uint64_t seed, std::uint64_t epoch) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(epoch), static_cast<std::uint32_t>(epoch >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace topoinf
