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

#include "topoinf/compat.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "topoinf/error.hpp"
#include "topoinf/io.hpp"

namespace topoinf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

nlohmann::json number_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return round_to_output(x);
}

}  // namespace

SimilarityModel::SimilarityModel(const LabelData& labels, Similarity mode)
    : labels_(labels), mode_(mode) {
  if (mode == Similarity::kSoft) {
    if (!labels.soft()) throw ValidationError("soft similarity requires soft labels");
    matrix_ = *labels.soft();
  } else {
    matrix_ = labels.one_hot();
  }
}

bool SimilarityModel::has_label(NodeId v) const {
  return mode_ == Similarity::kSoft || labels_.known(v);
}

double SimilarityModel::influence(NodeId v, std::span<const double> filtered_row,
                                  double row_sum) const {
  if (mode_ == Similarity::kHard) return filtered_row[labels_.label(v)] / row_sum;
  auto target = matrix_.row(v);
  double acc = 0.0;
  for (std::size_t c = 0; c < target.size(); ++c) acc += filtered_row[c] / row_sum * target[c];
  return acc;
}

double SimilarityModel::influence(NodeId v, std::span<const double> normalized_row) const {
  if (mode_ == Similarity::kHard) return normalized_row[labels_.label(v)];
  auto target = matrix_.row(v);
  double acc = 0.0;
  for (std::size_t c = 0; c < target.size(); ++c) acc += normalized_row[c] * target[c];
  return acc;
}

double node_influence(const SoftLabelMatrix& lbar, const LabelData& labels, NodeId v) {
  const ClassId c = labels.label(v);
  const double value = lbar.values(v, c);
  if (std::isnan(value)) {
    throw ValidationError("node " + std::to_string(v) + " is non-normalizable");
  }
  return value;
}

double node_regularizer(const Graph& g, NodeId v) {
  const std::uint32_t d = g.degree(v);
  return d == 0 ? kInf : 1.0 / static_cast<double>(d);
}

CompatReport compatibility(const Graph& g, const PolynomialFilter& pf, const LabelData& labels,
                           const NodeSet& target, double lambda, Similarity mode) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("lambda must be a finite non-negative number");
  }
  if (labels.node_count() != g.node_count()) {
    throw ValidationError("labels cover " + std::to_string(labels.node_count()) +
                          " nodes, graph has " + std::to_string(g.node_count()));
  }
  const SimilarityModel sim(labels, mode);
  for (NodeId v : target) {
    if (v >= g.node_count()) {
      throw ValidationError("target node " + std::to_string(v) + " out of range");
    }
    if (!sim.has_label(v)) {
      throw ValidationError("target node " + std::to_string(v) +
                            " has no label; supply pseudo labels first");
    }
  }
  const SoftLabelMatrix lbar = soft_labels(pf, NormalizedAdjacency(g), sim.label_matrix());

  CompatReport report;
  report.lambda = lambda;
  report.target = target;
  report.nodes.reserve(target.size());
  std::vector<NodeId> bad;
  for (NodeId v : target) {
    if (std::isnan(lbar.values(v, 0))) {
      bad.push_back(v);
      continue;
    }
    NodeCompat nc{v, sim.influence(v, lbar.values.row(v)), node_regularizer(g, v)};
    if (std::isinf(nc.regularizer)) report.isolated.push_back(v);
    report.finite_C += std::isinf(nc.regularizer)
                           ? nc.influence
                           : node_term(nc.influence, nc.regularizer, lambda);
    report.nodes.push_back(nc);
  }
  if (!bad.empty()) {
    std::string ids;
    for (std::size_t i = 0; i < bad.size() && i < 10; ++i) {
      ids += (i ? "," : "") + std::to_string(bad[i]);
    }
    throw ValidationError(std::to_string(bad.size()) +
                          " target node(s) have non-positive filter row sums: " + ids);
  }
  report.C = (lambda > 0.0 && !report.isolated.empty()) ? -kInf : report.finite_C;
  return report;
}

nlohmann::json to_json(const CompatReport& report) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& nc : report.nodes) {
    nodes.push_back({{"id", nc.id},
                     {"I", number_json(nc.influence)},
                     {"R", number_json(nc.regularizer)}});
  }
  nlohmann::json out{{"lambda", number_json(report.lambda)},
                     {"C", number_json(report.C)},
                     {"nodes", std::move(nodes)}};
  if (!report.isolated.empty()) out["isolated"] = report.isolated;
  return out;
}

}  // namespace topoinf
