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

#include "topoinf/pseudo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "topoinf/error.hpp"

namespace topoinf {
namespace {

// logits = XW + b for one row, written into `out`.
void row_logits(std::span<const double> x, const Matrix& w, std::span<const double> b,
                std::span<double> out) {
  std::copy(b.begin(), b.end(), out.begin());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    auto wr = w.row(i);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += xi * wr[c];
  }
}

// In-place softmax; returns log of the normalizer (after max shift).
double softmax_inplace(std::span<double> z) {
  const double top = *std::max_element(z.begin(), z.end());
  double total = 0.0;
  for (double& v : z) {
    v = std::exp(v - top);
    total += v;
  }
  for (double& v : z) v /= total;
  return top + std::log(total);
}

}  // namespace

double softmax_loss(const Matrix& features, const LabelData& labels, const Matrix& weights,
                    std::span<const double> bias, double l2_penalty, Matrix* grad_weights,
                    std::vector<double>* grad_bias) {
  const std::size_t n = features.rows();
  const std::size_t d = features.cols();
  const std::size_t c = weights.cols();
  if (grad_weights) *grad_weights = Matrix(d, c);
  if (grad_bias) grad_bias->assign(c, 0.0);

  std::size_t count = 0;
  double loss = 0.0;
  std::vector<double> z(c);
  for (std::size_t v = 0; v < n; ++v) {
    if (!labels.known(static_cast<NodeId>(v))) continue;
    ++count;
    const ClassId y = labels.label(static_cast<NodeId>(v));
    row_logits(features.row(v), weights, bias, z);
    const double logit_y = z[y];
    const double lse = softmax_inplace(z);
    loss += lse - logit_y;
    if (grad_weights || grad_bias) {
      z[y] -= 1.0;  // softmax - onehot
      if (grad_bias) {
        for (std::size_t k = 0; k < c; ++k) (*grad_bias)[k] += z[k];
      }
      if (grad_weights) {
        auto x = features.row(v);
        for (std::size_t i = 0; i < d; ++i) {
          if (x[i] == 0.0) continue;
          auto gw = grad_weights->row(i);
          for (std::size_t k = 0; k < c; ++k) gw[k] += x[i] * z[k];
        }
      }
    }
  }
  if (count == 0) throw ValidationError("no labeled nodes to train on");
  const double scale = 1.0 / static_cast<double>(count);
  loss *= scale;
  double sq = 0.0;
  for (double w : weights.data()) sq += w * w;
  loss += 0.5 * l2_penalty * sq;
  if (grad_weights) {
    auto g = grad_weights->data();
    auto w = weights.data();
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = g[i] * scale + l2_penalty * w[i];
  }
  if (grad_bias) {
    for (double& g : *grad_bias) g *= scale;
  }
  return loss;
}

Matrix predict_proba(const Matrix& features, const Matrix& weights,
                     std::span<const double> bias) {
  Matrix out(features.rows(), weights.cols());
  for (std::size_t v = 0; v < features.rows(); ++v) {
    row_logits(features.row(v), weights, bias, out.row(v));
    softmax_inplace(out.row(v));
  }
  return out;
}

LinearModel train_linear_sgc(const Graph& g, const PolynomialFilter& pf, const Matrix& features,
                             const LabelData& labels, const TrainConfig& cfg) {
  if (!(cfg.learning_rate > 0.0)) throw ValidationError("learning rate must be positive");
  if (!(cfg.l2_penalty >= 0.0)) throw ValidationError("l2 penalty must be non-negative");
  if (cfg.epochs == 0) throw ValidationError("epochs must be positive");
  if (features.rows() != g.node_count() || labels.node_count() != g.node_count()) {
    throw ValidationError("features and labels must cover every node");
  }
  if (labels.known_count() == 0) throw ValidationError("training mask is empty");

  const Matrix filtered = apply_filter(pf, NormalizedAdjacency(g), features);
  const std::size_t d = features.cols();
  const std::size_t c = labels.classes();

  LinearModel model;
  model.weights = Matrix(d, c);
  model.bias.assign(c, 0.0);
  std::mt19937_64 rng(cfg.seed);
  const double bound = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(d, 1)));
  std::uniform_real_distribution<double> init(-bound, bound);
  for (double& w : model.weights.data()) w = init(rng);

  Matrix grad_w;
  std::vector<double> grad_b;
  for (unsigned epoch = 0; epoch <= cfg.epochs; ++epoch) {
    const bool last = epoch == cfg.epochs;
    const double loss = softmax_loss(filtered, labels, model.weights, model.bias,
                                     cfg.l2_penalty, last ? nullptr : &grad_w,
                                     last ? nullptr : &grad_b);
    if (!std::isfinite(loss)) {
      throw NumericalError("training loss became non-finite at epoch " + std::to_string(epoch) +
                           " (learning rate " + std::to_string(cfg.learning_rate) + ")");
    }
    model.loss_trace.push_back(loss);
    if (last) break;
    auto w = model.weights.data();
    auto gw = grad_w.data();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= cfg.learning_rate * gw[i];
    for (std::size_t k = 0; k < c; ++k) model.bias[k] -= cfg.learning_rate * grad_b[k];
  }
  if (model.loss_trace.back() > model.loss_trace.front()) {
    throw NumericalError("final training loss " + std::to_string(model.loss_trace.back()) +
                         " exceeds initial loss " + std::to_string(model.loss_trace.front()) +
                         "; lower the learning rate");
  }
  return model;
}

LabelData PseudoLabels::to_label_data() const {
  LabelData out = LabelData::from_labels(static_cast<ClassId>(soft.cols()), hardened);
  out.set_soft(soft);
  return out;
}

PseudoLabels predict_pseudo(const LinearModel& model, const Graph& g, const PolynomialFilter& pf,
                            const Matrix& features, const LabelData& labels) {
  const Matrix filtered = apply_filter(pf, NormalizedAdjacency(g), features);
  PseudoLabels out;
  out.soft = predict_proba(filtered, model.weights, model.bias);
  const NodeId n = g.node_count();
  out.hardened.resize(n);
  out.source_mask.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    auto row = out.soft.row(v);
    if (labels.known(v)) {
      std::fill(row.begin(), row.end(), 0.0);
      row[labels.label(v)] = 1.0;
      out.hardened[v] = labels.label(v);
      out.source_mask[v] = true;
    } else {
      out.hardened[v] = static_cast<ClassId>(std::max_element(row.begin(), row.end()) - row.begin());
      out.source_mask[v] = false;
    }
  }
  return out;
}

}  // namespace topoinf
