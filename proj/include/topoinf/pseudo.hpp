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
#include <vector>

#include "topoinf/filter.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"
#include "topoinf/matrix.hpp"

namespace topoinf {

struct TrainConfig {
  double learning_rate = 0.5;
  unsigned epochs = 200;
  double l2_penalty = 5e-4;
  std::uint64_t seed = 0;
};

// Softmax regression softmax(f(Â) X W + b).
struct LinearModel {
  Matrix weights;  // d × c
  std::vector<double> bias;  // c
  std::vector<double> loss_trace;  // one entry per epoch, plus the initial loss
};

// Mean cross-entropy over nodes with known labels plus (l2/2)·||W||². When
// the gradient outputs are non-null they receive dLoss/dW and dLoss/db.
double softmax_loss(const Matrix& features, const LabelData& labels, const Matrix& weights,
                    std::span<const double> bias, double l2_penalty, Matrix* grad_weights,
                    std::vector<double>* grad_bias);

// Row-wise softmax(XW + b).
Matrix predict_proba(const Matrix& features, const Matrix& weights, std::span<const double> bias);

// Filters the features once with f(Â), then runs full-batch gradient
// descent from a seeded uniform(-1/sqrt(d), 1/sqrt(d)) initialization.
// Throws ValidationError with no labeled nodes and NumericalError if the
// loss becomes non-finite or ends above its initial value.
LinearModel train_linear_sgc(const Graph& g, const PolynomialFilter& pf, const Matrix& features,
                             const LabelData& labels, const TrainConfig& cfg);

struct PseudoLabels {
  Matrix soft;  // n × c, rows sum to 1
  std::vector<ClassId> hardened;  // argmax, lowest class on ties
  std::vector<bool> source_mask;  // true where the label came from the input

  // Fully labeled view of `hardened` with `soft` attached.
  LabelData to_label_data() const;
};

// Model predictions with known labels overriding both the soft row
// (one-hot) and the hardened class.
PseudoLabels predict_pseudo(const LinearModel& model, const Graph& g, const PolynomialFilter& pf,
                            const Matrix& features, const LabelData& labels);

}  // namespace topoinf
