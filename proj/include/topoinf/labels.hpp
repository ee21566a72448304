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
#include <vector>

#include "topoinf/graph.hpp"
#include "topoinf/matrix.hpp"

namespace topoinf {

using ClassId = std::uint32_t;

// Per-node class labels with a "known" mask and an optional row-stochastic
// soft-label matrix.
class LabelData {
 public:
  LabelData() = default;

  // `hard[v]` is ignored where `known[v]` is false. Throws ValidationError
  // when a known label is >= classes or sizes disagree.
  LabelData(ClassId classes, std::vector<ClassId> hard, std::vector<bool> known);

  // Every node labeled.
  static LabelData from_labels(ClassId classes, std::vector<ClassId> hard);

  ClassId classes() const noexcept { return classes_; }
  std::size_t node_count() const noexcept { return hard_.size(); }
  bool known(NodeId v) const { return known_.at(v); }
  ClassId label(NodeId v) const;
  std::span<const ClassId> hard() const noexcept { return hard_; }
  std::size_t known_count() const;
  bool fully_labeled() const { return known_count() == node_count(); }

  // Attaches an n×c soft-label matrix; rows must sum to 1 within 1e-9.
  void set_soft(Matrix soft);
  const std::optional<Matrix>& soft() const noexcept { return soft_; }

  // n×c one-hot view; unknown nodes give zero rows.
  Matrix one_hot() const;

 private:
  ClassId classes_ = 0;
  std::vector<ClassId> hard_;
  std::vector<bool> known_;
  std::optional<Matrix> soft_;
};

}  // namespace topoinf
