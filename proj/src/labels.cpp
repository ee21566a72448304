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

#include "topoinf/labels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topoinf/error.hpp"

namespace topoinf {

LabelData::LabelData(ClassId classes, std::vector<ClassId> hard, std::vector<bool> known)
    : classes_(classes), hard_(std::move(hard)), known_(std::move(known)) {
  if (classes_ == 0) throw ValidationError("class count must be positive");
  if (hard_.size() != known_.size()) {
    throw ValidationError("label and mask sizes differ");
  }
  for (std::size_t v = 0; v < hard_.size(); ++v) {
    if (!known_[v]) {
      hard_[v] = 0;
    } else if (hard_[v] >= classes_) {
      throw ValidationError("node " + std::to_string(v) + " has class " +
                            std::to_string(hard_[v]) + " but only " +
                            std::to_string(classes_) + " classes declared");
    }
  }
}

LabelData LabelData::from_labels(ClassId classes, std::vector<ClassId> hard) {
  std::vector<bool> known(hard.size(), true);
  return LabelData(classes, std::move(hard), std::move(known));
}

ClassId LabelData::label(NodeId v) const {
  if (!known_.at(v)) {
    throw ValidationError("node " + std::to_string(v) + " has no label");
  }
  return hard_[v];
}

std::size_t LabelData::known_count() const {
  return static_cast<std::size_t>(std::count(known_.begin(), known_.end(), true));
}

void LabelData::set_soft(Matrix soft) {
  if (soft.rows() != hard_.size() || soft.cols() != classes_) {
    throw ValidationError("soft-label matrix must be " + std::to_string(hard_.size()) +
                          "x" + std::to_string(classes_));
  }
  for (std::size_t r = 0; r < soft.rows(); ++r) {
    double sum = 0.0;
    for (double x : soft.row(r)) {
      if (!(x >= 0.0)) {
        throw ValidationError("soft-label row " + std::to_string(r) +
                              " has a negative or non-finite entry");
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("soft-label row " + std::to_string(r) + " sums to " +
                            std::to_string(sum));
    }
  }
  soft_ = std::move(soft);
}

Matrix LabelData::one_hot() const {
  Matrix m(hard_.size(), classes_);
  for (std::size_t v = 0; v < hard_.size(); ++v) {
    if (known_[v]) m(v, hard_[v]) = 1.0;
  }
  return m;
}

}  // namespace topoinf
