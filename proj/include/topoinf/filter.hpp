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

#include <string>
#include <string_view>
#include <vector>

#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"
#include "topoinf/matrix.hpp"

namespace topoinf {

// GNN models whose neighborhood aggregation reduces to a polynomial in the
// normalized adjacency.
enum class Preset { kSGC, kS2GC, kAPPNP, kGCN, kGCNII, kGPRGNN, kCustom };

std::string_view preset_name(Preset p);
// Case-insensitive. Throws ValidationError for unknown names.
Preset parse_preset(std::string_view name);

struct FilterSpec {
  Preset preset = Preset::kSGC;
  unsigned order = 2;
  double alpha = 0.1;
  // Required for GPRGNN and CUSTOM; length order + 1.
  std::vector<double> gamma;
};

// f(Â) = sum_k coefficients[k] Â^k.
class PolynomialFilter {
 public:
  PolynomialFilter() = default;
  // Throws ValidationError if empty or all-zero.
  explicit PolynomialFilter(std::vector<double> coefficients);

  std::span<const double> coefficients() const noexcept { return coeffs_; }
  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  bool nonnegative() const;
  double sum() const;

 private:
  std::vector<double> coeffs_{1.0};
};

// Validates a FilterSpec and expands it to coefficients:
//   SGC, GCN        (0, ..., 0, 1)
//   S2GC            γ_0 = α, γ_k = (1-α)/K
//   APPNP, GCNII    γ_k = α(1-α)^k for k < K, γ_K = (1-α)^K
//   GPRGNN, CUSTOM  supplied gamma
PolynomialFilter expand_preset(const FilterSpec& spec);

// Parses comma-separated reals ("0.1,0.2,0.7").
std::vector<double> parse_gamma_list(std::string_view text);

// Â·X for an n×m block; rows accumulate over columns in ascending order.
Matrix propagate(const NormalizedAdjacency& adj, const Matrix& x);

// Σ_k γ_k Â^k M with P_0 = M, P_k = Â P_{k-1}, accumulated in increasing k.
Matrix apply_filter(const PolynomialFilter& pf, const NormalizedAdjacency& adj,
                    const Matrix& m);

// Row sums below this are treated as non-normalizable.
inline constexpr double kRowSumTolerance = 1e-12;

struct SoftLabelMatrix {
  // Row-normalized filtered labels. Rows of non-normalizable nodes are NaN.
  Matrix values;
  // Unnormalized row sums of f(Â), i.e. f(Â)·1.
  std::vector<double> row_sums;
  std::vector<NodeId> non_normalizable;
};

// RowNorm(f(Â))·L computed as (f(Â)L) / (f(Â)1) row-wise. `label_matrix` is
// one-hot or row-stochastic, n×c.
SoftLabelMatrix soft_labels(const PolynomialFilter& pf, const NormalizedAdjacency& adj,
                            const Matrix& label_matrix);
// Uses the one-hot view of `labels`.
SoftLabelMatrix soft_labels(const PolynomialFilter& pf, const NormalizedAdjacency& adj,
                            const LabelData& labels);

// Dense RowNorm(f(Â)), n×n. Intended for small graphs. Throws
// ValidationError if any row is non-normalizable.
Matrix row_normalized_filter(const PolynomialFilter& pf, const NormalizedAdjacency& adj);

}  // namespace topoinf
