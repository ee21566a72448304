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
#include <string>
#include <vector>

#include "topoinf/filter.hpp"
#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"
#include "topoinf/matrix.hpp"

namespace topoinf {

enum class CenterScheme { kOrthogonalScaled, kGaussianRandom };

CenterScheme parse_center_scheme(std::string_view name);
std::string_view center_scheme_name(CenterScheme s);

// Contextual stochastic block model: SBM topology with intra/inter-community
// edge probabilities p, q and features X = Lμ + N, N_ij ~ N(0, σ²).
struct CsbmParams {
  NodeId n = 100;
  ClassId c = 2;
  double p = 0.5;
  double q = 0.1;
  std::size_t d = 16;
  double sigma = 1.0;
  CenterScheme scheme = CenterScheme::kOrthogonalScaled;
  double mu_scale = 1.0;
  std::uint64_t seed = 0;

  // Throws ValidationError for out-of-range values.
  void validate() const;
};

struct CsbmSample {
  Graph graph;
  LabelData labels;
  // c × d community centers.
  Matrix centers;
  // n × d, row v equals the center of v's community.
  Matrix signal;
  // signal + noise.
  Matrix features;
  // Scheme actually used (orthogonal falls back to Gaussian when d < c).
  CenterScheme scheme = CenterScheme::kOrthogonalScaled;
};

// Communities are assigned round-robin and shuffled; every unordered pair
// is an edge independently with probability p (same community) or q.
CsbmSample generate_csbm(const CsbmParams& params);

// G(n, p): every unordered pair independently with probability p.
Graph erdos_renyi(NodeId n, double p, std::uint64_t seed);

// Cora-sized bundle: n = 2708, c = 7, d = 1433 and p, q solved so that the
// expected edge count is 5278 with `intra_fraction` of edges inside
// communities.
CsbmParams cora_like_params(double intra_fraction, double sigma, std::uint64_t seed);

inline constexpr NodeId kCoraNodes = 2708;
inline constexpr std::size_t kCoraEdges = 5278;
inline constexpr ClassId kCoraClasses = 7;
inline constexpr std::size_t kCoraFeatures = 1433;

struct NodeDistance {
  NodeId node = 0;
  // Farthest different-community distance before and after filtering.
  double before = 0.0;
  double after = 0.0;
};

struct DistanceReport {
  bool vacuous = false;
  std::vector<NodeDistance> nodes;
  std::size_t violations = 0;
};

// D(X, v) = max_{u : c_u != c_v} ||X_v - X_u|| for X = F and for
// X = RowNorm(f(Â))F. A violation is D(F, v) < D(filtered, v) - 1e-9.
// Throws ValidationError unless the coefficients are non-negative and sum
// to 1 (within 1e-9).
DistanceReport check_distance_contraction(const CsbmSample& sample, const PolynomialFilter& pf);

struct VarianceReport {
  std::size_t n = 0;
  // ||RowNorm(f(Â))||_F²
  double filter_frobenius_sq = 0.0;
  bool frobenius_holds = false;
  std::size_t trials = 0;
  double mean_noise_sq = 0.0;
  double mean_filtered_noise_sq = 0.0;
  double empirical_bound = 0.0;
  bool empirical_holds = false;
};

// Deterministic check ||RowNorm(f(Â))||_F² <= n plus a Monte Carlo check
// that mean ||RowNorm(f(Â))N||_F² <= mean ||N||_F² (1 + 3/sqrt(trials)) over
// fresh n × d noise draws with standard deviation sigma.
VarianceReport check_variance_reduction(const Graph& g, std::size_t d, double sigma,
                                        const PolynomialFilter& pf, std::size_t trials,
                                        std::uint64_t seed);

}  // namespace topoinf
