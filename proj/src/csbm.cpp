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

#include "topoinf/csbm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "topoinf/error.hpp"

namespace topoinf {

CenterScheme parse_center_scheme(std::string_view name) {
  if (name == "orthogonal_scaled" || name == "orthogonal") return CenterScheme::kOrthogonalScaled;
  if (name == "gaussian_random" || name == "gaussian") return CenterScheme::kGaussianRandom;
  throw ValidationError("unknown center scheme '" + std::string(name) + "'");
}

std::string_view center_scheme_name(CenterScheme s) {
  return s == CenterScheme::kOrthogonalScaled ? "orthogonal_scaled" : "gaussian_random";
}

void CsbmParams::validate() const {
  if (c < 1) throw ValidationError("need at least one community");
  if (n < c) throw ValidationError("need n >= c");
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("edge probabilities must lie in [0, 1]");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ValidationError("sigma must be >= 0");
  if (!std::isfinite(mu_scale)) throw ValidationError("mu_scale must be finite");
}

CsbmSample generate_csbm(const CsbmParams& params) {
  params.validate();
  std::mt19937_64 rng(params.seed);
  const NodeId n = params.n;

  std::vector<ClassId> community(n);
  for (NodeId v = 0; v < n; ++v) community[v] = v % params.c;
  std::shuffle(community.begin(), community.end(), rng);

  std::vector<Edge> edges;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double prob = community[u] == community[v] ? params.p : params.q;
      if (unit(rng) < prob) edges.push_back({u, v});
    }
  }

  CsbmSample sample;
  sample.graph = Graph::from_edges(n, edges);
  sample.labels = LabelData::from_labels(params.c, community);
  sample.scheme = params.scheme;
  if (sample.scheme == CenterScheme::kOrthogonalScaled && params.d < params.c) {
    sample.scheme = CenterScheme::kGaussianRandom;
  }

  sample.centers = Matrix(params.c, params.d);
  if (sample.scheme == CenterScheme::kOrthogonalScaled) {
    for (ClassId k = 0; k < params.c; ++k) sample.centers(k, k) = params.mu_scale;
  } else {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scale = params.mu_scale / std::sqrt(static_cast<double>(std::max<std::size_t>(params.d, 1)));
    for (double& x : sample.centers.data()) x = scale * gauss(rng);
  }

  sample.signal = Matrix(n, params.d);
  for (NodeId v = 0; v < n; ++v) {
    auto src = sample.centers.row(community[v]);
    std::copy(src.begin(), src.end(), sample.signal.row(v).begin());
  }
  sample.features = sample.signal;
  if (params.sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, params.sigma);
    for (double& x : sample.features.data()) x += noise(rng);
  }
  return sample;
}

Graph erdos_renyi(NodeId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

CsbmParams cora_like_params(double intra_fraction, double sigma, std::uint64_t seed) {
  if (!(intra_fraction >= 0.0 && intra_fraction <= 1.0)) {
    throw ValidationError("intra-community edge fraction must lie in [0, 1]");
  }
  CsbmParams p;
  p.n = kCoraNodes;
  p.c = kCoraClasses;
  p.d = kCoraFeatures;
  p.sigma = sigma;
  p.seed = seed;
  // Round-robin sizes: n mod c communities get one extra node.
  const double base = static_cast<double>(p.n / p.c);
  const std::size_t big = p.n % p.c;
  double intra_pairs = 0.0;
  for (ClassId k = 0; k < p.c; ++k) {
    const double size = base + (k < big ? 1.0 : 0.0);
    intra_pairs += size * (size - 1.0) / 2.0;
  }
  const double all_pairs = static_cast<double>(p.n) * (p.n - 1.0) / 2.0;
  const double inter_pairs = all_pairs - intra_pairs;
  p.p = intra_fraction * static_cast<double>(kCoraEdges) / intra_pairs;
  p.q = (1.0 - intra_fraction) * static_cast<double>(kCoraEdges) / inter_pairs;
  return p;
}

DistanceReport check_distance_contraction(const CsbmSample& sample, const PolynomialFilter& pf) {
  if (!pf.nonnegative() || std::abs(pf.sum() - 1.0) > 1e-9) {
    throw ValidationError(
        "distance contraction requires non-negative filter coefficients summing to 1");
  }
  DistanceReport report;
  const NodeId n = sample.graph.node_count();
  const Matrix rownorm = row_normalized_filter(pf, NormalizedAdjacency(sample.graph));
  // RowNorm(f(Â)) F
  const std::size_t d = sample.signal.cols();
  Matrix filtered(n, d);
  for (NodeId v = 0; v < n; ++v) {
    auto out = filtered.row(v);
    for (NodeId u = 0; u < n; ++u) {
      const double w = rownorm(v, u);
      if (w == 0.0) continue;
      auto src = sample.signal.row(u);
      for (std::size_t j = 0; j < d; ++j) out[j] += w * src[j];
    }
  }
  auto dist = [d](std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += (a[j] - b[j]) * (a[j] - b[j]);
    return std::sqrt(acc);
  };
  for (NodeId v = 0; v < n; ++v) {
    NodeDistance nd{v, -1.0, -1.0};
    for (NodeId u = 0; u < n; ++u) {
      if (sample.labels.label(u) == sample.labels.label(v)) continue;
      nd.before = std::max(nd.before, dist(sample.signal.row(v), sample.signal.row(u)));
      nd.after = std::max(nd.after, dist(filtered.row(v), filtered.row(u)));
    }
    if (nd.before < 0.0) {
      report.vacuous = true;
      report.nodes.clear();
      report.violations = 0;
      return report;
    }
    if (nd.before < nd.after - 1e-9) ++report.violations;
    report.nodes.push_back(nd);
  }
  return report;
}

VarianceReport check_variance_reduction(const Graph& g, std::size_t d, double sigma,
                                        const PolynomialFilter& pf, std::size_t trials,
                                        std::uint64_t seed) {
  VarianceReport r;
  const NodeId n = g.node_count();
  r.n = n;
  r.trials = trials;
  const NormalizedAdjacency adj(g);
  const Matrix rownorm = row_normalized_filter(pf, adj);
  r.filter_frobenius_sq = frobenius_sq(rownorm);
  r.frobenius_holds = r.filter_frobenius_sq <= static_cast<double>(n);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma > 0.0 ? sigma : 1.0);
  double sum_noise = 0.0;
  double sum_filtered = 0.0;
  Matrix draw(n, d);
  Matrix filtered(n, d);
  for (std::size_t t = 0; t < trials; ++t) {
    for (double& x : draw.data()) x = sigma > 0.0 ? noise(rng) : 0.0;
    std::fill(filtered.data().begin(), filtered.data().end(), 0.0);
    for (NodeId v = 0; v < n; ++v) {
      auto out = filtered.row(v);
      for (NodeId u = 0; u < n; ++u) {
        const double w = rownorm(v, u);
        if (w == 0.0) continue;
        auto src = draw.row(u);
        for (std::size_t j = 0; j < d; ++j) out[j] += w * src[j];
      }
    }
    sum_noise += frobenius_sq(draw);
    sum_filtered += frobenius_sq(filtered);
  }
  if (trials > 0) {
    r.mean_noise_sq = sum_noise / static_cast<double>(trials);
    r.mean_filtered_noise_sq = sum_filtered / static_cast<double>(trials);
    r.empirical_bound = r.mean_noise_sq * (1.0 + 3.0 / std::sqrt(static_cast<double>(trials)));
  }
  r.empirical_holds = r.mean_filtered_noise_sq <= r.empirical_bound;
  return r;
}

}  // namespace topoinf
