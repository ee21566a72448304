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

// Test-only dense oracle: builds Â, f(A) and C from scratch with plain
// nested vectors, sharing no code with the library.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace topoinf::testing {

using Dense = std::vector<std::vector<double>>;

struct DenseProblem {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> labels;
  std::size_t classes = 0;
  std::vector<double> gamma;
  std::vector<std::size_t> target;
  double lambda = 0.0;
};

struct DenseCompat {
  double influence_sum = 0.0;
  double regularizer_sum = 0.0;  // finite entries only
  std::vector<bool> infinite_r;  // per target position
  std::vector<double> influence;  // per target position
  bool normalizable = true;
};

inline Dense dense_multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  Dense out(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Dense dense_normalized_adjacency(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Dense a(n, std::vector<double>(n, 0.0));
  for (std::size_t v = 0; v < n; ++v) a[v][v] = 1.0;
  for (const auto& [u, v] : edges) {
    a[u][v] = 1.0;
    a[v][u] = 1.0;
  }
  std::vector<double> deg(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (double x : a[u]) deg[u] += x;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) a[u][v] /= std::sqrt(deg[u]) * std::sqrt(deg[v]);
  }
  return a;
}

// f(A) = Σ γ_k Â^k as a dense n × n matrix.
inline Dense dense_filter(const DenseProblem& p,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const Dense a = dense_normalized_adjacency(p.n, edges);
  Dense power(p.n, std::vector<double>(p.n, 0.0));
  for (std::size_t v = 0; v < p.n; ++v) power[v][v] = 1.0;
  Dense f(p.n, std::vector<double>(p.n, 0.0));
  for (std::size_t k = 0; k < p.gamma.size(); ++k) {
    if (k > 0) power = dense_multiply(a, power);
    for (std::size_t i = 0; i < p.n; ++i) {
      for (std::size_t j = 0; j < p.n; ++j) f[i][j] += p.gamma[k] * power[i][j];
    }
  }
  return f;
}

inline DenseCompat dense_compat(const DenseProblem& p,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const Dense f = dense_filter(p, edges);
  std::vector<std::size_t> degree(p.n, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  DenseCompat out;
  for (std::size_t v : p.target) {
    double row_sum = 0.0;
    double label_mass = 0.0;
    for (std::size_t u = 0; u < p.n; ++u) {
      row_sum += f[v][u];
      if (p.labels[u] == p.labels[v]) label_mass += f[v][u];
    }
    if (!(row_sum > 1e-12)) out.normalizable = false;
    const double i_v = label_mass / row_sum;
    out.influence.push_back(i_v);
    out.influence_sum += i_v;
    out.infinite_r.push_back(degree[v] == 0);
    if (degree[v] > 0) out.regularizer_sum += 1.0 / static_cast<double>(degree[v]);
  }
  return out;
}

// C(A); -inf when λ > 0 and a target node is isolated.
inline double dense_c(const DenseProblem& p) {
  const DenseCompat c = dense_compat(p, p.edges);
  for (bool inf : c.infinite_r) {
    if (inf && p.lambda > 0.0) return -std::numeric_limits<double>::infinity();
  }
  return c.influence_sum - p.lambda * c.regularizer_sum;
}

// C(A') - C(A) for removing edges[e]. Nodes isolated in both graphs cancel;
// a newly isolated target node (λ > 0) or a non-normalizable row gives -inf.
inline double dense_topoinf(const DenseProblem& p, std::size_t e) {
  auto reduced = p.edges;
  reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(e));
  const DenseCompat before = dense_compat(p, p.edges);
  const DenseCompat after = dense_compat(p, reduced);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (!after.normalizable) return kNegInf;
  if (p.lambda > 0.0) {
    for (std::size_t i = 0; i < after.infinite_r.size(); ++i) {
      if (after.infinite_r[i] && !before.infinite_r[i]) return kNegInf;
    }
  }
  double delta = after.influence_sum - before.influence_sum;
  if (p.lambda > 0.0) delta -= p.lambda * (after.regularizer_sum - before.regularizer_sum);
  return delta;
}

}  // namespace topoinf::testing
