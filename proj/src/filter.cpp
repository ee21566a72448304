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

#include "topoinf/filter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "topoinf/error.hpp"

namespace topoinf {
namespace {

struct PresetEntry {
  Preset preset;
  std::string_view name;
};

constexpr PresetEntry kPresets[] = {
    {Preset::kSGC, "sgc"},     {Preset::kS2GC, "s2gc"},     {Preset::kAPPNP, "appnp"},
    {Preset::kGCN, "gcn"},     {Preset::kGCNII, "gcnii"},   {Preset::kGPRGNN, "gprgnn"},
    {Preset::kCustom, "custom"},
};

// y = Â x for an n×m block.
void multiply(const NormalizedAdjacency& adj, const Matrix& x, Matrix& y) {
  const std::size_t m = x.cols();
  for (NodeId r = 0; r < adj.node_count(); ++r) {
    auto out = y.row(r);
    std::fill(out.begin(), out.end(), 0.0);
    auto cols = adj.columns(r);
    auto vals = adj.values(r);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      auto in = x.row(cols[e]);
      const double w = vals[e];
      for (std::size_t j = 0; j < m; ++j) out[j] += w * in[j];
    }
  }
}

}  // namespace

Matrix propagate(const NormalizedAdjacency& adj, const Matrix& x) {
  if (x.rows() != adj.node_count()) {
    throw ValidationError("matrix has " + std::to_string(x.rows()) + " rows, graph has " +
                          std::to_string(adj.node_count()) + " nodes");
  }
  Matrix y(x.rows(), x.cols());
  multiply(adj, x, y);
  return y;
}

std::string_view preset_name(Preset p) {
  for (const auto& e : kPresets) {
    if (e.preset == p) return e.name;
  }
  return "unknown";
}

Preset parse_preset(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (const auto& e : kPresets) {
    if (e.name == lower) return e.preset;
  }
  throw ValidationError("unknown filter model '" + std::string(name) + "'");
}

PolynomialFilter::PolynomialFilter(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw ValidationError("filter needs at least one coefficient");
  bool any = false;
  for (double g : coeffs_) {
    if (!std::isfinite(g)) throw ValidationError("filter coefficient is not finite");
    any = any || g != 0.0;
  }
  if (!any) throw ValidationError("filter coefficients are all zero");
}

bool PolynomialFilter::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double g) { return g >= 0.0; });
}

double PolynomialFilter::sum() const {
  double s = 0.0;
  for (double g : coeffs_) s += g;
  return s;
}

PolynomialFilter expand_preset(const FilterSpec& spec) {
  const unsigned k = spec.order;
  const double a = spec.alpha;
  const bool uses_alpha = spec.preset == Preset::kS2GC || spec.preset == Preset::kAPPNP ||
                          spec.preset == Preset::kGCNII;
  if (uses_alpha && !(a >= 0.0 && a <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1]");
  }
  switch (spec.preset) {
    case Preset::kGPRGNN:
    case Preset::kCustom: {
      if (spec.gamma.empty()) {
        throw ValidationError(std::string(preset_name(spec.preset)) +
                              " filter requires --gamma coefficients");
      }
      if (k != 0 && spec.gamma.size() != k + 1) {
        throw ValidationError("gamma has " + std::to_string(spec.gamma.size()) +
                              " coefficients but K=" + std::to_string(k) + " needs " +
                              std::to_string(k + 1));
      }
      return PolynomialFilter(spec.gamma);
    }
    default:
      break;
  }
  if (k < 1) throw ValidationError("filter order K must be >= 1");
  std::vector<double> g(k + 1, 0.0);
  switch (spec.preset) {
    case Preset::kSGC:
    case Preset::kGCN:
      g[k] = 1.0;
      break;
    case Preset::kS2GC:
      g[0] = a;
      for (unsigned i = 1; i <= k; ++i) g[i] = (1.0 - a) / k;
      break;
    case Preset::kAPPNP:
    case Preset::kGCNII: {
      double decay = 1.0;
      for (unsigned i = 0; i < k; ++i) {
        g[i] = a * decay;
        decay *= 1.0 - a;
      }
      g[k] = decay;
      break;
    }
    default:
      break;
  }
  return PolynomialFilter(std::move(g));
}

std::vector<double> parse_gamma_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ValidationError("invalid gamma coefficient '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

Matrix apply_filter(const PolynomialFilter& pf, const NormalizedAdjacency& adj,
                    const Matrix& m) {
  if (m.rows() != adj.node_count()) {
    throw ValidationError("matrix has " + std::to_string(m.rows()) + " rows, graph has " +
                          std::to_string(adj.node_count()) + " nodes");
  }
  auto gamma = pf.coefficients();
  Matrix acc(m.rows(), m.cols());
  Matrix power = m;
  Matrix next(m.rows(), m.cols());
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (k > 0) {
      multiply(adj, power, next);
      std::swap(power, next);
    }
    if (gamma[k] == 0.0) continue;
    auto a = acc.data();
    auto p = power.data();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += gamma[k] * p[i];
  }
  return acc;
}

SoftLabelMatrix soft_labels(const PolynomialFilter& pf, const NormalizedAdjacency& adj,
                            const Matrix& label_matrix) {
  const std::size_t n = label_matrix.rows();
  const std::size_t c = label_matrix.cols();
  // Filter labels and the all-ones vector together as one n×(c+1) block.
  Matrix block(n, c + 1);
  for (std::size_t v = 0; v < n; ++v) {
    auto src = label_matrix.row(v);
    std::copy(src.begin(), src.end(), block.row(v).begin());
    block(v, c) = 1.0;
  }
  const Matrix filtered = apply_filter(pf, adj, block);

  SoftLabelMatrix out{Matrix(n, c), std::vector<double>(n), {}};
  for (std::size_t v = 0; v < n; ++v) {
    const double s = filtered(v, c);
    out.row_sums[v] = s;
    if (!(s > kRowSumTolerance)) {
      out.non_normalizable.push_back(static_cast<NodeId>(v));
      for (std::size_t j = 0; j < c; ++j) {
        out.values(v, j) = std::numeric_limits<double>::quiet_NaN();
      }
      continue;
    }
    for (std::size_t j = 0; j < c; ++j) out.values(v, j) = filtered(v, j) / s;
  }
  return out;
}

SoftLabelMatrix soft_labels(const PolynomialFilter& pf, const NormalizedAdjacency& adj,
                            const LabelData& labels) {
  return soft_labels(pf, adj, labels.one_hot());
}

Matrix row_normalized_filter(const PolynomialFilter& pf, const NormalizedAdjacency& adj) {
  const SoftLabelMatrix s = soft_labels(pf, adj, Matrix::identity(adj.node_count()));
  if (!s.non_normalizable.empty()) {
    throw ValidationError("filter has " + std::to_string(s.non_normalizable.size()) +
                          " non-normalizable rows");
  }
  return s.values;
}

}  // namespace topoinf
