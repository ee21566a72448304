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
#include <string_view>
#include <vector>

#include "topoinf/filter.hpp"
#include "topoinf/labels.hpp"
#include "topoinf/matrix.hpp"

namespace topoinf::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
};

// Incremental vs. full-recompute TopoInf on 20 seeded Erdős–Rényi graphs
// (n in {20, 50, 100, 200}, mean degree 4-10), every preset, K in {1,2,3},
// tolerance 1e-10; plus locality of every changed I to the K-hop set of the
// removed edge.
std::vector<CheckResult> oracle_suite(const SuiteOptions& opts);

// Triangle fixture regression values.
std::vector<CheckResult> fixture_suite(const SuiteOptions& opts);

// Distance contraction and variance reduction on 10 seeded cSBM samples
// (n = 60, c = 3, p = 0.5, q = 0.1) with SGC, APPNP and S2GC.
std::vector<CheckResult> theorem2_suite(const SuiteOptions& opts);

// Inter- vs intra-community TopoInf on homophilous cSBM plus greedy
// monotonicity.
std::vector<CheckResult> directional_suite(const SuiteOptions& opts);

// Analytic vs central-difference gradients of the pseudo-label trainer on 10
// random instances, relative error < 1e-4.
std::vector<CheckResult> gradient_suite(const SuiteOptions& opts);

// DropEdge and uniform removal sampling frequencies over 10^4 trials.
std::vector<CheckResult> sampler_suite(const SuiteOptions& opts);

// Names accepted by run_suite.
std::vector<std::string_view> suite_names();

// Runs one named suite or "all". Throws ValidationError for unknown names.
std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& opts);

// Max |analytic - numeric| / max(||analytic||_inf, ||numeric||_inf) over W
// and b, with step h.
double gradient_relative_error(const Matrix& features, const LabelData& labels,
                               const Matrix& weights, std::span<const double> bias,
                               double l2_penalty, double h = 1e-5);

}  // namespace topoinf::verify
