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

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "topoinf/error.hpp"
#include "topoinf/rewire.hpp"
#include "topoinf/topoinf.hpp"

using namespace topoinf;
using namespace topoinf::testing;

namespace {

std::vector<TopoInfScore> scores_of(std::vector<double> values) {
  std::vector<TopoInfScore> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back({static_cast<EdgeId>(i), values[i], 0, classify(values[i])});
  }
  return out;
}

ScoreTable triangle_table() {
  return score_all_edges(triangle(), triangle_labels(),
                         {gamma_filter({0, 1}), NodeSet::all(3), 0.0, Similarity::kHard});
}

}  // namespace

TEST_SUITE("rewire") {
  TEST_CASE("removal count rounds down") {
    CHECK(removal_count(0.0, 10) == 0);
    CHECK(removal_count(0.3, 10) == 3);
    CHECK(removal_count(1.0 / 3.0, 3) == 1);
    CHECK(removal_count(0.29, 10) == 2);
    CHECK(removal_count(1.0, 7) == 7);
    CHECK_THROWS_AS(removal_count(1.5, 10), ValidationError);
    CHECK_THROWS_AS(removal_count(-0.1, 10), ValidationError);
  }

  TEST_CASE("topoinf removal examples") {
    const ScoreTable t = triangle_table();
    const EdgeSelection one = remove_by_topoinf(t.ranked, 3, {Strategy::kTopoInf, EdgeSet::kPositive, 1.0 / 3.0, 0});
    CHECK(one.edges == std::vector<EdgeId>{1});
    CHECK(remove_by_topoinf(t.ranked, 3, {Strategy::kTopoInf, EdgeSet::kPositive, 0.0, 0}).edges.empty());
    const EdgeSelection neg = remove_by_topoinf(t.ranked, 3, {Strategy::kTopoInf, EdgeSet::kNegative, 1.0 / 3.0, 0});
    CHECK(neg.edges == std::vector<EdgeId>{0});

    const auto zeros = scores_of({0, 0, 0, 0});
    const EdgeSelection empty = remove_by_topoinf(zeros, 4, {Strategy::kTopoInf, EdgeSet::kPositive, 0.5, 0});
    CHECK(empty.edges.empty());
    CHECK(!empty.warnings.empty());
  }

  TEST_CASE("topoinf removal orders by magnitude and truncates with a warning") {
    const auto s = scores_of({0.1, -0.5, 0.3, -0.2, 0.3, -std::numeric_limits<double>::infinity()});
    const EdgeSelection pos = remove_by_topoinf(s, 6, {Strategy::kTopoInf, EdgeSet::kPositive, 0.5, 0});
    CHECK(pos.edges == std::vector<EdgeId>{2, 4, 0});
    CHECK(pos.warnings.empty());
    const EdgeSelection neg = remove_by_topoinf(s, 6, {Strategy::kTopoInf, EdgeSet::kNegative, 1.0, 0});
    CHECK(neg.edges == std::vector<EdgeId>{1, 3});
    CHECK(!neg.warnings.empty());
  }

  TEST_CASE("random removal") {
    const Graph g = erdos_renyi(40, 0.2, 2);
    CHECK(remove_random(g, 1.0, 5).size() == g.edge_count());
    const auto a = remove_random(g, 0.1, 42);
    const auto b = remove_random(g, 0.1, 42);
    CHECK(a == b);
    CHECK(a.size() == removal_count(0.1, g.edge_count()));
    CHECK(std::set<EdgeId>(a.begin(), a.end()).size() == a.size());
    CHECK(remove_random(g, 0.1, 43) != a);
  }

  TEST_CASE("random removal is uniform") {
    const Graph g = path(11);
    std::vector<int> hits(10, 0);
    constexpr int kTrials = 10000;
    for (int t = 0; t < kTrials; ++t) {
      for (EdgeId e : remove_random(g, 0.3, 1000 + t)) ++hits[e];
    }
    for (int h : hits) CHECK(std::abs(h / double(kTrials) - 0.3) <= 0.02);
  }

  TEST_CASE("adaedge partition examples") {
    const AdaEdgePartition p = adaedge_partition(triangle(), triangle_labels());
    CHECK(p.same_label == std::vector<EdgeId>{0});
    CHECK(p.diff_label == std::vector<EdgeId>{1, 2});
    CHECK(p.unassigned.empty());

    const AdaEdgePartition same = adaedge_partition(triangle(), LabelData::from_labels(1, {0, 0, 0}));
    CHECK(same.diff_label.empty());

    const LabelData none(2, {0, 0, 0}, {false, false, false});
    const AdaEdgePartition u = adaedge_partition(triangle(), none);
    CHECK(u.same_label.empty());
    CHECK(u.diff_label.empty());
    CHECK(u.unassigned.size() == 3);
  }

  TEST_CASE("adaedge removal samples inside the chosen set") {
    const Graph g = erdos_renyi(50, 0.2, 8);
    const LabelData labels = random_labels(50, 2, 8);
    const AdaEdgePartition p = adaedge_partition(g, labels);
    const EdgeSelection sel = remove_adaedge(g, labels, {Strategy::kAdaEdge, EdgeSet::kPositive, 0.1, 3});
    CHECK(sel.edges.size() == removal_count(0.1, g.edge_count()));
    for (EdgeId e : sel.edges) {
      CHECK(std::binary_search(p.diff_label.begin(), p.diff_label.end(), e));
    }
    const EdgeSelection neg = remove_adaedge(g, labels, {Strategy::kAdaEdge, EdgeSet::kNegative, 0.1, 3});
    for (EdgeId e : neg.edges) {
      CHECK(std::binary_search(p.same_label.begin(), p.same_label.end(), e));
    }
  }

  TEST_CASE("dropedge weights examples") {
    const auto equal = dropedge_weights(scores_of({0.3, 0.3, 0.3, 0.3}), 1.0);
    for (double p : equal.probability) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));

    const auto two = dropedge_weights(scores_of({std::log(2.0), 0.0}), 1.0);
    CHECK(two.probability[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(two.probability[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const auto hot = dropedge_weights(scores_of({1.0, -2.0, 0.5}), 1e6);
    for (double p : hot.probability) CHECK(std::abs(p - 1.0 / 3.0) <= 1e-5);
  }

  TEST_CASE("dropedge weights are shift invariant and exclude sentinels") {
    const std::vector<double> base = {0.4, -1.3, 2.2, 0.0, -0.7};
    std::vector<double> shifted = base;
    for (double& x : shifted) x += 123.25;
    const auto a = dropedge_weights(scores_of(base), 0.75);
    const auto b = dropedge_weights(scores_of(shifted), 0.75);
    double total = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(std::abs(a.probability[i] - b.probability[i]) <= 1e-12);
      total += a.probability[i];
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);

    const double inf = std::numeric_limits<double>::infinity();
    const auto ex = dropedge_weights(scores_of({0.5, -inf, 0.5}), 1.0);
    CHECK(ex.probability[1] == 0.0);
    CHECK(ex.support == 2);
    CHECK_THROWS_AS(dropedge_weights(scores_of({-inf, -inf}), 1.0), ValidationError);
    CHECK_THROWS_AS(dropedge_weights(scores_of({0.1}), 0.0), ValidationError);
  }

  TEST_CASE("dropedge sampling") {
    const auto dist = dropedge_weights(scores_of({0.2, -0.1, 0.4, 0.0}), 1.0);
    CHECK(sample_dropedge(dist, 0.0, 1).empty());
    auto all = sample_dropedge(dist, 1.0, 1);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<EdgeId>{0, 1, 2, 3});
    CHECK(sample_dropedge(dist, 0.5, 99) == sample_dropedge(dist, 0.5, 99));

    const double inf = std::numeric_limits<double>::infinity();
    const auto ex = dropedge_weights(scores_of({0.1, -inf, 0.3}), 1.0);
    auto kept = sample_dropedge(ex, 1.0, 4);
    std::sort(kept.begin(), kept.end());
    CHECK(kept == std::vector<EdgeId>{0, 2});
  }

  TEST_CASE("single draws follow the probabilities") {
    const auto dist = dropedge_weights(scores_of({std::log(9.0), 0.0}), 1.0);
    CHECK(dist.probability[0] == doctest::Approx(0.9));
    int first = 0;
    constexpr int kTrials = 10000;
    for (int t = 0; t < kTrials; ++t) {
      const auto drawn = sample_dropedge(dist, 0.5, epoch_seed(7, t));
      REQUIRE(drawn.size() == 1);
      first += drawn[0] == 0;
    }
    CHECK(std::abs(first / double(kTrials) - 0.9) <= 0.02);
  }

  TEST_CASE("parsers") {
    CHECK(parse_strategy("adaedge") == Strategy::kAdaEdge);
    CHECK(parse_edge_set("negative") == EdgeSet::kNegative);
    CHECK_THROWS_AS(parse_strategy("greedy"), ValidationError);
    CHECK(epoch_seed(1, 2) != epoch_seed(1, 3));
    CHECK(epoch_seed(1, 2) == epoch_seed(1, 2));
  }
}
