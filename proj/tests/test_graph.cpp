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
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "topoinf/error.hpp"
#include "topoinf/io.hpp"

using namespace topoinf;
using namespace topoinf::testing;

TEST_SUITE("graph") {
  TEST_CASE("edge list parses pairs into canonical edges") {
    const Graph g = load_edge_list("0 1\n1 2").graph;
    CHECK(g.node_count() == 3);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{1, 2});
  }

  TEST_CASE("reversed duplicate collapses to one edge") {
    const Graph g = load_edge_list("0 1\n1 0").graph;
    CHECK(g.node_count() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0) == Edge{0, 1});
  }

  TEST_CASE("self-loop is a validation error naming the line") {
    CHECK_THROWS_WITH_AS(load_edge_list("0 0"), "self-loop at line 1", ValidationError);
    CHECK_THROWS_WITH_AS(load_edge_list("0 1\n# c\n2 2\n"), "self-loop at line 3",
                         ValidationError);
  }

  TEST_CASE("malformed lines report their line number") {
    try {
      load_edge_list("0 1\n1 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(load_edge_list("-1 2\n"), ParseError);
  }

  TEST_CASE("node-count header, comments and CRLF") {
    const Graph g = load_edge_list("# nodes=5\r\n# comment\r\n0 1\r\n\r\n3 1\r\n").graph;
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(4) == 0);
    CHECK_THROWS_AS(load_edge_list("# nodes=2\n0 5\n"), ValidationError);
    CHECK(load_edge_list("# nodes=3\n").graph.edge_count() == 0);
    CHECK_THROWS_AS(load_edge_list(""), ValidationError);
  }

  TEST_CASE("string ids are remapped in order of appearance") {
    const LoadedGraph lg = load_edge_list("alice bob\nbob carol\n", true);
    CHECK(lg.graph.node_count() == 3);
    CHECK(lg.ids.names()[2] == "carol");
    REQUIRE(lg.ids.find("bob") != nullptr);
    CHECK(*lg.ids.find("bob") == 1);
  }

  TEST_CASE("adjacency is symmetric and degrees match") {
    const Graph g = erdos_renyi(60, 0.1, 5);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      degree_sum += g.degree(v);
      CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
      for (NodeId w : g.neighbors(v)) {
        CHECK(w != v);
        const auto back = g.neighbors(w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }

  TEST_CASE("normalized adjacency examples") {
    const NormalizedAdjacency single(make_graph(1, {}));
    CHECK(single.at(0, 0) == 1.0);

    const NormalizedAdjacency pair(make_graph(2, {{0, 1}}));
    for (NodeId r = 0; r < 2; ++r) {
      for (NodeId c = 0; c < 2; ++c) CHECK(pair.at(r, c) == doctest::Approx(0.5).epsilon(1e-15));
    }

    const NormalizedAdjacency tri(triangle());
    for (NodeId r = 0; r < 3; ++r) {
      for (NodeId c = 0; c < 3; ++c) {
        CHECK(tri.at(r, c) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("normalized adjacency is bitwise symmetric with the augmented pattern") {
    const Graph g = erdos_renyi(80, 0.08, 11);
    const NormalizedAdjacency adj(g);
    for (NodeId r = 0; r < g.node_count(); ++r) {
      const auto cols = adj.columns(r);
      const auto vals = adj.values(r);
      CHECK(cols.size() == g.degree(r) + 1);
      CHECK(std::is_sorted(cols.begin(), cols.end()));
      for (std::size_t i = 0; i < cols.size(); ++i) {
        CHECK(vals[i] > 0.0);
        CHECK(vals[i] == adj.at(cols[i], r));
      }
    }
  }

  TEST_CASE("khop examples") {
    const Graph p = path(4);
    CHECK(khop_set(p, NodeSet({0}), 0) == NodeSet({0}));
    CHECK(khop_set(p, NodeSet({0}), 2) == NodeSet({0, 1, 2}));
    CHECK(khop_set(triangle(), NodeSet({0}), 5) == NodeSet({0, 1, 2}));
  }

  TEST_CASE("khop is monotone in k") {
    const Graph g = erdos_renyi(100, 0.03, 2);
    NodeSet prev = khop_set(g, NodeSet({7}), 0);
    for (unsigned k = 1; k <= 6; ++k) {
      const NodeSet next = khop_set(g, NodeSet({7}), k);
      CHECK(std::includes(next.begin(), next.end(), prev.begin(), prev.end()));
      prev = next;
    }
  }

  TEST_CASE("remove_edge examples") {
    const Graph tri = triangle();
    const Graph p = remove_edge(tri, *tri.find_edge(0, 2));
    CHECK(p.edge_count() == 2);
    CHECK(!p.find_edge(0, 2));
    CHECK(tri.edge_count() == 3);
    CHECK(p.degree(0) == tri.degree(0) - 1);
    CHECK(p.degree(2) == tri.degree(2) - 1);

    const Graph isolated = remove_edge(make_graph(2, {{0, 1}}), 0);
    CHECK(isolated.edge_count() == 0);
    CHECK(isolated.degree(0) == 0);
    CHECK(isolated.degree(1) == 0);

    CHECK_THROWS_AS(remove_edge(tri, 3), std::out_of_range);
  }

  TEST_CASE("removing then re-adding reproduces the canonical edge list") {
    const Graph g = erdos_renyi(40, 0.2, 9);
    for (EdgeId e = 0; e < g.edge_count(); e += 7) {
      const Graph back = add_edge(remove_edge(g, e), g.edge(e));
      CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(),
                       g.edges().end()));
      CHECK(std::equal(back.offsets().begin(), back.offsets().end(), g.offsets().begin(),
                       g.offsets().end()));
    }
  }

  TEST_CASE("construction rejects bad edges") {
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), ValidationError);
    const Edge outside[] = {{0, 2}};
    CHECK_THROWS_AS(Graph::from_edges(2, outside), ValidationError);
  }
}

TEST_SUITE("io") {
  TEST_CASE("label file examples") {
    const LabelData l = load_labels("0 0\n1 0\n2 1", 3);
    CHECK(l.classes() == 2);
    CHECK(l.fully_labeled());
    CHECK(l.label(2) == 1);

    const LabelData empty = load_labels("# classes=4\n", 3);
    CHECK(empty.classes() == 4);
    CHECK(empty.known_count() == 0);
    CHECK_THROWS_AS(load_labels("", 3), ValidationError);

    CHECK_THROWS_AS(load_labels("# classes=2\n0 5\n", 3), ValidationError);
    CHECK_THROWS_AS(load_labels("0 0\n0 1\n", 3), ValidationError);
    CHECK_THROWS_AS(load_labels("7 0\n", 3), ValidationError);
  }

  TEST_CASE("unlisted nodes stay unknown") {
    const LabelData l = load_labels("# classes=3\n1 2\n", 4);
    CHECK(!l.known(0));
    CHECK(l.known(1));
    CHECK(l.known_count() == 1);
    CHECK_THROWS(l.label(0));
    const Matrix onehot = l.one_hot();
    CHECK(onehot(0, 0) == 0.0);
    CHECK(onehot(1, 2) == 1.0);
  }

  TEST_CASE("soft labels must be row-stochastic") {
    LabelData l = LabelData::from_labels(2, {0, 1});
    CHECK_NOTHROW(l.set_soft(load_soft_labels("0 0.25 0.75\n1 1 0\n", 2, 2)));
    CHECK_THROWS_AS(load_soft_labels("0 0.5 0.6\n1 1 0\n", 2, 2), ValidationError);
  }

  TEST_CASE("numbers print with 12 significant digits") {
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_number(123456789.123456789) == "123456789.123");
  }

  TEST_CASE("edge list round trip") {
    const Graph g = erdos_renyi(30, 0.2, 4);
    const Graph back = load_edge_list(write_edge_list(g)).graph;
    CHECK(back.node_count() == g.node_count());
    CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin(),
                     g.edges().end()));
  }

  TEST_CASE("features need one row per node") {
    const Matrix x = load_features("1 2\n3 4\n", 2);
    CHECK(x(1, 0) == 3.0);
    CHECK_THROWS_AS(load_features("1 2\n", 2), ValidationError);
    CHECK_THROWS_AS(load_features("1 2\n3\n", 2), ParseError);
  }
}
