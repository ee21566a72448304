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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "topoinf/io.hpp"

namespace fs = std::filesystem;
using topoinf::read_file;
using topoinf::write_file;

namespace {

class Workdir {
 public:
  Workdir() : dir_(fs::temp_directory_path() / ("topoinf_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write_file(dir_ / "tri.edges", "0 1\n0 2\n1 2\n");
    write_file(dir_ / "tri.labels", "0 0\n1 0\n2 1\n");
    write_file(dir_ / "tri.partial", "# classes=2\n0 0\n2 1\n");
    write_file(dir_ / "one.target", "2\n");
    write_file(dir_ / "empty.edges", "# nodes=3\n");
    write_file(dir_ / "bad.edges", "0 1\n1\n");
  }
  ~Workdir() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

// Runs the CLI with `args`, capturing stdout into `out`; returns the exit code.
int run(const Workdir& w, const std::string& args, std::string* out = nullptr) {
  const std::string capture = w.path("stdout.txt");
  const std::string cmd = std::string(TOPOINF_CLI_PATH) + " " + args + " > " + capture +
                          " 2> " + w.path("stderr.txt");
  const int status = std::system(cmd.c_str());
  if (out) *out = read_file(capture);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::vector<std::string>> tsv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string tri_args(const Workdir& w) {
  return "--graph " + w.path("tri.edges") + " --labels " + w.path("tri.labels") +
         " --model custom --gamma 0,1";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze reports the triangle compatibility") {
    Workdir w;
    std::string out;
    REQUIRE(run(w, "analyze " + tri_args(w), &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(std::abs(doc["C"].get<double>() - 5.0 / 3.0) <= 1e-9);
    CHECK(doc["manifest"]["command"] == "analyze");
    CHECK(doc["manifest"]["inputs"]["graph"]["sha256"].get<std::string>().size() == 64);
  }

  TEST_CASE("analyze on a single target node") {
    Workdir w;
    std::string out;
    REQUIRE(run(w, "analyze " + tri_args(w) + " --lambda 0.1 --target " + w.path("one.target"),
                &out) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["C"].get<double>() == doctest::Approx(1.0 / 3.0 - 0.05).epsilon(1e-11));
    CHECK(doc["nodes"].size() == 1);
  }

  TEST_CASE("missing or partial labels exit with a validation error") {
    Workdir w;
    CHECK(run(w, "analyze --graph " + w.path("tri.edges") + " --labels " + w.path("nope")) == 2);
    const std::string out_path = w.path("should_not_exist.json");
    CHECK(run(w, "analyze --graph " + w.path("tri.edges") + " --labels " + w.path("tri.partial") +
                     " --out " + out_path) == 2);
    CHECK(!fs::exists(out_path));
    CHECK(read_file(w.path("stderr.txt")).find("pseudo") != std::string::npos);
    CHECK(run(w, "score --graph " + w.path("bad.edges") + " --labels " + w.path("tri.labels")) ==
          2);
    CHECK(run(w, "analyze " + tri_args(w) + " --model nonsense") == 2);
    CHECK(run(w, "frobnicate") == 2);
  }

  TEST_CASE("score modes agree") {
    Workdir w;
    std::string exact;
    std::string incremental;
    REQUIRE(run(w, "score --mode exact " + tri_args(w), &exact) == 0);
    REQUIRE(run(w, "score --mode incremental " + tri_args(w), &incremental) == 0);
    const auto a = tsv_rows(exact);
    const auto b = tsv_rows(incremental);
    REQUIRE(a.size() == 4);
    REQUIRE(b.size() == 4);
    CHECK(a[0] == std::vector<std::string>{"edge_u", "edge_v", "topoinf", "sign", "affected_nodes"});
    for (std::size_t i = 1; i < a.size(); ++i) {
      CHECK(a[i][0] == b[i][0]);
      CHECK(a[i][1] == b[i][1]);
      CHECK(std::abs(std::stod(a[i][2]) - std::stod(b[i][2])) <= 1e-10);
      CHECK(a[i][3] == b[i][3]);
    }
    CHECK(a[1][0] == "0");
    CHECK(a[1][1] == "2");
    CHECK(a[1][3] == "positive");
  }

  TEST_CASE("score writes JSON metadata") {
    Workdir w;
    const std::string json_path = w.path("scores.json");
    REQUIRE(run(w, "score " + tri_args(w) + " --lambda 0.1 --json " + json_path) == 0);
    const auto doc = nlohmann::json::parse(read_file(json_path));
    CHECK(doc["metadata"]["preset"] == "custom");
    CHECK(doc["metadata"]["K"] == 1);
    CHECK(doc["metadata"]["lambda"] == 0.1);
    CHECK(doc["metadata"]["target_hash"].get<std::string>().size() == 16);
    CHECK(doc["scores"].size() == 3);
  }

  TEST_CASE("empty-edge graph gives an empty score table") {
    Workdir w;
    std::string out;
    REQUIRE(run(w, "score --graph " + w.path("empty.edges") + " --labels " + w.path("tri.labels"),
                &out) == 0);
    CHECK(tsv_rows(out).size() == 1);
  }

  TEST_CASE("random rewiring is reproducible") {
    Workdir w;
    std::string a;
    std::string b;
    const std::string args = "rewire --graph " + w.path("tri.edges") +
                             " --strategy random --ratio 0.34 --seed 5 --lambda 0";
    REQUIRE(run(w, args, &a) == 0);
    REQUIRE(run(w, args, &b) == 0);
    CHECK(a == b);
    const auto g = topoinf::load_edge_list(a).graph;
    CHECK(g.edge_count() == 2);
    CHECK(g.node_count() == 3);
  }

  TEST_CASE("greedy rewiring trace never decreases C") {
    Workdir w;
    REQUIRE(run(w, "gen-csbm --n 60 --c 2 --p 0.3 --q 0.1 --d 4 --seed 3 --out-dir " +
                       w.path("g")) == 0);
    const std::string trace = w.path("trace.tsv");
    REQUIRE(run(w, "rewire --graph " + w.path("g/graph.edges") + " --labels " +
                       w.path("g/labels.txt") +
                       " --strategy topoinf --set positive --greedy --ratio 0.05 --lambda 0 "
                       "--out " + w.path("r.edges") + " --trace " + trace) == 0);
    const auto rows = tsv_rows(read_file(trace));
    REQUIRE(rows.size() > 2);
    double prev = -1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double c = std::stod(rows[i][4]);
      CHECK(c >= prev);
      prev = c;
    }
  }

  TEST_CASE("adaedge without labels is a validation error") {
    Workdir w;
    CHECK(run(w, "rewire --graph " + w.path("tri.edges") +
                     " --strategy adaedge --ratio 0.3 --lambda 0") == 2);
    CHECK(run(w, "rewire --graph " + w.path("tri.edges") + " --strategy random --ratio 0.3") == 2);
  }

  TEST_CASE("dropedge outputs") {
    Workdir w;
    const std::string dir = w.path("drop0");
    REQUIRE(run(w, "dropedge " + tri_args(w) + " --lambda 0 --drop-rate 0.34 --out-dir " + dir) ==
            0);
    CHECK(fs::exists(dir + "/distribution.tsv"));
    CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);

    // The identity filter scores every edge zero, so the distribution is uniform.
    const std::string uni = w.path("uniform");
    REQUIRE(run(w, "dropedge --graph " + w.path("tri.edges") + " --labels " +
                       w.path("tri.labels") +
                       " --model custom --gamma 1 --lambda 0 --drop-rate 0.34 --emit-epochs 3 "
                       "--seed 4 --out-dir " + uni) == 0);
    const auto rows = tsv_rows(read_file(uni + "/distribution.tsv"));
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(std::stod(rows[i][3]) == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    }
    CHECK(fs::exists(uni + "/epoch_0002.edges"));
    CHECK(topoinf::load_edge_list(read_file(uni + "/epoch_0000.edges")).graph.edge_count() == 2);

    const std::string again = w.path("again");
    REQUIRE(run(w, "dropedge --graph " + w.path("tri.edges") + " --labels " +
                       w.path("tri.labels") +
                       " --model custom --gamma 1 --lambda 0 --drop-rate 0.34 --emit-epochs 3 "
                       "--seed 4 --out-dir " + again) == 0);
    for (const char* f : {"/epoch_0000.edges", "/epoch_0001.edges", "/epoch_0002.edges"}) {
      const auto strip = [](std::string s) { return s.substr(s.find('\n')); };
      CHECK(strip(read_file(uni + f)) == strip(read_file(again + f)));
    }
  }

  TEST_CASE("gen-csbm examples") {
    Workdir w;
    REQUIRE(run(w, "gen-csbm --n 12 --c 2 --p 1 --q 0 --d 3 --seed 1 --out-dir " + w.path("c")) ==
            0);
    const auto g = topoinf::load_edge_list(read_file(w.path("c/graph.edges"))).graph;
    CHECK(g.edge_count() == 2 * 15);

    REQUIRE(run(w, "gen-csbm --n 12 --c 3 --p 0.5 --q 0.1 --d 4 --sigma 0 --seed 1 --out-dir " +
                       w.path("s")) == 0);
    const auto features = topoinf::load_features(read_file(w.path("s/features.txt")), 12);
    const auto centers = topoinf::load_features(read_file(w.path("s/centers.txt")), 3);
    const auto labels = topoinf::load_labels(read_file(w.path("s/labels.txt")), 12);
    for (topoinf::NodeId v = 0; v < 12; ++v) {
      for (std::size_t j = 0; j < 4; ++j) CHECK(features(v, j) == centers(labels.label(v), j));
    }

    REQUIRE(run(w, "gen-csbm --preset cora-like --intra-fraction 0.8 --d 8 --out-dir " +
                       w.path("cora")) == 2);
    REQUIRE(run(w, "gen-csbm --preset cora-like --intra-fraction 0.8 --seed 2 --out-dir " +
                       w.path("cora")) == 0);
    const auto doc = nlohmann::json::parse(read_file(w.path("cora/manifest.json")));
    CHECK(doc["parameters"]["n"] == 2708);
    CHECK(doc["parameters"]["d"] == 1433);
    const double edges = doc["edges"].get<double>();
    CHECK(std::abs(edges - 5278.0) <= 4 * std::sqrt(5278.0));
  }

  TEST_CASE("pseudo labels feed back into analysis") {
    Workdir w;
    REQUIRE(run(w, "gen-csbm --n 60 --c 2 --p 0.3 --q 0.05 --d 4 --sigma 0.5 --seed 3 --out-dir " +
                       w.path("g")) == 0);
    // Keep every third label.
    std::istringstream in(read_file(w.path("g/labels.txt")));
    std::string line;
    std::string partial;
    int i = 0;
    while (std::getline(in, line)) {
      if (line.rfind("# classes", 0) == 0) partial += line + "\n";
      if (line.empty() || line[0] == '#') continue;
      if (i++ % 3 == 0) partial += line + "\n";
    }
    write_file(w.path("partial.txt"), partial);
    const std::string base = "--graph " + w.path("g/graph.edges");
    CHECK(run(w, "analyze " + base + " --labels " + w.path("partial.txt")) == 2);
    REQUIRE(run(w, "pseudo " + base + " --labels " + w.path("partial.txt") + " --features " +
                       w.path("g/features.txt") + " --out " + w.path("pseudo.txt") +
                       " --soft-out " + w.path("soft.tsv")) == 0);
    CHECK(run(w, "analyze " + base + " --labels " + w.path("pseudo.txt")) == 0);
    CHECK(run(w, "analyze " + base + " --labels " + w.path("pseudo.txt") + " --soft-labels " +
                     w.path("soft.tsv") + " --similarity soft") == 0);
  }

  TEST_CASE("verify exit codes") {
    Workdir w;
    CHECK(run(w, "verify --suite fixtures") == 0);
    CHECK(run(w, "verify --suite unknown") == 2);
  }
}
