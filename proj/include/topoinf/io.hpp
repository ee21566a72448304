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

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "topoinf/graph.hpp"
#include "topoinf/labels.hpp"
#include "topoinf/matrix.hpp"

namespace topoinf {

// Mapping between arbitrary string node names and dense ids, built in order
// of first appearance.
class IdMap {
 public:
  NodeId intern(const std::string& name);
  const NodeId* find(const std::string& name) const;
  std::span<const std::string> names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

struct LoadedGraph {
  Graph graph;
  // Populated only when ids were remapped.
  IdMap ids;
};

// Edge-list text: one "u v" pair per line, '#' comment lines, LF or CRLF.
// A "# nodes=N" comment fixes the node count; otherwise n = max id + 1.
// With remap_ids, tokens are arbitrary names mapped to dense ids.
LoadedGraph load_edge_list(std::string_view text, bool remap_ids = false);

// Label text: "node class" per line with an optional "# classes=c" header.
// Unlisted nodes are unknown. Pass `ids` when the graph was remapped.
LabelData load_labels(std::string_view text, NodeId n, const IdMap* ids = nullptr);

// "node p_0 ... p_{c-1}" per line covering every node.
Matrix load_soft_labels(std::string_view text, NodeId n, ClassId classes,
                        const IdMap* ids = nullptr);

// One whitespace-separated row of reals per node.
Matrix load_features(std::string_view text, NodeId n);

// Whitespace-separated node ids.
NodeSet load_node_set(std::string_view text, NodeId n, const IdMap* ids = nullptr);

// 12 significant digits, '.' separator, "inf"/"-inf"/"nan" for non-finite.
std::string format_number(double x);
// Value that format_number would print, parsed back.
double round_to_output(double x);

std::string write_edge_list(const Graph& g);
std::string write_labels(const LabelData& labels);
std::string write_matrix(const Matrix& m);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace topoinf
