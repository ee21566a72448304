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

#include "topoinf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "topoinf/error.hpp"

namespace topoinf {
namespace {

// Splits text into lines with their 1-based numbers, dropping CR, blank
// lines, and comments. Comment lines are reported separately so headers
// such as "# nodes=N" can be recognized.
struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
  bool comment;
  std::string_view raw;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    line = line.substr(first);
    Line l{number, {}, line.front() == '#', line};
    if (!l.comment) {
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) l.tokens.push_back(line.substr(i, j - i));
        i = j;
      }
    }
    out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(tok) + "'", line);
  }
  return value;
}

double parse_real(std::string_view tok, std::size_t line) {
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  return parse_number<double>(tok, line, "real");
}

// Parses "# key=value" headers; returns nullopt for other comments.
std::optional<std::uint64_t> header_value(const Line& l, std::string_view key) {
  std::string_view body = l.raw.substr(1);
  const auto first = body.find_first_not_of(" \t");
  if (first == std::string_view::npos) return std::nullopt;
  body = body.substr(first);
  if (body.substr(0, key.size()) != key || body.size() <= key.size() ||
      body[key.size()] != '=') {
    return std::nullopt;
  }
  std::string_view value = body.substr(key.size() + 1);
  while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) {
    value.remove_suffix(1);
  }
  return parse_number<std::uint64_t>(value, l.number, key.data());
}

NodeId resolve_node(std::string_view tok, std::size_t line, NodeId n, const IdMap* ids) {
  if (ids != nullptr && ids->size() > 0) {
    const NodeId* id = ids->find(std::string(tok));
    if (id == nullptr) {
      throw ValidationError("line " + std::to_string(line) + ": unknown node '" +
                            std::string(tok) + "'");
    }
    return *id;
  }
  const auto v = parse_number<std::uint64_t>(tok, line, "node id");
  if (v >= n) {
    throw ValidationError("line " + std::to_string(line) + ": node " +
                          std::to_string(v) + " out of range for " + std::to_string(n) +
                          " nodes");
  }
  return static_cast<NodeId>(v);
}

}  // namespace

NodeId IdMap::intern(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, static_cast<NodeId>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

const NodeId* IdMap::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &it->second;
}

LoadedGraph load_edge_list(std::string_view text, bool remap_ids) {
  LoadedGraph out;
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any = false;
  for (const Line& l : tokenize(text)) {
    if (l.comment) {
      if (auto n = header_value(l, "nodes")) {
        if (remap_ids) {
          throw ParseError("node-count header cannot be combined with id remapping", l.number);
        }
        declared = *n;
      }
      continue;
    }
    if (l.tokens.size() != 2) {
      throw ParseError("expected 'u v', got " + std::to_string(l.tokens.size()) + " fields",
                       l.number);
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (remap_ids) {
      a = out.ids.intern(std::string(l.tokens[0]));
      b = out.ids.intern(std::string(l.tokens[1]));
    } else {
      a = parse_number<std::uint64_t>(l.tokens[0], l.number, "node id");
      b = parse_number<std::uint64_t>(l.tokens[1], l.number, "node id");
      if (a > std::numeric_limits<NodeId>::max() - 1 ||
          b > std::numeric_limits<NodeId>::max() - 1) {
        throw ValidationError("line " + std::to_string(l.number) + ": node id too large");
      }
    }
    if (a == b) {
      throw ValidationError("self-loop at line " + std::to_string(l.number));
    }
    max_id = std::max({max_id, a, b});
    any = true;
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
  }
  if (!any && !declared) throw ValidationError("edge list is empty");
  std::uint64_t n = remap_ids ? out.ids.size() : (any ? max_id + 1 : 0);
  if (declared) {
    if (any && max_id >= *declared) {
      throw ValidationError("node id " + std::to_string(max_id) + " exceeds declared nodes=" +
                            std::to_string(*declared));
    }
    n = *declared;
  }
  out.graph = Graph::from_edges(static_cast<NodeId>(n), edges);
  return out;
}

LabelData load_labels(std::string_view text, NodeId n, const IdMap* ids) {
  std::optional<std::uint64_t> declared;
  std::vector<ClassId> hard(n, 0);
  std::vector<bool> known(n, false);
  std::uint64_t max_class = 0;
  bool any = false;
  for (const Line& l : tokenize(text)) {
    if (l.comment) {
      if (auto c = header_value(l, "classes")) declared = *c;
      continue;
    }
    if (l.tokens.size() != 2) {
      throw ParseError("expected 'node class', got " + std::to_string(l.tokens.size()) +
                           " fields",
                       l.number);
    }
    const NodeId v = resolve_node(l.tokens[0], l.number, n, ids);
    const auto c = parse_number<std::uint64_t>(l.tokens[1], l.number, "class id");
    if (declared && c >= *declared) {
      throw ValidationError("line " + std::to_string(l.number) + ": class " +
                            std::to_string(c) + " >= declared classes=" +
                            std::to_string(*declared));
    }
    if (known[v] && hard[v] != c) {
      throw ValidationError("line " + std::to_string(l.number) + ": node " +
                            std::to_string(v) + " relabeled");
    }
    hard[v] = static_cast<ClassId>(c);
    known[v] = true;
    max_class = std::max(max_class, c);
    any = true;
  }
  std::uint64_t classes = 0;
  if (declared) {
    classes = *declared;
  } else if (any) {
    classes = max_class + 1;
  } else {
    throw ValidationError("label file has no labels and no '# classes=c' header");
  }
  return LabelData(static_cast<ClassId>(classes), std::move(hard), std::move(known));
}

Matrix load_soft_labels(std::string_view text, NodeId n, ClassId classes, const IdMap* ids) {
  Matrix m(n, classes);
  std::vector<bool> seen(n, false);
  for (const Line& l : tokenize(text)) {
    if (l.comment) continue;
    if (l.tokens.size() != static_cast<std::size_t>(classes) + 1) {
      throw ParseError("expected node and " + std::to_string(classes) + " probabilities",
                       l.number);
    }
    const NodeId v = resolve_node(l.tokens[0], l.number, n, ids);
    double sum = 0.0;
    for (ClassId c = 0; c < classes; ++c) {
      m(v, c) = parse_real(l.tokens[c + 1], l.number);
      if (!(m(v, c) >= 0.0)) throw ParseError("negative probability", l.number);
      sum += m(v, c);
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("soft-label row at line " + std::to_string(l.number) +
                            " sums to " + format_number(sum));
    }
    seen[v] = true;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!seen[v]) throw ValidationError("soft labels missing node " + std::to_string(v));
  }
  return m;
}

Matrix load_features(std::string_view text, NodeId n) {
  std::vector<std::vector<double>> rows;
  for (const Line& l : tokenize(text)) {
    if (l.comment) continue;
    std::vector<double> row;
    row.reserve(l.tokens.size());
    for (auto tok : l.tokens) row.push_back(parse_real(tok, l.number));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("feature row has " + std::to_string(row.size()) +
                           " columns, expected " + std::to_string(rows.front().size()),
                       l.number);
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    throw ValidationError("feature file has " + std::to_string(rows.size()) +
                          " rows for " + std::to_string(n) + " nodes");
  }
  Matrix m(n, rows.empty() ? 0 : rows.front().size());
  for (NodeId v = 0; v < n; ++v) {
    std::copy(rows[v].begin(), rows[v].end(), m.row(v).begin());
  }
  return m;
}

NodeSet load_node_set(std::string_view text, NodeId n, const IdMap* ids) {
  std::vector<NodeId> out;
  for (const Line& l : tokenize(text)) {
    if (l.comment) continue;
    for (auto tok : l.tokens) out.push_back(resolve_node(tok, l.number, n, ids));
  }
  return NodeSet(std::move(out));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  (void)ec;
  return std::string(buf, ptr);
}

double round_to_output(double x) {
  if (!std::isfinite(x)) return x;
  const std::string s = format_number(x);
  double y = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), y);
  return y;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# nodes=" << g.node_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_labels(const LabelData& labels) {
  std::ostringstream out;
  out << "# classes=" << labels.classes() << '\n';
  for (NodeId v = 0; v < labels.node_count(); ++v) {
    if (labels.known(v)) out << v << ' ' << labels.label(v) << '\n';
  }
  return out.str();
}

std::string write_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_number(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace topoinf
