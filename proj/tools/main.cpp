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

// Command-line front end: analyze, score, rewire, dropedge, gen-csbm,
// pseudo and verify.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "topoinf/compat.hpp"
#include "topoinf/csbm.hpp"
#include "topoinf/error.hpp"
#include "topoinf/filter.hpp"
#include "topoinf/io.hpp"
#include "topoinf/parallel.hpp"
#include "topoinf/pseudo.hpp"
#include "topoinf/rewire.hpp"
#include "topoinf/topoinf.hpp"
#include "topoinf/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace topoinf::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

struct InputFlags {
  std::string graph;
  std::string labels;
  std::string soft_labels;
  std::string target;
  std::string similarity = "hard";
  bool remap_ids = false;
};

struct FilterFlags {
  std::string model = "sgc";
  unsigned k = 2;
  double alpha = 0.1;
  std::string gamma;
};

struct Dataset {
  LoadedGraph loaded;
  std::optional<LabelData> labels;
  NodeSet target;
  Similarity similarity = Similarity::kHard;

  const Graph& graph() const { return loaded.graph; }
  const IdMap* ids() const { return loaded.ids.size() ? &loaded.ids : nullptr; }
};

void add_graph_flag(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--graph", f.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--remap-ids", f.remap_ids, "Treat node tokens as names and remap to 0..n-1");
}

void add_label_flags(CLI::App* cmd, InputFlags& f, bool required) {
  auto* opt = cmd->add_option("--labels", f.labels, "Label file ('node class' lines)")
                  ->check(CLI::ExistingFile);
  if (required) opt->required();
  cmd->add_option("--soft-labels", f.soft_labels, "Soft-label TSV (node p_0 ... p_{c-1})")
      ->check(CLI::ExistingFile);
  cmd->add_option("--similarity", f.similarity,
                  "hard: I = filtered mass on the node's class; soft: inner product with the "
                  "soft label row (extension)")
      ->check(CLI::IsMember({"hard", "soft"}));
  cmd->add_option("--target", f.target, "File of target node ids (default: all nodes)")
      ->check(CLI::ExistingFile);
}

void add_filter_flags(CLI::App* cmd, FilterFlags& f) {
  cmd->add_option("--model", f.model, "sgc|s2gc|appnp|gcn|gcnii|gprgnn|custom");
  cmd->add_option("--k", f.k, "Filter order K");
  cmd->add_option("--alpha", f.alpha, "Teleport/residual weight for s2gc, appnp, gcnii");
  cmd->add_option("--gamma", f.gamma, "Comma-separated coefficients for gprgnn/custom");
}

PolynomialFilter build_filter(const FilterFlags& f, const CLI::App& cmd) {
  FilterSpec spec;
  spec.preset = parse_preset(f.model);
  spec.order = f.k;
  spec.alpha = f.alpha;
  if (!f.gamma.empty()) spec.gamma = parse_gamma_list(f.gamma);
  const bool learned = spec.preset == Preset::kGPRGNN || spec.preset == Preset::kCustom;
  if (learned && cmd.count("--k") == 0) spec.order = 0;  // infer from gamma
  return expand_preset(spec);
}

Dataset load_dataset(const InputFlags& f, RunManifest& manifest, bool need_labels) {
  Dataset ds;
  ds.loaded = load_edge_list(read_file(f.graph), f.remap_ids);
  manifest.add_input("graph", f.graph);
  const NodeId n = ds.graph().node_count();
  if (!f.labels.empty()) {
    ds.labels = load_labels(read_file(f.labels), n, ds.ids());
    manifest.add_input("labels", f.labels);
  } else if (need_labels) {
    throw ValidationError("this command requires --labels");
  }
  if (!f.soft_labels.empty()) {
    if (!ds.labels) throw ValidationError("--soft-labels requires --labels");
    ds.labels->set_soft(
        load_soft_labels(read_file(f.soft_labels), n, ds.labels->classes(), ds.ids()));
    manifest.add_input("soft_labels", f.soft_labels);
  }
  ds.similarity = f.similarity == "soft" ? Similarity::kSoft : Similarity::kHard;
  if (ds.similarity == Similarity::kSoft && (!ds.labels || !ds.labels->soft())) {
    throw ValidationError("--similarity soft requires --soft-labels");
  }
  if (ds.labels && ds.similarity == Similarity::kHard && !ds.labels->fully_labeled()) {
    throw ValidationError(std::to_string(n - ds.labels->known_count()) +
                          " node(s) have no label; fill them with `topoinf pseudo` first");
  }
  if (!f.target.empty()) {
    ds.target = load_node_set(read_file(f.target), n, ds.ids());
    manifest.add_input("target", f.target);
  } else {
    ds.target = NodeSet::all(n);
  }
  return ds;
}

std::string target_hash(const NodeSet& target) {
  std::string text;
  for (NodeId v : target) text += std::to_string(v) + "\n";
  return sha256_hex(text).substr(0, 16);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

json number_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return round_to_output(x);
}

std::string node_name(const Dataset& ds, NodeId v) {
  return ds.ids() ? ds.loaded.ids.names()[v] : std::to_string(v);
}

std::string graph_text(const Dataset& ds, const Graph& g, const RunManifest& manifest) {
  std::string out = manifest.comment_line();
  if (!ds.ids()) return out + write_edge_list(g);
  for (const Edge& e : g.edges()) out += node_name(ds, e.u) + " " + node_name(ds, e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeFlags {
  InputFlags in;
  FilterFlags filter;
  double lambda = 0.0;
  std::string out;
};

void run_analyze(const CLI::App& cmd, const AnalyzeFlags& f) {
  RunManifest manifest(cmd, std::nullopt);
  const Dataset ds = load_dataset(f.in, manifest, true);
  const PolynomialFilter pf = build_filter(f.filter, cmd);
  const CompatReport report =
      compatibility(ds.graph(), pf, *ds.labels, ds.target, f.lambda, ds.similarity);
  json doc = to_json(report);
  doc["manifest"] = manifest.json();
  emit(f.out, doc.dump(2) + "\n");
}

// ------------------------------------------------------------------ score

struct ScoreFlags {
  InputFlags in;
  FilterFlags filter;
  double lambda = 0.0;
  std::string mode = "incremental";
  std::string out;
  std::string json_out;
  unsigned threads = 0;
};

std::string score_tsv(const Dataset& ds, const ScoreTable& table, const RunManifest& manifest) {
  std::string out = manifest.comment_line();
  out += "edge_u\tedge_v\ttopoinf\tsign\taffected_nodes\n";
  for (const auto& s : table.ranked) {
    const Edge& e = ds.graph().edge(s.edge);
    out += node_name(ds, e.u) + "\t" + node_name(ds, e.v) + "\t" + format_number(s.value) + "\t" +
           std::string(sign_name(s.sign)) + "\t" + std::to_string(s.affected_nodes) + "\n";
  }
  return out;
}

void run_score(const CLI::App& cmd, const ScoreFlags& f) {
  RunManifest manifest(cmd, std::nullopt);
  const Dataset ds = load_dataset(f.in, manifest, true);
  const PolynomialFilter pf = build_filter(f.filter, cmd);
  const ScoringProblem problem{pf, ds.target, f.lambda, ds.similarity};
  const ScoreMode mode = f.mode == "exact" ? ScoreMode::kExact : ScoreMode::kIncremental;
  const ScoreTable table = score_all_edges(ds.graph(), *ds.labels, problem, {mode, f.threads});

  const std::string tsv = score_tsv(ds, table, manifest);
  std::string json_text;
  if (!f.json_out.empty()) {
    json scores = json::array();
    for (const auto& s : table.ranked) {
      const Edge& e = ds.graph().edge(s.edge);
      scores.push_back({{"edge_u", node_name(ds, e.u)},
                        {"edge_v", node_name(ds, e.v)},
                        {"topoinf", number_json(s.value)},
                        {"sign", sign_name(s.sign)},
                        {"affected_nodes", s.affected_nodes}});
    }
    const json doc{
        {"metadata",
         {{"preset", f.filter.model},
          {"K", pf.order()},
          {"alpha", number_json(f.filter.alpha)},
          {"gamma", pf.coefficients()},
          {"lambda", number_json(f.lambda)},
          {"target_size", ds.target.size()},
          {"target_hash", target_hash(ds.target)},
          {"seed", nullptr},
          {"mode", f.mode},
          {"C", number_json(table.baseline.C)},
          {"counts",
           {{"positive", table.positive},
            {"negative", table.negative},
            {"zero", table.zero},
            {"excluded", table.excluded}}}}},
        {"manifest", manifest.json()},
        {"scores", std::move(scores)}};
    json_text = doc.dump(2) + "\n";
  }
  emit(f.out, tsv);
  if (!f.json_out.empty()) write_file(f.json_out, json_text);
}

// ----------------------------------------------------------------- rewire

struct RewireFlags {
  InputFlags in;
  FilterFlags filter;
  std::string strategy;
  std::string set = "positive";
  double ratio = 0.0;
  std::uint64_t seed = 0;
  bool greedy = false;
  bool batch = false;
  std::size_t rescore_every = 1;
  double lambda = 0.0;
  std::string out;
  std::string trace;
  unsigned threads = 0;
};

void run_rewire(const CLI::App& cmd, const RewireFlags& f) {
  RunManifest manifest(cmd, f.seed);
  const Strategy strategy = parse_strategy(f.strategy);
  const EdgeSet set = parse_edge_set(f.set);
  const bool needs_labels = strategy != Strategy::kRandom;
  if (needs_labels && f.in.labels.empty()) {
    throw ValidationError("--strategy " + f.strategy + " requires --labels");
  }
  if (f.greedy && strategy != Strategy::kTopoInf) {
    throw ValidationError("--greedy applies only to --strategy topoinf");
  }
  if (f.greedy && set != EdgeSet::kPositive) {
    throw ValidationError("--greedy removes positive edges; use --set positive");
  }
  const Dataset ds = load_dataset(f.in, manifest, needs_labels);
  const Graph& g = ds.graph();
  const std::size_t count = removal_count(f.ratio, g.edge_count());
  const RemovalPlan plan{strategy, set, f.ratio, f.seed};

  struct Row {
    Edge edge;
    double score;
    double compat;
  };
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  Graph result;
  std::optional<PolynomialFilter> pf;
  if (ds.labels) pf = build_filter(f.filter, cmd);
  auto compat_of = [&](const Graph& h) {
    return pf ? compatibility(h, *pf, *ds.labels, ds.target, f.lambda, ds.similarity).C
              : std::numeric_limits<double>::quiet_NaN();
  };

  if (strategy == Strategy::kTopoInf && f.greedy) {
    const ScoringProblem problem{*pf, ds.target, f.lambda, ds.similarity};
    const GreedyResult greedy =
        greedy_refine(g, *ds.labels, problem, count, f.rescore_every, f.threads);
    for (const auto& step : greedy.trace) rows.push_back({step.edge, step.score, step.compat_after});
    if (greedy.trace.size() < count) {
      warnings.push_back("stopped after " + std::to_string(greedy.trace.size()) + " of " +
                         std::to_string(count) + " removals: no positive edge remains");
    }
    result = greedy.graph;
  } else {
    std::vector<EdgeId> chosen;
    std::vector<double> scores(g.edge_count(), std::numeric_limits<double>::quiet_NaN());
    if (strategy == Strategy::kTopoInf) {
      const ScoringProblem problem{*pf, ds.target, f.lambda, ds.similarity};
      const ScoreTable table =
          score_all_edges(g, *ds.labels, problem, {ScoreMode::kIncremental, f.threads});
      for (const auto& s : table.ranked) scores[s.edge] = s.value;
      EdgeSelection sel = remove_by_topoinf(table.ranked, g.edge_count(), plan);
      chosen = std::move(sel.edges);
      warnings = std::move(sel.warnings);
    } else if (strategy == Strategy::kRandom) {
      chosen = remove_random(g, f.ratio, f.seed);
    } else {
      EdgeSelection sel = remove_adaedge(g, *ds.labels, plan);
      chosen = std::move(sel.edges);
      warnings = std::move(sel.warnings);
    }
    // Cumulative compatibility after each removal, when labels are known.
    std::vector<EdgeId> prefix;
    for (EdgeId e : chosen) {
      prefix.push_back(e);
      const double c = pf ? compat_of(remove_edges(g, prefix))
                          : std::numeric_limits<double>::quiet_NaN();
      rows.push_back({g.edge(e), scores[e], c});
    }
    result = remove_edges(g, chosen);
  }

  std::string trace = manifest.comment_line();
  trace += "step\tedge_u\tedge_v\ttopoinf\tC_after\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    trace += std::to_string(i + 1) + "\t" + node_name(ds, rows[i].edge.u) + "\t" +
             node_name(ds, rows[i].edge.v) + "\t" + format_number(rows[i].score) + "\t" +
             format_number(rows[i].compat) + "\n";
  }
  const std::string edges = graph_text(ds, result, manifest);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  emit(f.out, edges);
  if (!f.trace.empty()) write_file(f.trace, trace);
}

// --------------------------------------------------------------- dropedge

struct DropEdgeFlags {
  InputFlags in;
  FilterFlags filter;
  double lambda = 0.0;
  double tau = 1.0;
  double drop_rate = 0.0;
  std::size_t epochs = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  unsigned threads = 0;
};

void run_dropedge(const CLI::App& cmd, const DropEdgeFlags& f) {
  RunManifest manifest(cmd, f.seed);
  const Dataset ds = load_dataset(f.in, manifest, true);
  const PolynomialFilter pf = build_filter(f.filter, cmd);
  const Graph& g = ds.graph();
  removal_count(f.drop_rate, g.edge_count());  // validates the rate
  const ScoringProblem problem{pf, ds.target, f.lambda, ds.similarity};
  const ScoreTable table =
      score_all_edges(g, *ds.labels, problem, {ScoreMode::kIncremental, f.threads});
  const std::vector<TopoInfScore> scores = table.by_edge();
  const DropEdgeDistribution dist = dropedge_weights(scores, f.tau);

  std::string tsv = manifest.comment_line();
  tsv +=
      "# sampling: sequential draws without replacement, renormalized after each draw; "
      "inclusion probabilities are not proportional to the weights\n";
  tsv += "u\tv\ttopoinf\tprobability\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    tsv += node_name(ds, ed.u) + "\t" + node_name(ds, ed.v) + "\t" +
           format_number(scores[e].value) + "\t" + format_number(dist.probability[e]) + "\n";
  }
  std::vector<std::string> epoch_files;
  for (std::size_t epoch = 0; epoch < f.epochs; ++epoch) {
    const auto dropped = sample_dropedge(dist, f.drop_rate, epoch_seed(f.seed, epoch));
    epoch_files.push_back(graph_text(ds, remove_edges(g, dropped), manifest));
  }
  const fs::path dir(f.out_dir);
  write_file(dir / "distribution.tsv", tsv);
  for (std::size_t epoch = 0; epoch < epoch_files.size(); ++epoch) {
    char name[32];
    std::snprintf(name, sizeof(name), "epoch_%04zu.edges", epoch);
    write_file(dir / name, epoch_files[epoch]);
  }
}

// --------------------------------------------------------------- gen-csbm

struct CsbmFlags {
  CsbmParams params;
  std::string scheme = "orthogonal_scaled";
  std::string preset;
  double intra_fraction = 0.9;
  std::string out_dir;
};

void run_gen_csbm(const CLI::App& cmd, CsbmFlags f) {
  RunManifest manifest(cmd, f.params.seed);
  CsbmParams params = f.params;
  params.scheme = parse_center_scheme(f.scheme);
  if (!f.preset.empty()) {
    if (f.preset != "cora-like") throw ValidationError("unknown preset '" + f.preset + "'");
    for (const char* flag : {"--n", "--c", "--d", "--p", "--q"}) {
      if (cmd.count(flag) > 0) {
        throw ValidationError(std::string(flag) + " cannot be combined with --preset");
      }
    }
    const CsbmParams cora = cora_like_params(f.intra_fraction, params.sigma, params.seed);
    params.n = cora.n;
    params.c = cora.c;
    params.d = cora.d;
    params.p = cora.p;
    params.q = cora.q;
  }
  const CsbmSample sample = generate_csbm(params);
  json doc{{"manifest", manifest.json()},
           {"parameters",
            {{"n", params.n},
             {"c", params.c},
             {"p", params.p},
             {"q", params.q},
             {"d", params.d},
             {"sigma", params.sigma},
             {"mu_scheme", center_scheme_name(sample.scheme)},
             {"mu_scale", params.mu_scale},
             {"seed", params.seed}}},
           {"edges", sample.graph.edge_count()}};
  if (!f.preset.empty()) {
    doc["preset"] = {{"name", f.preset},
                     {"intra_fraction", f.intra_fraction},
                     {"target_edges", kCoraEdges},
                     {"expected_edges", kCoraEdges}};
  }
  const std::string header = manifest.comment_line();
  const fs::path dir(f.out_dir);
  write_file(dir / "graph.edges", header + write_edge_list(sample.graph));
  write_file(dir / "labels.txt", header + write_labels(sample.labels));
  write_file(dir / "features.txt", header + write_matrix(sample.features));
  write_file(dir / "centers.txt", header + write_matrix(sample.centers));
  write_file(dir / "manifest.json", doc.dump(2) + "\n");
}

// ----------------------------------------------------------------- pseudo

struct PseudoFlags {
  InputFlags in;
  FilterFlags filter;
  std::string features;
  TrainConfig cfg;
  std::string out;
  std::string soft_out;
};

void run_pseudo(const CLI::App& cmd, const PseudoFlags& f) {
  RunManifest manifest(cmd, f.cfg.seed);
  Dataset ds;
  ds.loaded = load_edge_list(read_file(f.in.graph), f.in.remap_ids);
  manifest.add_input("graph", f.in.graph);
  const NodeId n = ds.graph().node_count();
  const LabelData labels = load_labels(read_file(f.in.labels), n, ds.ids());
  manifest.add_input("labels", f.in.labels);
  const Matrix features = load_features(read_file(f.features), n);
  manifest.add_input("features", f.features);
  const PolynomialFilter pf = build_filter(f.filter, cmd);

  const LinearModel model = train_linear_sgc(ds.graph(), pf, features, labels, f.cfg);
  const PseudoLabels pseudo = predict_pseudo(model, ds.graph(), pf, features, labels);

  std::string label_text = manifest.comment_line();
  label_text += "# classes=" + std::to_string(labels.classes()) + "\n";
  std::string soft_text = manifest.comment_line();
  for (NodeId v = 0; v < n; ++v) {
    label_text += node_name(ds, v) + " " + std::to_string(pseudo.hardened[v]) + "\n";
    soft_text += node_name(ds, v);
    for (double p : pseudo.soft.row(v)) soft_text += "\t" + format_number(p);
    soft_text += "\n";
  }
  const json summary{{"initial_loss", number_json(model.loss_trace.front())},
                     {"final_loss", number_json(model.loss_trace.back())},
                     {"epochs", f.cfg.epochs},
                     {"labeled_nodes", labels.known_count()},
                     {"pseudo_labeled_nodes", n - labels.known_count()},
                     {"note", "pseudo labels come from a linear SGC softmax regression"}};
  emit(f.out, label_text);
  if (!f.soft_out.empty()) write_file(f.soft_out, soft_text);
  std::cerr << summary.dump() << "\n";
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& suite, unsigned threads, std::uint64_t seed) {
  verify::SuiteOptions opts;
  opts.threads = resolve_threads(threads);
  opts.seed = seed;
  const auto results = verify::run_suite(suite, opts);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph topology / task compatibility and TopoInf edge scoring"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", TOPOINF_VERSION);

  AnalyzeFlags analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compatibility report C(A) = Σ I - λR");
  add_graph_flag(analyze_cmd, analyze.in);
  add_label_flags(analyze_cmd, analyze.in, true);
  add_filter_flags(analyze_cmd, analyze.filter);
  analyze_cmd->add_option("--lambda", analyze.lambda, "Regularizer weight");
  analyze_cmd->add_option("--out", analyze.out, "Output JSON (default stdout)");

  ScoreFlags score;
  auto* score_cmd = app.add_subcommand("score", "TopoInf of every edge as TSV");
  add_graph_flag(score_cmd, score.in);
  add_label_flags(score_cmd, score.in, true);
  add_filter_flags(score_cmd, score.filter);
  score_cmd->add_option("--lambda", score.lambda, "Regularizer weight");
  score_cmd->add_option("--mode", score.mode, "exact|incremental")
      ->check(CLI::IsMember({"exact", "incremental"}));
  score_cmd->add_option("--out", score.out, "Output TSV (default stdout)");
  score_cmd->add_option("--json", score.json_out, "Also write a JSON report here");
  score_cmd->add_option("--threads", score.threads, "Worker cap (0: $TOPOINF_THREADS or all)");

  RewireFlags rewire;
  auto* rewire_cmd = app.add_subcommand("rewire", "Remove edges by TopoInf, Random or AdaEdge");
  add_graph_flag(rewire_cmd, rewire.in);
  add_label_flags(rewire_cmd, rewire.in, false);
  add_filter_flags(rewire_cmd, rewire.filter);
  rewire_cmd->add_option("--strategy", rewire.strategy, "topoinf|random|adaedge")->required();
  rewire_cmd->add_option("--set", rewire.set, "positive|negative");
  rewire_cmd->add_option("--ratio", rewire.ratio, "Fraction of all edges to remove")->required();
  rewire_cmd->add_option("--seed", rewire.seed, "Sampling seed");
  auto* greedy_flag =
      rewire_cmd->add_flag("--greedy", rewire.greedy, "Sequential removal with rescoring");
  auto* batch_flag =
      rewire_cmd->add_flag("--batch", rewire.batch, "Score once, remove top edges (default)");
  greedy_flag->excludes(batch_flag);
  rewire_cmd->add_option("--rescore-every", rewire.rescore_every,
                         "Greedy: rescore after this many removals");
  rewire_cmd->add_option("--lambda", rewire.lambda, "Regularizer weight")->required();
  rewire_cmd->add_option("--out", rewire.out, "Rewired edge list (default stdout)");
  rewire_cmd->add_option("--trace", rewire.trace, "Removal trace TSV");
  rewire_cmd->add_option("--threads", rewire.threads, "Worker cap");

  DropEdgeFlags drop;
  auto* drop_cmd = app.add_subcommand("dropedge", "TopoInf-guided DropEdge distribution");
  add_graph_flag(drop_cmd, drop.in);
  add_label_flags(drop_cmd, drop.in, true);
  add_filter_flags(drop_cmd, drop.filter);
  drop_cmd->add_option("--lambda", drop.lambda, "Regularizer weight")->required();
  drop_cmd->add_option("--tau", drop.tau, "Temperature");
  drop_cmd->add_option("--drop-rate", drop.drop_rate, "Fraction of edges dropped per epoch")
      ->required();
  drop_cmd->add_option("--emit-epochs", drop.epochs, "Number of sampled edge lists");
  drop_cmd->add_option("--seed", drop.seed, "Sampling seed");
  drop_cmd->add_option("--out-dir", drop.out_dir, "Output directory")->required();
  drop_cmd->add_option("--threads", drop.threads, "Worker cap");

  CsbmFlags csbm;
  auto* csbm_cmd = app.add_subcommand("gen-csbm", "Contextual stochastic block model dataset");
  csbm_cmd->add_option("--n", csbm.params.n, "Nodes");
  csbm_cmd->add_option("--c", csbm.params.c, "Communities");
  csbm_cmd->add_option("--p", csbm.params.p, "Intra-community edge probability");
  csbm_cmd->add_option("--q", csbm.params.q, "Inter-community edge probability");
  csbm_cmd->add_option("--d", csbm.params.d, "Feature dimension");
  csbm_cmd->add_option("--sigma", csbm.params.sigma, "Noise standard deviation");
  csbm_cmd->add_option("--mu-scheme", csbm.scheme, "orthogonal_scaled|gaussian_random");
  csbm_cmd->add_option("--mu-scale", csbm.params.mu_scale, "Center scale");
  csbm_cmd->add_option("--seed", csbm.params.seed, "Seed");
  csbm_cmd->add_option("--preset", csbm.preset, "cora-like");
  csbm_cmd->add_option("--intra-fraction", csbm.intra_fraction,
                       "cora-like: share of edges inside communities");
  csbm_cmd->add_option("--out-dir", csbm.out_dir, "Output directory")->required();

  PseudoFlags pseudo;
  auto* pseudo_cmd = app.add_subcommand("pseudo", "Pseudo labels from a linear SGC classifier");
  add_graph_flag(pseudo_cmd, pseudo.in);
  pseudo_cmd->add_option("--labels", pseudo.in.labels, "Partial label file")
      ->required()
      ->check(CLI::ExistingFile);
  pseudo_cmd->add_option("--features", pseudo.features, "Feature file")
      ->required()
      ->check(CLI::ExistingFile);
  add_filter_flags(pseudo_cmd, pseudo.filter);
  pseudo_cmd->add_option("--lr", pseudo.cfg.learning_rate, "Learning rate");
  pseudo_cmd->add_option("--epochs", pseudo.cfg.epochs, "Full-batch epochs");
  pseudo_cmd->add_option("--l2", pseudo.cfg.l2_penalty, "L2 penalty on W");
  pseudo_cmd->add_option("--seed", pseudo.cfg.seed, "Initialization seed");
  pseudo_cmd->add_option("--out", pseudo.out, "Hardened label file (default stdout)");
  pseudo_cmd->add_option("--soft-out", pseudo.soft_out, "Soft-label TSV");

  std::string suite = "all";
  unsigned verify_threads = 0;
  std::uint64_t verify_seed = verify::SuiteOptions{}.seed;
  auto* verify_cmd = app.add_subcommand("verify", "Run built-in verification suites");
  verify_cmd->add_option("--suite", suite, "oracle|fixtures|theorem2|directional|gradients|sampler|all");
  verify_cmd->add_option("--threads", verify_threads, "Worker cap");
  verify_cmd->add_option("--seed", verify_seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (analyze_cmd->parsed()) run_analyze(*analyze_cmd, analyze);
    if (score_cmd->parsed()) run_score(*score_cmd, score);
    if (rewire_cmd->parsed()) run_rewire(*rewire_cmd, rewire);
    if (drop_cmd->parsed()) run_dropedge(*drop_cmd, drop);
    if (csbm_cmd->parsed()) run_gen_csbm(*csbm_cmd, csbm);
    if (pseudo_cmd->parsed()) run_pseudo(*pseudo_cmd, pseudo);
    if (verify_cmd->parsed()) return run_verify(suite, verify_threads, verify_seed);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace topoinf::cli

int main(int argc, char** argv) { return topoinf::cli::main(argc, argv); }
