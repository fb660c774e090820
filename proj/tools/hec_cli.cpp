// Command-line front end: ingest a hyperedge list, compute centralities, and
// emit the analysis artifacts (score tables, correlations, top-k overlap,
// attack curves) as CSV or JSON, plus a manifest that pins the exact run.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hec/hec.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string input;
  std::vector<std::size_t> sizes;       // empty = no cardinality filter
  bool use_largest_component = false;
  bool component_first = false;         // extraction before filtering
  std::vector<std::string> method_names{"HEC", "DC", "HDC", "CC", "VC"};
  double tolerance = 1e-10;
  std::size_t max_iterations = 10000;
  std::uint64_t seed = 42;
  std::size_t runs = 100;
  std::string out_dir;
  std::string format = "csv";
};

std::vector<hec::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<hec::Method> methods;
  for (const auto& name : names) {
    auto m = hec::method_from_string(name);
    if (!m) throw CLI::ValidationError("--methods", "unknown method '" + name + "'");
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
  }
  if (methods.empty()) throw CLI::ValidationError("--methods", "no methods given");
  return methods;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedInput {
  hec::Hypergraph graph;
  hec::ParseReport report;
  std::string input_hash;
};

LoadedInput load(const RunConfig& cfg) {
  LoadedInput li;
  const std::string bytes = read_file(cfg.input);
  li.input_hash = hec::fnv1a_hex(bytes);
  std::istringstream stream(bytes);
  li.graph = hec::parse_hyperedge_list(stream, &li.report);

  const bool filter = !cfg.sizes.empty();
  const std::set<std::size_t> allowed(cfg.sizes.begin(), cfg.sizes.end());
  if (cfg.component_first) {
    if (cfg.use_largest_component) li.graph = hec::largest_component(li.graph);
    if (filter) li.graph = hec::filter_by_cardinality(li.graph, allowed);
  } else {
    if (filter) li.graph = hec::filter_by_cardinality(li.graph, allowed);
    if (cfg.use_largest_component) li.graph = hec::largest_component(li.graph);
  }
  return li;
}

void require_connected_for(const hec::Hypergraph& h, hec::Method m) {
  if (m == hec::Method::DC || m == hec::Method::HDC) return;
  if (!hec::is_connected(h)) {
    const auto comps = hec::connected_components(h);
    throw hec::not_connected_error(
        std::string(hec::to_string(m)) + " needs a connected hypergraph but the input has " +
        std::to_string(comps.size()) + " components; rerun with --largest-component or "
        "restrict --methods to DC,HDC");
  }
}

json config_json(const RunConfig& cfg) {
  return json{{"input", cfg.input},
              {"sizes", cfg.sizes},
              {"largest_component", cfg.use_largest_component},
              {"component_first", cfg.component_first},
              {"methods", cfg.method_names},
              {"tolerance", cfg.tolerance},
              {"max_iterations", cfg.max_iterations},
              {"seed", cfg.seed},
              {"runs", cfg.runs},
              {"format", cfg.format}};
}

json parse_report_json(const hec::ParseReport& rep) {
  return json{{"lines_read", rep.lines_read},
              {"dropped_short_lines", rep.dropped_short_lines},
              {"duplicate_edges", rep.duplicate_edges},
              {"duplicate_vertex_tokens", rep.duplicate_vertex_tokens}};
}

class OutputDir {
public:
  OutputDir(const fs::path& dir, const std::string& command, const RunConfig& cfg,
            const LoadedInput& li)
      : dir_(dir) {
    fs::create_directories(dir_);
    manifest_["tool"] = "hec";
    manifest_["version"] = hec::version;
    manifest_["command"] = command;
    manifest_["config"] = config_json(cfg);
    manifest_["input_hash_fnv1a64"] = li.input_hash;
    manifest_["parse_report"] = parse_report_json(li.report);
    manifest_["outputs"] = json::array();
    manifest_["notes"] = json::array();
  }

  std::ofstream open(const std::string& name) {
    manifest_["outputs"].push_back(name);
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    return out;
  }

  void note(const std::string& text) { manifest_["notes"].push_back(text); }
  json& manifest() { return manifest_; }

  void finish() {
    manifest_["outputs"].push_back("manifest.json");
    std::ofstream out(dir_ / "manifest.json", std::ios::binary);
    out << manifest_.dump(2) << '\n';
  }

private:
  fs::path dir_;
  json manifest_;
};

void emit_labels(OutputDir& out, const hec::Hypergraph& h) {
  auto f = out.open("labels.csv");
  hec::write_label_map_csv(f, h);
}

json score_rows_json(const hec::Hypergraph& h, const hec::CentralityVector& cv) {
  json rows = json::array();
  std::vector<std::size_t> rank(h.vertex_count());
  const auto order = hec::ranked_vertices(h, cv);
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos + 1;
  for (hec::VertexId v = 0; v < h.vertex_count(); ++v)
    rows.push_back({{"vertex_label", h.label(v)},
                    {"method", hec::to_string(cv.method)},
                    {"score", cv.scores[v]},
                    {"rank", rank[v]}});
  return rows;
}

void record_solver_info(json& manifest, const std::vector<hec::CentralityVector>& cvs) {
  json solver = json::object();
  for (const auto& cv : cvs)
    if (cv.solver_info)
      solver[hec::to_string(cv.method)] = {{"lambda", cv.solver_info->lambda},
                                           {"iterations", cv.solver_info->iterations},
                                           {"gap", cv.solver_info->gap},
                                           {"converged", cv.solver_info->converged}};
  if (!solver.empty()) manifest["solver"] = solver;
}

std::vector<hec::CentralityVector> compute_all(const hec::Hypergraph& h, const RunConfig& cfg) {
  hec::SolverOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.max_iterations = cfg.max_iterations;
  std::vector<hec::CentralityVector> cvs;
  for (hec::Method m : parse_methods(cfg.method_names)) {
    require_connected_for(h, m);
    cvs.push_back(hec::compute_centrality(m, h, opts));
  }
  return cvs;
}

int cmd_info(const RunConfig& cfg) {
  const LoadedInput li = load(cfg);
  const hec::HypergraphStats st = hec::stats(li.graph);
  const auto comps = hec::connected_components(li.graph);
  std::cout << "n=" << st.n << " m=" << st.m << " sizes={";
  for (std::size_t i = 0; i < st.cardinality_set.size(); ++i)
    std::cout << (i ? "," : "") << st.cardinality_set[i];
  std::cout << "} rank=" << st.rank << " s=" << st.s
            << " connected=" << (st.connected ? "true" : "false")
            << " components=" << comps.size() << '\n';
  if (li.report.dropped_short_lines || li.report.duplicate_edges)
    std::cerr << "note: dropped " << li.report.dropped_short_lines
              << " short line(s), collapsed " << li.report.duplicate_edges
              << " duplicate edge(s)\n";
  return 0;
}

int cmd_compute(const RunConfig& cfg) {
  const LoadedInput li = load(cfg);
  const auto cvs = compute_all(li.graph, cfg);
  OutputDir out(cfg.out_dir, "compute", cfg, li);
  for (const auto& cv : cvs) {
    const std::string base = std::string("scores_") + hec::to_string(cv.method);
    if (cfg.format == "json") {
      auto f = out.open(base + ".json");
      f << score_rows_json(li.graph, cv).dump(2) << '\n';
    } else {
      auto f = out.open(base + ".csv");
      hec::write_score_csv(f, li.graph, {cv});
    }
  }
  emit_labels(out, li.graph);
  record_solver_info(out.manifest(), cvs);
  out.finish();
  return 0;
}

int cmd_analyze(const RunConfig& cfg) {
  const LoadedInput li = load(cfg);
  const auto cvs = compute_all(li.graph, cfg);
  if (cvs.size() < 2) {
    std::cerr << "error: analyze needs at least 2 methods\n";
    return 1;
  }
  OutputDir out(cfg.out_dir, "analyze", cfg, li);

  const hec::CorrelationMatrix cm = hec::correlation_matrix(cvs);

  std::vector<std::size_t> ks;
  std::vector<std::size_t> clamped;
  for (std::size_t k : {std::size_t{5}, std::size_t{10}, std::size_t{15}, std::size_t{20},
                        std::size_t{25}}) {
    std::size_t effective = k;
    if (effective > li.graph.vertex_count()) {
      effective = li.graph.vertex_count();
      clamped.push_back(k);
    }
    if (std::find(ks.begin(), ks.end(), effective) == ks.end()) ks.push_back(effective);
  }
  if (!clamped.empty()) {
    std::string note = "top-k clamped to n=" + std::to_string(li.graph.vertex_count()) + " for k=";
    for (std::size_t i = 0; i < clamped.size(); ++i)
      note += (i ? "," : "") + std::to_string(clamped[i]);
    out.note(note);
  }
  const auto jrows = hec::jaccard_table(li.graph, cvs, ks);

  if (cfg.format == "json") {
    {
      auto f = out.open("scores.json");
      json rows = json::array();
      for (const auto& cv : cvs)
        for (auto& row : score_rows_json(li.graph, cv)) rows.push_back(std::move(row));
      f << rows.dump(2) << '\n';
    }
    {
      auto f = out.open("correlation.json");
      json methods = json::array();
      for (hec::Method m : cm.methods) methods.push_back(hec::to_string(m));
      f << json{{"methods", methods}, {"values", cm.values}}.dump(2) << '\n';
    }
    {
      auto f = out.open("jaccard.json");
      json rows = json::array();
      for (const auto& r : jrows)
        rows.push_back({{"method_a", hec::to_string(r.method_a)},
                        {"method_b", hec::to_string(r.method_b)},
                        {"k", r.k},
                        {"jaccard", r.value}});
      f << rows.dump(2) << '\n';
    }
  } else {
    {
      auto f = out.open("scores.csv");
      hec::write_score_csv(f, li.graph, cvs);
    }
    {
      auto f = out.open("correlation.csv");
      hec::write_correlation_csv(f, cm);
    }
    {
      auto f = out.open("jaccard.csv");
      hec::write_jaccard_csv(f, jrows);
    }
  }
  emit_labels(out, li.graph);
  record_solver_info(out.manifest(), cvs);
  out.finish();
  return 0;
}

int cmd_attack(const RunConfig& cfg) {
  const LoadedInput li = load(cfg);
  const auto cvs = compute_all(li.graph, cfg);
  OutputDir out(cfg.out_dir, "attack", cfg, li);

  std::vector<hec::AttackCurve> curves;
  for (const auto& cv : cvs)
    curves.push_back(hec::attack_curve(li.graph, hec::ranked_vertices(li.graph, cv),
                                       hec::to_string(cv.method)));
  curves.push_back(hec::random_attack_curve(li.graph, cfg.seed, cfg.runs));

  if (cfg.format == "json") {
    auto f = out.open("attack.json");
    json arr = json::array();
    for (const auto& c : curves) {
      json points = json::array();
      for (const auto& [fraction, lcc] : c.points) points.push_back({fraction, lcc});
      json entry{{"strategy", c.strategy}, {"points", points}};
      if (c.strategy == "random") {
        entry["seed"] = c.seed;
        entry["runs"] = c.runs;
      }
      arr.push_back(entry);
    }
    f << arr.dump(2) << '\n';
  } else {
    auto f = out.open("attack.csv");
    hec::write_attack_csv(f, curves);
  }
  emit_labels(out, li.graph);
  record_solver_info(out.manifest(), cvs);
  out.manifest()["random_baseline"] = {{"seed", cfg.seed}, {"runs", cfg.runs}};
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph centrality toolkit: tensor eigenvector centrality (HEC), four "
               "baselines, and a correlation/overlap/robustness analysis harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hec::version);

  RunConfig cfg;
  std::string methods_arg;
  std::string sizes_arg;

  auto add_common = [&](CLI::App* sub, bool needs_out) {
    sub->add_option("--input", cfg.input, "hyperedge list file")->required();
    sub->add_option("--sizes", sizes_arg,
                    "comma-separated hyperedge cardinalities to keep (e.g. 2,3,4)");
    sub->add_flag("--largest-component", cfg.use_largest_component,
                  "replace the input by its largest connected component");
    sub->add_flag("--component-first", cfg.component_first,
                  "extract the largest component before the cardinality filter");
    if (needs_out) {
      sub->add_option("--methods", methods_arg, "comma-separated subset of HEC,DC,HDC,CC,VC");
      sub->add_option("--tol", cfg.tolerance, "solver relative-gap tolerance");
      sub->add_option("--max-iter", cfg.max_iterations, "solver iteration cap");
      sub->add_option("--out", cfg.out_dir, "output directory")->required();
      sub->add_option("--format", cfg.format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  };

  auto* info = app.add_subcommand("info", "print structural stats of the input");
  add_common(info, false);
  auto* compute = app.add_subcommand("compute", "compute centrality score tables");
  add_common(compute, true);
  auto* analyze = app.add_subcommand("analyze", "correlations and top-k Jaccard overlap");
  add_common(analyze, true);
  auto* attack = app.add_subcommand("attack", "LCC decay under ranked vertex removal");
  add_common(attack, true);
  attack->add_option("--seed", cfg.seed, "seed for the random-removal baseline");
  attack->add_option("--runs", cfg.runs, "number of random-removal runs to average");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!methods_arg.empty()) {
      cfg.method_names.clear();
      std::stringstream ss(methods_arg);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) cfg.method_names.push_back(tok);
    }
    if (!sizes_arg.empty()) {
      std::stringstream ss(sizes_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const long v = std::stol(tok);
        if (v < 2) throw std::runtime_error("--sizes entries must be at least 2");
        cfg.sizes.push_back(static_cast<std::size_t>(v));
      }
    }
    parse_methods(cfg.method_names);  // validate early

    if (info->parsed()) return cmd_info(cfg);
    if (compute->parsed()) return cmd_compute(cfg);
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (attack->parsed()) return cmd_attack(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
