// haarlab: verification targets, scans and graph export from the command line.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "haarlab/atlas.hpp"
#include "haarlab/error.hpp"
#include "haarlab/repro.hpp"

using namespace haarlab;
using nlohmann::json;

namespace {

struct CacheFlags {
  std::string path;
  bool disabled = false;
};

std::unique_ptr<ResultCache> open_cache(const CacheFlags& flags) {
  if (flags.disabled) return nullptr;
  if (!flags.path.empty()) return std::make_unique<ResultCache>(flags.path);
  if (auto p = ResultCache::default_path()) return std::make_unique<ResultCache>(*p);
  return nullptr;
}

void add_cache_flags(CLI::App* cmd, CacheFlags& flags) {
  cmd->add_option("--cache", flags.path, "Verdict cache file (JSON lines); default $HAARLAB_CACHE_DIR/verdicts.jsonl");
  cmd->add_flag("--no-cache", flags.disabled, "Ignore any cache");
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void print_row(const ReportRow& r) {
  std::cout << '[' << to_string(r.status) << "] " << r.group << ' ' << r.s << "  " << r.claim << '\n';
  if (r.status != RowStatus::Pass) {
    std::cout << "    expected " << r.expected.dump() << '\n';
    std::cout << "    computed " << r.computed.dump() << '\n';
  }
}

void print_summary(const VerificationReport& r) {
  std::cout << r.target << ": " << (r.passed() ? "PASS" : "FAIL") << " in " << r.wall_seconds << " s\n";
  json brief = r.summary;
  brief.erase("skipped");
  std::cout << "  " << brief.dump() << '\n';
}

FiniteGroup group_arg(const std::string& name, const std::string& row6) {
  if (row6.empty()) return atlas(name);
  if (row6.size() != 2) throw ParseError("--row6 takes two signs, e.g. +-");
  auto sign = [](char c) {
    if (c != '+' && c != '-') throw ParseError("--row6 signs must be + or -");
    return c == '+' ? 1 : -1;
  };
  return small_table_row6(sign(row6[0]), sign(row6[1]));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Haar graphs, automorphism groups and Cayley tests"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  // verify
  std::string target, json_path;
  std::vector<std::size_t> n_list, p_list;
  std::size_t jobs = 0;
  bool verbose = false;
  CacheFlags cache_flags;
  auto* verify = app.add_subcommand("verify", "Run a verification target");
  verify->add_option("target", target, "Target name")->required()->check(CLI::IsMember(target_names()));
  verify->add_option("--n", n_list, "n values (dihedral-cross-zp)")->delimiter(',');
  verify->add_option("--p", p_list, "p values (dihedral-cross-zp, q8-cross-zp)")->delimiter(',');
  verify->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores)");
  verify->add_option("--json", json_path, "Write the report as JSON ('-' for stdout)");
  verify->add_flag("--verbose,-v", verbose, "Print every row, not only failures");
  add_cache_flags(verify, cache_flags);

  // scan
  std::string scan_group, export_dir;
  ScanOptions scan_options;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every Haar graph H(G,S) with 1 in S");
  scan_cmd->add_option("group", scan_group, "Atlas group name")->required();
  scan_cmd->add_flag("--connected", scan_options.connected_only, "Only connected graphs");
  scan_cmd->add_option("--max-size", scan_options.max_size, "Largest |S|");
  scan_cmd->add_flag("--find-non-cayley", scan_options.find_non_cayley, "Stop at the first non-Cayley graph");
  scan_cmd->add_flag("--orbit-reduce", scan_options.orbit_reduce, "One S per Aut(G)-orbit");
  scan_cmd->add_option("--jobs,-j", scan_options.jobs, "Worker threads (0 = all cores)");
  scan_cmd->add_option("--export-graph6", export_dir, "Directory for graph6 export");
  scan_cmd->add_option("--json", json_path, "Write the report as JSON ('-' for stdout)");
  scan_cmd->add_flag("--verbose,-v", verbose, "Print every row");
  add_cache_flags(scan_cmd, cache_flags);

  // single-graph commands
  std::string group_name, s_text, format = "graph6", row6;
  bool as_cayley = false;
  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley verdict for H(G,S) as JSON");
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of H(G,S) as JSON");
  auto* graph_cmd = app.add_subcommand("graph", "Export H(G,S), or Cay(G,S) with --cayley");
  for (auto* cmd : {cayley_cmd, aut_cmd, graph_cmd}) {
    cmd->add_option("group", group_name, "Atlas group name")->required();
    cmd->add_option("S", s_text, "Connection set, e.g. \"1,a,b,abc\"")->required();
    cmd->add_option("--row6", row6, "Use the row-6 group with signs, e.g. +-");
  }
  graph_cmd->add_option("--format", format, "graph6, dot or edges")->check(CLI::IsMember({"graph6", "dot", "edges"}));
  graph_cmd->add_flag("--cayley", as_cayley, "Build Cay(G,S) instead (S must be inverse-closed, without 1)");

  std::string atlas_name;
  auto* atlas_cmd = app.add_subcommand("atlas", "List the catalog or print a group as JSON");
  atlas_cmd->add_option("name", atlas_name, "Group name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      auto cache = open_cache(cache_flags);
      Classifier c(cache.get());
      VerificationReport r = run_target(c, target, n_list, p_list, jobs);
      for (const auto& row : r.rows)
        if (verbose || row.status != RowStatus::Pass) print_row(row);
      print_summary(r);
      write_json(json_path, r.to_json());
      return r.passed() ? 0 : 1;
    }
    if (scan_cmd->parsed()) {
      auto cache = open_cache(cache_flags);
      Classifier c(cache.get());
      if (!export_dir.empty()) scan_options.export_graph6 = export_dir;
      if (verbose) scan_options.on_row = print_row;
      VerificationReport r = scan(c, scan_group, scan_options);
      if (r.summary.contains("witness")) std::cout << "non-Cayley witness: S = " << r.summary["witness"] << '\n';
      print_summary(r);
      write_json(json_path, r.to_json());
      return r.passed() ? 0 : 1;
    }
    if (cayley_cmd->parsed() || aut_cmd->parsed() || graph_cmd->parsed()) {
      FiniteGroup g = group_arg(group_name, row6);
      if (graph_cmd->parsed() && as_cayley) {
        Graph cay = cayley_graph(g, ConnectionSet::parse(g, s_text, Role::R));
        if (format == "graph6") std::cout << cay.to_graph6() << '\n';
        else if (format == "dot") std::cout << cay.to_dot("Cay");
        else
          for (auto [u, v] : cay.edges()) std::cout << g.element_name(u) << ' ' << g.element_name(v) << '\n';
        return 0;
      }
      auto cs = ConnectionSet::parse(g, s_text);
      BiGraph b = haar_graph(g, cs);
      if (cayley_cmd->parsed()) {
        std::cout << verdict_to_json(is_cayley(b), g.name(), g.format_set(cs.elements), is_connected(b)).dump(2)
                  << '\n';
      } else if (aut_cmd->parsed()) {
        std::cout << aut_to_json(automorphism_group(b.graph)).dump(2) << '\n';
      } else if (format == "graph6") {
        std::cout << b.graph.to_graph6() << '\n';
      } else if (format == "dot") {
        std::cout << b.to_dot("H");
      } else {
        for (auto [u, v] : b.graph.edges()) std::cout << b.vertex_name(u) << ' ' << b.vertex_name(v) << '\n';
      }
      return 0;
    }
    if (atlas_cmd->parsed()) {
      if (atlas_name.empty()) {
        for (const auto& name : atlas_catalog()) {
          FiniteGroup g = atlas(name);
          std::cout << name << '\t' << g.order() << '\n';
        }
      } else {
        std::cout << group_to_json(atlas(atlas_name)).dump(2) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
