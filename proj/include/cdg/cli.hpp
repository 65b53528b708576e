#pragma once

// Batch command dispatch. Exit codes: 0 success/occurs, 10 not_occurs,
// 20 unknown, 1 usage error, 2 input or verification error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdg/classifier.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/families.hpp"
#include "cdg/graph.hpp"
#include "cdg/io.hpp"

namespace cdg {

inline constexpr int kExitOccurs = 0;
inline constexpr int kExitNotOccurs = 10;
inline constexpr int kExitUnknown = 20;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

namespace detail {

inline std::string slurp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GraphError("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string slurp_graph_source(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return slurp_file(file);
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GraphError("cannot write file: " + path);
  f << text;
}

/// Loads extra Occurs entries into the session's base: a JSON object
/// {"entries": [{"tag": ..., "graph": {...}}]}. Each entry is keyed by
/// canonical form and witnessed as a known example.
inline void load_seed_file(Session& session, const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp_file(path));
    for (const auto& e : j.at("entries")) {
      const std::string tag = e.at("tag").get<std::string>();
      const Graph g = graph_from_json(e.at("graph"));
      const CanonicalForm cf = canonical_form(g);
      KnowledgeBase::Entry entry;
      entry.verdict = verdict_occurs(witness_known_example(tag));
      for (int p : cf.order) entry.canonical_names.push_back(g.name(p));
      session.local().insert(cf.key, std::move(entry));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError("malformed seed file " + path + ": " + ex.what());
  }
}

inline int exit_code(Verdict::Tag tag) {
  switch (tag) {
    case Verdict::Tag::occurs:
      return kExitOccurs;
    case Verdict::Tag::not_occurs:
      return kExitNotOccurs;
    case Verdict::Tag::unknown:
      return kExitUnknown;
  }
  return kExitInput;
}

}  // namespace detail

/// Runs one command. `in` supplies the graph when FILE is "-" or omitted.
inline int run_command(const std::vector<std::string>& args, std::istream& in,
                       std::ostream& out, std::ostream& err) {
  CLI::App app{"decides whether a finite graph can occur as the prime character "
               "degree graph of a solvable group"};
  app.name("cdg");
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand(
      "classify", "classify a graph; exit 0 occurs / 10 not_occurs / 20 unknown");
  std::string classify_file;
  std::string cert_out;
  std::string seed_kb;
  bool as_json = false;
  bool narrow_edges = false;
  std::uint64_t max_branches = 1ull << 20;
  int sylow_depth = 3;
  classify_cmd->add_option("FILE", classify_file, "graph file ('-' or omitted = stdin)");
  classify_cmd->add_option("--cert", cert_out, "write the certificate document here");
  classify_cmd->add_flag("--json", as_json, "print the certificate document instead of a report");
  classify_cmd->add_option("--max-branches", max_branches, "branch budget per (graph, vertex)");
  classify_cmd->add_option("--sylow-depth", sylow_depth, "nested branching depth cap");
  classify_cmd->add_flag("--narrow-sylow-edges", narrow_edges,
                         "branch only over edges with both endpoints next to p");
  classify_cmd->add_option("--seed-kb", seed_kb, "JSON file of extra known-occurring graphs");

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "emit the two-clique matching graph as a graph file");
  int gk = 0, gt = 0;
  gamma_cmd->add_option("K", gk, "size of the first clique")->required();
  gamma_cmd->add_option("T", gt, "size of the second clique")->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "re-check a certificate document; exit 0 valid / 2 invalid");
  std::string verify_a, verify_b;
  std::uint64_t verify_branches = 1ull << 20;
  verify_cmd->add_option("FILE_OR_CERT", verify_a, "graph file, or the certificate itself")
      ->required();
  verify_cmd->add_option("CERTFILE", verify_b, "certificate document (when FILE given)");
  verify_cmd->add_option("--max-branches", verify_branches, "branch budget for re-generation");

  // partition
  auto* partition_cmd =
      app.add_subcommand("partition", "print the diameter-three partition for a base vertex");
  std::string partition_file, partition_base;
  partition_cmd->add_option("FILE", partition_file, "graph file ('-' = stdin)")->required();
  partition_cmd->add_option("BASE", partition_base, "base vertex of eccentricity 3")->required();

  // enumerate
  auto* enum_cmd =
      app.add_subcommand("enumerate", "classify every graph on N vertices up to isomorphism");
  int enum_n = 0;
  int enum_jobs = 1;
  std::string report_out;
  enum_cmd->add_option("N", enum_n, "vertex count, 1..7")->required();
  enum_cmd->add_option("--report", report_out, "also write the report here");
  enum_cmd->add_option("--jobs", enum_jobs, "parallel workers");
  enum_cmd->add_option("--max-branches", max_branches, "branch budget per (graph, vertex)");
  enum_cmd->add_option("--sylow-depth", sylow_depth, "nested branching depth cap");
  enum_cmd->add_flag("--narrow-sylow-edges", narrow_edges,
                     "branch only over edges with both endpoints next to p");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "print the graph in DOT syntax");
  std::string dot_file;
  dot_cmd->add_option("FILE", dot_file, "graph file ('-' or omitted = stdin)");

  std::vector<const char*> argv;
  argv.push_back("cdg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ClassifyOptions opts;
  opts.edge_family = narrow_edges ? SylowEdgeFamily::narrow : SylowEdgeFamily::broad;
  opts.sylow_depth = sylow_depth;
  opts.max_branches = max_branches;

  try {
    if (gamma_cmd->parsed()) {
      out << serialize_graph_file(gamma(gk, gt));
      return 0;
    }

    if (classify_cmd->parsed()) {
      const Graph g = parse_graph_file(detail::slurp_graph_source(classify_file, in));
      Session session(opts);
      if (!seed_kb.empty()) detail::load_seed_file(session, seed_kb);
      const Verdict verdict = classify(g, session);
      if (!cert_out.empty()) detail::write_file(cert_out, document_to_string(g, verdict));
      if (as_json) {
        out << document_to_string(g, verdict);
      } else {
        out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
        out << "verdict: " << to_string(verdict.tag) << "\n";
        switch (verdict.tag) {
          case Verdict::Tag::occurs:
            out << "witness: " << describe(*verdict.witness) << "\n";
            break;
          case Verdict::Tag::not_occurs:
            out << "rule: " << to_string(verdict.certificate.node->rule) << "\n";
            break;
          case Verdict::Tag::unknown:
            out << "reason: " << verdict.reason << "\n";
            break;
        }
        out << "knowledge base: " << session.local().size() << " entries, "
            << session.stats.lookups << " lookups, " << session.stats.hits << " hits\n";
      }
      return detail::exit_code(verdict.tag);
    }

    if (verify_cmd->parsed()) {
      std::string cert_path = verify_b.empty() ? verify_a : verify_b;
      const CertificateDocument doc = document_from_string(detail::slurp_file(cert_path));
      if (!verify_b.empty()) {
        const Graph g = parse_graph_file(detail::slurp_graph_source(verify_a, in));
        if (!(sorted_names(g) == sorted_names(doc.graph) && g.edges() == doc.graph.edges())) {
          out << "invalid: graph file does not match the certificate's graph\n";
          return kExitInput;
        }
      }
      VerifyOptions vopts;
      vopts.max_branches = verify_branches;
      const VerifyResult r = verify_certificate(doc.graph, doc.verdict, vopts);
      if (r.valid) {
        out << "valid\n";
        return 0;
      }
      out << "invalid: " << r.reason << "\n";
      return kExitInput;
    }

    if (partition_cmd->parsed()) {
      const Graph g = parse_graph_file(detail::slurp_graph_source(partition_file, in));
      const Partition p = build_partition(g, partition_base);
      auto print_set = [&out](const char* label, const std::vector<std::string>& names) {
        out << label << ":";
        for (const auto& n : names) out << " " << n;
        out << "\n";
      };
      out << "base: " << p.base << "\n";
      print_set("rho1", p.rho1);
      print_set("rho2", p.rho2);
      print_set("rho3", p.rho3);
      print_set("rho4", p.rho4);
      out << "rho1_u_rho2: " << p.left_size() << "\n";
      out << "rho3_u_rho4: " << p.right_size() << "\n";
      const auto viols = check_sass(p);
      if (viols.empty()) {
        out << "sass: pass\n";
      } else {
        for (const auto& v : viols) {
          out << "sass: " << to_string(v.kind);
          if (v.kind == SassViolation::Kind::rho3_too_small)
            out << " |rho3|=" << v.left << " (need >= 3)";
          else
            out << " |rho1 u rho2|=" << v.left << " |rho3 u rho4|=" << v.right;
          out << "\n";
        }
      }
      return 0;
    }

    if (enum_cmd->parsed()) {
      if (enum_n < 1 || enum_n > 7) {
        err << "error: N must be between 1 and 7\n";
        return kExitInput;
      }
      const EnumerationReport report = enumerate_graphs(enum_n, opts, enum_jobs);
      const std::string text = report.text();
      if (!report_out.empty()) detail::write_file(report_out, text);
      out << text;
      return 0;
    }

    if (dot_cmd->parsed()) {
      const Graph g = parse_graph_file(detail::slurp_graph_source(dot_file, in));
      out << export_dot(g);
      return 0;
    }
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace cdg
