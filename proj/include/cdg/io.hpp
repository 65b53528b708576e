#pragma once

// Text formats: the line-oriented graph files, DOT export, and the JSON
// certificate documents. Serialization is deterministic: the same verdict
// always produces byte-identical output.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cdg/graph.hpp"
#include "cdg/verdict.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// Graph files: '#' starts a comment, 'v NAME' declares a vertex, 'e NAME NAME'
// an edge. Declarations precede use.

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what) {}
};

inline Graph parse_graph_file(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::map<std::string, int, std::less<>> declared;
  std::map<Edge, int> edge_lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (tok[0] == '#') continue;
    if (tok == "v") {
      std::string name, extra;
      if (!(ls >> name) || (ls >> extra))
        throw ParseError(lineno, "expected: v NAME");
      if (!valid_vertex_name(name))
        throw ParseError(lineno, "invalid vertex name: \"" + name + "\"");
      if (!declared.emplace(name, lineno).second)
        throw ParseError(lineno, "duplicate vertex: " + name);
      if (vertices.size() == static_cast<size_t>(kMaxVertices))
        throw ParseError(lineno, "more than " + std::to_string(kMaxVertices) + " vertices");
      vertices.push_back(name);
    } else if (tok == "e") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra))
        throw ParseError(lineno, "expected: e NAME NAME");
      if (!declared.count(a)) throw ParseError(lineno, "undeclared vertex: " + a);
      if (!declared.count(b)) throw ParseError(lineno, "undeclared vertex: " + b);
      if (a == b) throw ParseError(lineno, "self-loop on vertex: " + a);
      Edge e = make_edge(a, b);
      if (!edge_lines.emplace(e, lineno).second)
        throw ParseError(lineno, "duplicate edge: " + a + " " + b);
      edges.push_back(std::move(e));
    } else {
      throw ParseError(lineno, "unrecognized directive: " + tok);
    }
  }
  return build_graph(vertices, edges);
}

/// Inverse of parse_graph_file up to comments: vertices in graph order,
/// edges sorted lexicographically.
inline std::string serialize_graph_file(const Graph& g) {
  std::string out;
  for (const auto& name : g.names()) {
    out += "v ";
    out += name;
    out += '\n';
  }
  for (const auto& [a, b] : g.edges()) {
    out += "e ";
    out += a;
    out += ' ';
    out += b;
    out += '\n';
  }
  return out;
}

/// Undirected DOT output, vertices and edges in lexicographic order.
inline std::string export_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& name : sorted_names(g)) {
    out += "  \"";
    out += name;
    out += "\";\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out += "  \"";
    out += a;
    out += "\" -- \"";
    out += b;
    out += "\";\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Certificate documents (JSON)

inline constexpr int kDocumentFormatVersion = 1;

namespace detail {

using RenameMap = std::map<std::string, std::string>;

inline std::string applied(const RenameMap& sigma, const std::string& name) {
  if (sigma.empty()) return name;
  auto it = sigma.find(name);
  if (it == sigma.end()) throw GraphError("certificate rename misses vertex " + name);
  return it->second;
}

inline RenameMap composed(const RenameMap& sigma, const CertLink& link) {
  if (link.rename.empty()) return sigma;
  RenameMap out;
  for (const auto& [from, to] : link.rename) out[from] = applied(sigma, to);
  return out;
}

inline nlohmann::json graph_to_json(const Graph& g, const RenameMap& sigma) {
  nlohmann::json j;
  auto vertices = nlohmann::json::array();
  for (const auto& name : g.names()) vertices.push_back(applied(sigma, name));
  auto edges = nlohmann::json::array();
  std::vector<Edge> mapped;
  for (const auto& [a, b] : g.edges()) mapped.push_back(make_edge(applied(sigma, a), applied(sigma, b)));
  std::sort(mapped.begin(), mapped.end());
  for (const auto& [a, b] : mapped) edges.push_back(nlohmann::json::array({a, b}));
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

inline nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json j;
  j["type"] = to_string(w.kind);
  switch (w.kind) {
    case Witness::Kind::complete_graph:
    case Witness::Kind::isolated_plus_complete:
      j["n"] = w.n;
      break;
    case Witness::Kind::known_example:
      j["tag"] = w.tag;
      break;
    case Witness::Kind::direct_product: {
      auto factors = nlohmann::json::array();
      for (const auto& f : w.factors) factors.push_back(witness_to_json(*f));
      j["factors"] = std::move(factors);
      break;
    }
  }
  return j;
}

inline nlohmann::json partition_to_json(const Partition& p, const RenameMap& sigma) {
  auto names = [&sigma](const std::vector<std::string>& src) {
    std::vector<std::string> out;
    for (const auto& n : src) out.push_back(applied(sigma, n));
    std::sort(out.begin(), out.end());
    return nlohmann::json(out);
  };
  nlohmann::json j;
  j["base"] = applied(sigma, p.base);
  j["rho1"] = names(p.rho1);
  j["rho2"] = names(p.rho2);
  j["rho3"] = names(p.rho3);
  j["rho4"] = names(p.rho4);
  return j;
}

inline nlohmann::json cert_to_json(const CertLink& link, const RenameMap& outer_sigma,
                                   std::size_t max_nodes, std::size_t& nodes) {
  if (!link.node) throw GraphError("certificate link has no node");
  if (++nodes > max_nodes)
    throw BudgetError("certificate expansion budget exceeded (" + std::to_string(max_nodes) +
                      " nodes); the proof is larger than the serialization cap");
  const RenameMap sigma = composed(outer_sigma, link);
  const Certificate& c = *link.node;
  nlohmann::json j;
  j["rule"] = to_string(c.rule);
  switch (c.rule) {
    case Certificate::Rule::palfy_violation: {
      std::vector<std::string> t;
      for (const auto& name : c.palfy.triple) t.push_back(applied(sigma, name));
      std::sort(t.begin(), t.end());
      j["triple"] = t;
      break;
    }
    case Certificate::Rule::bad_components: {
      j["kind"] = c.bad.kind == BadComponentsCert::Kind::three_plus_components
                      ? "three_plus_components"
                      : "noncomplete_component";
      auto comps = nlohmann::json::array();
      std::vector<std::vector<std::string>> mapped;
      for (const auto& comp : c.bad.components) {
        std::vector<std::string> m;
        for (const auto& n : comp) m.push_back(applied(sigma, n));
        std::sort(m.begin(), m.end());
        mapped.push_back(std::move(m));
      }
      std::sort(mapped.begin(), mapped.end());
      for (auto& m : mapped) comps.push_back(m);
      j["components"] = std::move(comps);
      if (c.bad.kind == BadComponentsCert::Kind::noncomplete_component) {
        std::vector<std::string> m;
        for (const auto& n : c.bad.noncomplete) m.push_back(applied(sigma, n));
        std::sort(m.begin(), m.end());
        j["noncomplete"] = m;
      }
      break;
    }
    case Certificate::Rule::markmain: {
      std::string p1 = applied(sigma, c.markmain.p1);
      std::string p2 = applied(sigma, c.markmain.p2);
      if (p2 < p1) std::swap(p1, p2);
      j["p1"] = p1;
      j["p2"] = p2;
      break;
    }
    case Certificate::Rule::diameter3_refutation: {
      j["edge_family"] = to_string(c.diam3.family);
      // Renaming can reshuffle lexicographic order, so lists are re-sorted in
      // the output frame.
      std::vector<std::pair<std::string, nlohmann::json>> bases;
      for (const auto& elim : c.diam3.bases) {
        nlohmann::json b;
        const std::string base = applied(sigma, elim.partition.base);
        b["base"] = base;
        b["partition"] = partition_to_json(elim.partition, sigma);
        if (!elim.violations.empty()) {
          auto viols = nlohmann::json::array();
          for (const auto& v : elim.violations) {
            nlohmann::json vj;
            vj["kind"] = to_string(v.kind);
            if (v.kind == SassViolation::Kind::rho3_too_small) {
              vj["rho3_size"] = v.left;
            } else {
              vj["left_size"] = v.left;
              vj["right_size"] = v.right;
            }
            viols.push_back(std::move(vj));
          }
          b["sass_violations"] = std::move(viols);
        } else {
          std::vector<std::pair<std::string, nlohmann::json>> branching;
          for (const auto& alt : elim.branching) {
            nlohmann::json aj;
            const std::string p = applied(sigma, alt.p);
            aj["p"] = p;
            std::vector<std::pair<std::string, nlohmann::json>> branches;
            for (const auto& br : alt.branches) {
              nlohmann::json bj;
              bj["graph"] = graph_to_json(br.graph, sigma);
              bj["certificate"] = cert_to_json(br.cert, sigma, max_nodes, nodes);
              branches.emplace_back(bj["graph"].dump(), std::move(bj));
            }
            std::sort(branches.begin(), branches.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            auto arr = nlohmann::json::array();
            for (auto& [_, bj] : branches) arr.push_back(std::move(bj));
            aj["branches"] = std::move(arr);
            branching.emplace_back(p, std::move(aj));
          }
          std::sort(branching.begin(), branching.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          auto arr = nlohmann::json::array();
          for (auto& [_, aj] : branching) arr.push_back(std::move(aj));
          b["branching"] = std::move(arr);
        }
        bases.emplace_back(base, std::move(b));
      }
      std::sort(bases.begin(), bases.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      auto arr = nlohmann::json::array();
      for (auto& [_, b] : bases) arr.push_back(std::move(b));
      j["bases"] = std::move(arr);
      break;
    }
    case Certificate::Rule::all_admissible: {
      std::vector<std::pair<std::string, nlohmann::json>> proofs;
      for (const auto& proof : c.adm.proofs) {
        nlohmann::json pj;
        const std::string vertex = applied(sigma, proof.vertex);
        pj["vertex"] = vertex;
        pj["vertex_removal"] = cert_to_json(proof.vertex_removal, sigma, max_nodes, nodes);
        std::vector<std::pair<std::pair<std::size_t, std::vector<Edge>>, nlohmann::json>> subsets;
        for (const auto& sub : proof.edge_subsets) {
          nlohmann::json sj;
          auto edges = nlohmann::json::array();
          std::vector<Edge> mapped;
          for (const auto& [a, b] : sub.edges)
            mapped.push_back(make_edge(applied(sigma, a), applied(sigma, b)));
          std::sort(mapped.begin(), mapped.end());
          for (const auto& [a, b] : mapped) edges.push_back(nlohmann::json::array({a, b}));
          sj["edges"] = std::move(edges);
          sj["certificate"] = cert_to_json(sub.cert, sigma, max_nodes, nodes);
          subsets.emplace_back(std::make_pair(mapped.size(), std::move(mapped)), std::move(sj));
        }
        std::sort(subsets.begin(), subsets.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        auto arr = nlohmann::json::array();
        for (auto& [_, sj] : subsets) arr.push_back(std::move(sj));
        pj["edge_subsets"] = std::move(arr);
        proofs.emplace_back(vertex, std::move(pj));
      }
      std::sort(proofs.begin(), proofs.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      auto arr = nlohmann::json::array();
      for (auto& [_, pj] : proofs) arr.push_back(std::move(pj));
      j["proofs"] = std::move(arr);
      break;
    }
  }
  return j;
}

// Parsing back ------------------------------------------------------------

inline Graph graph_from_json(const nlohmann::json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back(make_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>()));
  return build_graph(vertices, edges);
}

inline WitnessPtr witness_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "complete_graph") return witness_complete(j.at("n").get<int>());
  if (type == "isolated_plus_complete") return witness_isolated_plus_complete(j.at("n").get<int>());
  if (type == "known_example") return witness_known_example(j.at("tag").get<std::string>());
  if (type == "direct_product") {
    std::vector<WitnessPtr> factors;
    for (const auto& f : j.at("factors")) factors.push_back(witness_from_json(f));
    return witness_direct_product(std::move(factors));
  }
  throw GraphError("unknown witness type: " + type);
}

inline std::vector<std::string> names_from_json(const nlohmann::json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

inline CertLink cert_from_json(const nlohmann::json& j) {
  const std::string rule = j.at("rule").get<std::string>();
  if (rule == "palfy_violation") {
    const auto t = names_from_json(j.at("triple"));
    if (t.size() != 3) throw GraphError("palfy_violation needs a triple");
    return CertLink{{}, cert_palfy(PalfyViolation{{t[0], t[1], t[2]}})};
  }
  if (rule == "bad_components") {
    BadComponentsCert b;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "three_plus_components")
      b.kind = BadComponentsCert::Kind::three_plus_components;
    else if (kind == "noncomplete_component")
      b.kind = BadComponentsCert::Kind::noncomplete_component;
    else
      throw GraphError("unknown bad_components kind: " + kind);
    for (const auto& comp : j.at("components")) b.components.push_back(names_from_json(comp));
    if (j.contains("noncomplete")) b.noncomplete = names_from_json(j.at("noncomplete"));
    return CertLink{{}, cert_bad_components(std::move(b))};
  }
  if (rule == "markmain") {
    return CertLink{{}, cert_markmain(MarkmainMatch{j.at("p1").get<std::string>(),
                                                    j.at("p2").get<std::string>()})};
  }
  if (rule == "diameter3_refutation") {
    Diam3Cert d;
    const std::string family = j.at("edge_family").get<std::string>();
    if (family == "broad")
      d.family = SylowEdgeFamily::broad;
    else if (family == "narrow")
      d.family = SylowEdgeFamily::narrow;
    else
      throw GraphError("unknown edge family: " + family);
    for (const auto& bj : j.at("bases")) {
      BaseElimination elim;
      const auto& pj = bj.at("partition");
      elim.partition.base = pj.at("base").get<std::string>();
      elim.partition.rho1 = names_from_json(pj.at("rho1"));
      elim.partition.rho2 = names_from_json(pj.at("rho2"));
      elim.partition.rho3 = names_from_json(pj.at("rho3"));
      elim.partition.rho4 = names_from_json(pj.at("rho4"));
      if (bj.contains("sass_violations")) {
        for (const auto& vj : bj.at("sass_violations")) {
          SassViolation v;
          v.partition = elim.partition;
          const std::string kind = vj.at("kind").get<std::string>();
          if (kind == "rho3_too_small") {
            v.kind = SassViolation::Kind::rho3_too_small;
            v.left = vj.at("rho3_size").get<int>();
            v.right = 3;
          } else if (kind == "left_exceeds_right") {
            v.kind = SassViolation::Kind::left_exceeds_right;
            v.left = vj.at("left_size").get<int>();
            v.right = vj.at("right_size").get<int>();
          } else if (kind == "power_bound") {
            v.kind = SassViolation::Kind::power_bound;
            v.left = vj.at("left_size").get<int>();
            v.right = vj.at("right_size").get<int>();
          } else {
            throw GraphError("unknown violation kind: " + kind);
          }
          elim.violations.push_back(std::move(v));
        }
      }
      if (bj.contains("branching")) {
        for (const auto& aj : bj.at("branching")) {
          SylowAlternative alt;
          alt.p = aj.at("p").get<std::string>();
          for (const auto& brj : aj.at("branches")) {
            SylowBranchCase br;
            br.graph = graph_from_json(brj.at("graph"));
            br.cert = cert_from_json(brj.at("certificate"));
            alt.branches.push_back(std::move(br));
          }
          elim.branching.push_back(std::move(alt));
        }
      }
      d.bases.push_back(std::move(elim));
    }
    return CertLink{{}, cert_diam3(std::move(d))};
  }
  if (rule == "all_admissible") {
    AllAdmissibleCert a;
    for (const auto& pj : j.at("proofs")) {
      AdmissibilityProof proof;
      proof.vertex = pj.at("vertex").get<std::string>();
      proof.vertex_removal = cert_from_json(pj.at("vertex_removal"));
      for (const auto& sj : pj.at("edge_subsets")) {
        EdgeSubsetCert sub;
        for (const auto& e : sj.at("edges"))
          sub.edges.push_back(make_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>()));
        sub.cert = cert_from_json(sj.at("certificate"));
        proof.edge_subsets.push_back(std::move(sub));
      }
      a.proofs.push_back(std::move(proof));
    }
    return CertLink{{}, cert_all_admissible(std::move(a))};
  }
  throw GraphError("unknown certificate rule: " + rule);
}

}  // namespace detail

struct CertificateDocument {
  int format_version = kDocumentFormatVersion;
  Graph graph;
  Verdict verdict;
};

/// Serializes a verdict with its subject graph. Shared certificate subtrees
/// are expanded; max_nodes caps the expansion.
inline nlohmann::json document_to_json(const Graph& g, const Verdict& v,
                                       std::size_t max_nodes = 1'000'000) {
  nlohmann::json j;
  j["format_version"] = kDocumentFormatVersion;
  j["graph"] = detail::graph_to_json(g, {});
  j["verdict"] = to_string(v.tag);
  switch (v.tag) {
    case Verdict::Tag::occurs:
      if (!v.witness) throw GraphError("occurs verdict carries no witness");
      j["witness"] = detail::witness_to_json(*v.witness);
      break;
    case Verdict::Tag::not_occurs: {
      std::size_t nodes = 0;
      j["certificate"] = detail::cert_to_json(v.certificate, {}, max_nodes, nodes);
      break;
    }
    case Verdict::Tag::unknown:
      j["reason"] = v.reason;
      break;
  }
  return j;
}

inline std::string document_to_string(const Graph& g, const Verdict& v,
                                      std::size_t max_nodes = 1'000'000) {
  return document_to_json(g, v, max_nodes).dump(2) + "\n";
}

inline CertificateDocument document_from_json(const nlohmann::json& j) {
  CertificateDocument doc;
  doc.format_version = j.at("format_version").get<int>();
  if (doc.format_version != kDocumentFormatVersion)
    throw GraphError("unsupported document format version " +
                     std::to_string(doc.format_version));
  doc.graph = detail::graph_from_json(j.at("graph"));
  const std::string tag = j.at("verdict").get<std::string>();
  if (tag == "occurs") {
    doc.verdict = verdict_occurs(detail::witness_from_json(j.at("witness")));
  } else if (tag == "not_occurs") {
    doc.verdict = verdict_not_occurs(detail::cert_from_json(j.at("certificate")));
  } else if (tag == "unknown") {
    doc.verdict = verdict_unknown(j.value("reason", std::string{}));
  } else {
    throw GraphError("unknown verdict tag: " + tag);
  }
  return doc;
}

inline CertificateDocument document_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed certificate document: ") + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed certificate document: ") + e.what());
  }
}

/// Compact one-line rendering of a witness, e.g.
/// direct_product(isolated_plus_complete(3), complete_graph(1)).
inline std::string describe(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::complete_graph:
      return "complete_graph(" + std::to_string(w.n) + ")";
    case Witness::Kind::isolated_plus_complete:
      return "isolated_plus_complete(" + std::to_string(w.n) + ")";
    case Witness::Kind::known_example:
      return "known_example(" + w.tag + ")";
    case Witness::Kind::direct_product: {
      std::string out = "direct_product(";
      for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i) out += ", ";
        out += describe(*w.factors[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace cdg
