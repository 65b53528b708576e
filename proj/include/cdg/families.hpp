#pragma once

// Constructors for the named graph families: the two-clique matching graphs
// gamma(k,t), complete graphs, an isolated vertex next to a clique, and
// direct products (joins).

#include <string>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

/// Parameters (k, t) of the family gamma. Both sides are at least 1 and the
/// total vertex count fits the engine budget.
struct FamilySpec {
  int k = 1;
  int t = 1;
};

inline void validate(const FamilySpec& spec) {
  if (spec.k < 1 || spec.t < 1)
    throw GraphError("family parameters must be positive");
  if (spec.k + spec.t > kMaxVertices)
    throw BudgetError("vertex budget exceeded: k + t > " + std::to_string(kMaxVertices));
}

/// Two complete graphs of sizes k and t (k >= t after an internal swap),
/// vertices a1..ak and b1..bt, joined by the perfect matching a_i - b_i on
/// the smaller side. Edge count is C(k,2) + C(t,2) + min(k,t).
inline Graph gamma(FamilySpec spec) {
  validate(spec);
  if (spec.k < spec.t) std::swap(spec.k, spec.t);
  std::vector<std::string> vertices;
  for (int i = 1; i <= spec.k; ++i) vertices.push_back("a" + std::to_string(i));
  for (int i = 1; i <= spec.t; ++i) vertices.push_back("b" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= spec.k; ++i)
    for (int j = i + 1; j <= spec.k; ++j)
      edges.push_back(make_edge("a" + std::to_string(i), "a" + std::to_string(j)));
  for (int i = 1; i <= spec.t; ++i)
    for (int j = i + 1; j <= spec.t; ++j)
      edges.push_back(make_edge("b" + std::to_string(i), "b" + std::to_string(j)));
  for (int i = 1; i <= spec.t; ++i)
    edges.push_back(make_edge("a" + std::to_string(i), "b" + std::to_string(i)));
  return build_graph(vertices, edges);
}

inline Graph gamma(int k, int t) { return gamma(FamilySpec{k, t}); }

/// K_n with vertices prefix1..prefixn.
inline Graph complete_graph(int n, const std::string& prefix = "p") {
  if (n < 1) throw GraphError("complete graph needs at least one vertex");
  if (n > kMaxVertices) throw BudgetError("vertex budget exceeded");
  std::vector<std::string> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(prefix + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back(make_edge(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]));
  return build_graph(vertices, edges);
}

/// K_1 plus K_n as two components: vertices prefix0 (isolated) and
/// prefix1..prefixn (clique).
inline Graph isolated_plus_complete(int n, const std::string& prefix = "q") {
  if (n < 1) throw GraphError("clique side needs at least one vertex");
  if (n + 1 > kMaxVertices) throw BudgetError("vertex budget exceeded");
  std::vector<std::string> vertices{prefix + "0"};
  for (int i = 1; i <= n; ++i) vertices.push_back(prefix + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      edges.push_back(make_edge(vertices[static_cast<size_t>(i)], vertices[static_cast<size_t>(j)]));
  return build_graph(vertices, edges);
}

/// Disjoint union of a and b plus every cross edge. Vertex name sets must be
/// disjoint.
inline Graph direct_product(const Graph& a, const Graph& b) {
  if (a.vertex_count() + b.vertex_count() > kMaxVertices)
    throw BudgetError("vertex budget exceeded");
  for (const auto& name : b.names())
    if (a.has_vertex(name)) throw GraphError("vertex name collision: " + name);
  std::vector<std::string> vertices = a.names();
  vertices.insert(vertices.end(), b.names().begin(), b.names().end());
  std::vector<Edge> edges;
  for (const auto& e : a.edges()) edges.push_back(e);
  for (const auto& e : b.edges()) edges.push_back(e);
  for (const auto& u : a.names())
    for (const auto& v : b.names()) edges.push_back(make_edge(u, v));
  return build_graph(vertices, edges);
}

}  // namespace cdg
