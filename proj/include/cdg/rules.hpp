#pragma once

// Necessary conditions on prime character degree graphs of solvable groups,
// each returning either a pass or a structured violation usable as a
// certificate node. All scans are in lexicographic vertex-name order so
// reported witnesses are byte-for-byte reproducible.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// Palfy's condition: any three vertices span at least one edge; equivalently
// the complement is triangle-free.

/// Three existing, pairwise nonadjacent vertices.
struct PalfyViolation {
  std::array<std::string, 3> triple;
};

/// Lexicographically first independent triple, or nullopt when every triple
/// spans an edge.
inline std::optional<PalfyViolation> check_palfy(const Graph& g) {
  const auto order = sorted_names(g);
  const int n = g.vertex_count();
  std::vector<int> idx;
  idx.reserve(order.size());
  for (const auto& name : order) idx.push_back(g.index_checked(name));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)])) continue;
      for (int k = j + 1; k < n; ++k) {
        if (g.adjacent(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(k)])) continue;
        if (g.adjacent(idx[static_cast<size_t>(j)], idx[static_cast<size_t>(k)])) continue;
        return PalfyViolation{{order[static_cast<size_t>(i)], order[static_cast<size_t>(j)],
                               order[static_cast<size_t>(k)]}};
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Degree-two pair rule: in a graph on >= 5 vertices satisfying Palfy's
// condition, an adjacent pair of degree-two vertices with no common neighbor
// rules the graph out.

struct MarkmainMatch {
  std::string p1, p2;
};

inline std::optional<MarkmainMatch> check_markmain(const Graph& g) {
  if (g.vertex_count() < 5) return std::nullopt;
  if (check_palfy(g)) return std::nullopt;
  const auto order = sorted_names(g);
  for (size_t i = 0; i < order.size(); ++i) {
    const int u = g.index_checked(order[i]);
    if (g.degree(u) != 2) continue;
    for (size_t j = i + 1; j < order.size(); ++j) {
      const int v = g.index_checked(order[j]);
      if (g.degree(v) != 2) continue;
      if (!g.adjacent(u, v)) continue;
      if (g.neighbors_mask(u) & g.neighbors_mask(v)) continue;
      return MarkmainMatch{order[i], order[j]};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Diameter-three partition rho1..rho4 for a base vertex of eccentricity 3.

struct Partition {
  std::string base;
  std::vector<std::string> rho1, rho2, rho3, rho4;  // each name-sorted

  int left_size() const { return static_cast<int>(rho1.size() + rho2.size()); }
  int right_size() const { return static_cast<int>(rho3.size() + rho4.size()); }
};

/// rho4 = vertices at distance 3 from base, rho3 = distance 2, rho2 =
/// neighbors of base adjacent to some rho3 vertex, rho1 = base plus its
/// remaining neighbors. Requires a connected graph and base eccentricity
/// exactly 3.
inline Partition build_partition(const Graph& g, const std::string& base) {
  const int b = g.index_checked(base);
  const DistanceTable dt = distances(g);
  if (!dt.connected()) throw GraphError("graph is not connected");
  if (dt.eccentricity(b) != 3)
    throw GraphError("base vertex " + base + " does not have eccentricity 3");
  std::uint16_t rho3_mask = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dt.at(b, v) == 2) rho3_mask |= static_cast<std::uint16_t>(1u << v);
  Partition p;
  p.base = base;
  for (const auto& name : sorted_names(g)) {
    const int v = g.index_checked(name);
    switch (dt.at(b, v)) {
      case 0:
        p.rho1.push_back(name);
        break;
      case 1:
        if (g.neighbors_mask(v) & rho3_mask)
          p.rho2.push_back(name);
        else
          p.rho1.push_back(name);
        break;
      case 2:
        p.rho3.push_back(name);
        break;
      default:
        p.rho4.push_back(name);
        break;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Cardinality constraints on diameter-three partitions.

struct SassViolation {
  enum class Kind { rho3_too_small, left_exceeds_right, power_bound };
  Kind kind;
  Partition partition;
  // rho3_too_small: left = |rho3|, right = 3 (the required minimum).
  // left_exceeds_right, power_bound: left = |rho1 u rho2|, right = |rho3 u rho4|.
  int left = 0;
  int right = 0;
};

inline const char* to_string(SassViolation::Kind k) {
  switch (k) {
    case SassViolation::Kind::rho3_too_small:
      return "rho3_too_small";
    case SassViolation::Kind::left_exceeds_right:
      return "left_exceeds_right";
    case SassViolation::Kind::power_bound:
      return "power_bound";
  }
  return "?";
}

/// All violated constraints among |rho3| >= 3, |rho1 u rho2| <= |rho3 u rho4|,
/// and |rho3 u rho4| >= 2^|rho1 u rho2|. Empty result = pass.
inline std::vector<SassViolation> check_sass(const Partition& p) {
  std::vector<SassViolation> out;
  const int left = p.left_size();
  const int right = p.right_size();
  if (static_cast<int>(p.rho3.size()) < 3)
    out.push_back({SassViolation::Kind::rho3_too_small, p, static_cast<int>(p.rho3.size()), 3});
  if (left > right)
    out.push_back({SassViolation::Kind::left_exceeds_right, p, left, right});
  if (right < (1 << left))
    out.push_back({SassViolation::Kind::power_bound, p, left, right});
  return out;
}

// ---------------------------------------------------------------------------
// Sylow branching: the subgraphs a degree graph must admit when a normal
// Sylow subgraph exists for vertex p. Each branch drops p with its incident
// edges plus some subset of nearby edges.

enum class SylowEdgeFamily {
  // Candidate edges have at least one endpoint adjacent to p. Broader family
  // means more branches to refute and strictly sounder refutations.
  broad,
  // Candidate edges have both endpoints adjacent to p.
  narrow,
};

inline const char* to_string(SylowEdgeFamily f) {
  return f == SylowEdgeFamily::broad ? "broad" : "narrow";
}

/// Edges of g - p eligible for removal in a branch, sorted lexicographically.
inline std::vector<Edge> sylow_candidate_edges(const Graph& g, const std::string& p,
                                               SylowEdgeFamily family) {
  const int pi = g.index_checked(p);
  std::vector<Edge> out;
  for (const auto& [a, b] : g.edges()) {
    const int u = g.index_checked(a);
    const int v = g.index_checked(b);
    if (u == pi || v == pi) continue;
    const bool ua = g.adjacent(u, pi);
    const bool vb = g.adjacent(v, pi);
    const bool eligible = family == SylowEdgeFamily::broad ? (ua || vb) : (ua && vb);
    if (eligible) out.push_back(make_edge(a, b));
  }
  return out;
}

/// All graphs obtained by deleting p and any subset (including empty) of the
/// candidate edges, deduplicated by canonical key. Tie-break keeps the
/// branch generated by the smallest removal mask, with candidate edges in
/// lexicographic order. Throws BudgetError past max_branches subsets.
inline std::vector<Graph> sylow_branches(const Graph& g, const std::string& p,
                                         SylowEdgeFamily family = SylowEdgeFamily::broad,
                                         std::uint64_t max_branches = 1ull << 20) {
  const auto candidates = sylow_candidate_edges(g, p, family);
  const size_t c = candidates.size();
  if (c >= 63 || (1ull << c) > max_branches)
    throw BudgetError("sylow branch budget exceeded: 2^" + std::to_string(c) + " branches");
  const Graph base = remove(g, {p}, {});
  std::vector<Graph> out;
  std::set<CanonicalKey> seen;
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    std::vector<Edge> cut;
    for (size_t i = 0; i < c; ++i)
      if ((mask >> i) & 1u) cut.push_back(candidates[i]);
    Graph branch = remove(base, {}, cut);
    if (seen.insert(canonical_key(branch)).second) out.push_back(std::move(branch));
  }
  return out;
}

}  // namespace cdg
