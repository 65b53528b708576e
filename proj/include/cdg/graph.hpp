#pragma once

// Immutable labeled simple graphs on at most 16 vertices with exact
// structural queries: shortest-path distances, connected components,
// complement, vertex/edge deletion, and a canonical form that keys
// isomorphism classes for memoized lookups.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdg {

inline constexpr int kMaxVertices = 16;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an engine limit (vertex cap, branch budget, ...) would be
/// exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered pair of vertex names, normalized so first < second.
using Edge = std::pair<std::string, std::string>;

inline Edge make_edge(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

/// Vertex names are restricted to [A-Za-z0-9_]+ so every graph survives a
/// round trip through the text formats.
inline bool valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }

  const std::vector<std::string>& names() const { return names_; }

  const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }

  std::optional<int> index(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Index of `name`, or a GraphError if the vertex does not exist.
  int index_checked(std::string_view name) const {
    auto i = index(name);
    if (!i) throw GraphError("no such vertex: " + std::string(name));
    return *i;
  }

  bool has_vertex(std::string_view name) const { return index_.count(name) > 0; }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
  }

  bool adjacent(std::string_view u, std::string_view v) const {
    return adjacent(index_checked(u), index_checked(v));
  }

  /// Bitmask of neighbors of vertex `v` (bit i set iff i ~ v).
  std::uint16_t neighbors_mask(int v) const { return adj_[static_cast<size_t>(v)]; }

  int degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

  int degree(std::string_view v) const { return degree(index_checked(v)); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  /// All edges as normalized name pairs, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.push_back(make_edge(names_[static_cast<size_t>(u)], names_[static_cast<size_t>(v)]));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_complete() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != n_ - 1) return false;
    return true;
  }

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && adj_ == other.adj_;
  }

  friend Graph build_graph(const std::vector<std::string>& vertices,
                           const std::vector<Edge>& edges);

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::array<std::uint16_t, kMaxVertices> adj_{};
  std::map<std::string, int, std::less<>> index_;
};

/// Builds a graph from explicit vertex and edge lists. Rejects duplicate
/// vertices, duplicate edges, self-loops, undeclared endpoints, malformed
/// names, and more than 16 vertices.
inline Graph build_graph(const std::vector<std::string>& vertices,
                         const std::vector<Edge>& edges) {
  if (vertices.size() > static_cast<size_t>(kMaxVertices))
    throw BudgetError("vertex budget exceeded: " + std::to_string(vertices.size()) +
                      " > " + std::to_string(kMaxVertices));
  Graph g;
  g.n_ = static_cast<int>(vertices.size());
  g.names_ = vertices;
  for (int i = 0; i < g.n_; ++i) {
    const std::string& name = vertices[static_cast<size_t>(i)];
    if (!valid_vertex_name(name))
      throw GraphError("invalid vertex name: \"" + name + "\"");
    if (!g.index_.emplace(name, i).second)
      throw GraphError("duplicate vertex name: " + name);
  }
  for (const Edge& e : edges) {
    auto u = g.index(e.first);
    auto v = g.index(e.second);
    if (!u || !v)
      throw GraphError("edge endpoint not declared: " + (!u ? e.first : e.second));
    if (*u == *v) throw GraphError("self-loop on vertex: " + e.first);
    if (g.adjacent(*u, *v))
      throw GraphError("duplicate edge: " + e.first + " " + e.second);
    g.adj_[static_cast<size_t>(*u)] |= static_cast<std::uint16_t>(1u << *v);
    g.adj_[static_cast<size_t>(*v)] |= static_cast<std::uint16_t>(1u << *u);
  }
  return g;
}

/// Vertex names sorted lexicographically; rule checkers scan in this order
/// so reported witnesses are reproducible.
inline std::vector<std::string> sorted_names(const Graph& g) {
  std::vector<std::string> out = g.names();
  std::sort(out.begin(), out.end());
  return out;
}

/// Induced subgraph on the non-dropped vertices, minus the listed edges.
/// Dropped vertices take their incident edges with them; drop_edges may not
/// touch a dropped vertex. Isolated survivors are retained.
inline Graph remove(const Graph& g, const std::vector<std::string>& drop_vertices,
                    const std::vector<Edge>& drop_edges) {
  std::uint16_t dropped = 0;
  for (const auto& name : drop_vertices) {
    int i = g.index_checked(name);
    if ((dropped >> i) & 1u) throw GraphError("vertex listed twice: " + name);
    dropped |= static_cast<std::uint16_t>(1u << i);
  }
  std::vector<std::pair<int, int>> cut;
  for (const Edge& e : drop_edges) {
    int u = g.index_checked(e.first);
    int v = g.index_checked(e.second);
    if (!g.adjacent(u, v))
      throw GraphError("no such edge: " + e.first + " " + e.second);
    if (((dropped >> u) & 1u) || ((dropped >> v) & 1u))
      throw GraphError("edge touches a dropped vertex: " + e.first + " " + e.second);
    cut.emplace_back(u, v);
  }
  std::vector<std::string> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!((dropped >> v) & 1u)) keep.push_back(g.name(v));
  std::vector<Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if ((dropped >> u) & 1u) continue;
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if ((dropped >> v) & 1u) continue;
      if (!g.adjacent(u, v)) continue;
      bool removed = false;
      for (auto [a, b] : cut)
        if ((a == u && b == v) || (a == v && b == u)) removed = true;
      if (!removed) edges.push_back(make_edge(g.name(u), g.name(v)));
    }
  }
  return build_graph(keep, edges);
}

/// Same vertices, edge present iff absent in `g`.
inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) edges.push_back(make_edge(g.name(u), g.name(v)));
  return build_graph(g.names(), edges);
}

/// Structure-preserving renaming. `mapping` must cover every vertex.
inline Graph relabel(const Graph& g, const std::map<std::string, std::string>& mapping) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(g.vertex_count()));
  for (const auto& old : g.names()) {
    auto it = mapping.find(old);
    if (it == mapping.end()) throw GraphError("relabel map misses vertex: " + old);
    names.push_back(it->second);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v))
        edges.push_back(make_edge(names[static_cast<size_t>(u)], names[static_cast<size_t>(v)]));
  return build_graph(names, edges);
}

// ---------------------------------------------------------------------------
// Distances

class DistanceTable {
 public:
  static constexpr int kInfinite = -1;

  DistanceTable(const Graph& g) : n_(g.vertex_count()), names_(g.names()) {
    for (auto& row : dist_) row.fill(kInfinite);
    for (int s = 0; s < n_; ++s) {
      std::uint16_t visited = static_cast<std::uint16_t>(1u << s);
      std::uint16_t frontier = visited;
      int d = 0;
      dist_[static_cast<size_t>(s)][static_cast<size_t>(s)] = 0;
      while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n_; ++v)
          if ((frontier >> v) & 1u) next |= g.neighbors_mask(v);
        next &= static_cast<std::uint16_t>(~visited);
        ++d;
        for (int v = 0; v < n_; ++v)
          if ((next >> v) & 1u) dist_[static_cast<size_t>(s)][static_cast<size_t>(v)] = d;
        visited |= next;
        frontier = next;
      }
    }
  }

  /// Distance between vertex indices; kInfinite across components.
  int at(int u, int v) const { return dist_[static_cast<size_t>(u)][static_cast<size_t>(v)]; }

  std::optional<int> between(std::string_view u, std::string_view v) const {
    int d = at(find(u), find(v));
    if (d == kInfinite) return std::nullopt;
    return d;
  }

  bool connected() const {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (at(u, v) == kInfinite) return false;
    return true;
  }

  /// Largest finite entry (0 for the empty/one-vertex graph).
  int diameter() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) m = std::max(m, at(u, v));
    return m;
  }

  /// Max distance from v; kInfinite when v cannot reach some vertex.
  int eccentricity(int v) const {
    int m = 0;
    for (int u = 0; u < n_; ++u) {
      if (at(v, u) == kInfinite) return kInfinite;
      m = std::max(m, at(v, u));
    }
    return m;
  }

 private:
  int find(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
      if (names_[static_cast<size_t>(i)] == name) return i;
    throw GraphError("no such vertex: " + std::string(name));
  }

  int n_;
  std::vector<std::string> names_;
  std::array<std::array<int, kMaxVertices>, kMaxVertices> dist_{};
};

/// Exact all-pairs shortest-path distances via per-vertex BFS.
inline DistanceTable distances(const Graph& g) { return DistanceTable(g); }

// ---------------------------------------------------------------------------
// Components

struct Component {
  std::vector<std::string> vertices;  // name-sorted
  std::uint16_t mask = 0;
  bool complete = false;
};

/// Maximal connected vertex sets, ordered by smallest vertex index, each
/// flagged if it induces a complete subgraph.
inline std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  std::uint16_t seen = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if ((seen >> s) & 1u) continue;
    std::uint16_t comp = static_cast<std::uint16_t>(1u << s);
    std::uint16_t frontier = comp;
    while (frontier) {
      std::uint16_t next = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        if ((frontier >> v) & 1u) next |= g.neighbors_mask(v);
      next &= static_cast<std::uint16_t>(~comp);
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    Component c;
    c.mask = comp;
    c.complete = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!((comp >> v) & 1u)) continue;
      c.vertices.push_back(g.name(v));
      const std::uint16_t rest = comp & static_cast<std::uint16_t>(~(1u << v));
      if ((g.neighbors_mask(v) & rest) != rest) c.complete = false;
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

/// Total-order-comparable encoding of an isomorphism class: equal keys iff
/// the graphs are isomorphic.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalForm {
  CanonicalKey key;
  std::vector<int> order;  // order[p] = vertex index at canonical position p
};

namespace detail {

struct CanonState {
  std::uint16_t placed = 0;
  // pattern[v] = adjacency bits of v to the placed prefix, earliest at MSB;
  // zeroed once v itself is placed.
  std::array<std::uint16_t, kMaxVertices> pattern{};
  std::array<std::int8_t, kMaxVertices> seq{};
};

inline bool state_key_less(const CanonState& a, const CanonState& b) {
  if (a.placed != b.placed) return a.placed < b.placed;
  if (a.pattern != b.pattern) return a.pattern < b.pattern;
  return a.seq < b.seq;
}

}  // namespace detail

/// Canonical form: vertices are grouped by the invariant signature
/// (degree, sorted neighbor degrees) into ordered blocks, then a breadth-
/// first search over block-respecting orderings keeps exactly the partial
/// orderings achieving the lexicographically minimal adjacency-row
/// encoding. Equal keys iff isomorphic; exact at this size.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxVertices) throw BudgetError("vertex budget exceeded");
  CanonicalForm out;
  out.key.bytes.push_back(static_cast<char>(n));
  if (n == 0) return out;

  // One refinement pass: signature = (degree, sorted neighbor degrees).
  std::vector<std::vector<int>> sig(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> s{g.degree(v)};
    std::vector<int> nd;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    s.insert(s.end(), nd.begin(), nd.end());
    sig[static_cast<size_t>(v)] = std::move(s);
  }
  std::map<std::vector<int>, std::vector<int>> blocks_by_sig;
  for (int v = 0; v < n; ++v) blocks_by_sig[sig[static_cast<size_t>(v)]].push_back(v);
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of_position;
  for (auto& [s, members] : blocks_by_sig) {
    for (size_t i = 0; i < members.size(); ++i)
      block_of_position.push_back(static_cast<int>(blocks.size()));
    blocks.push_back(members);
  }

  std::vector<detail::CanonState> states(1);
  states[0].seq.fill(-1);
  constexpr size_t kStateBudget = 1u << 21;

  for (int pos = 0; pos < n; ++pos) {
    const auto& block = blocks[static_cast<size_t>(block_of_position[static_cast<size_t>(pos)])];
    std::uint32_t best = UINT32_MAX;
    for (const auto& s : states)
      for (int u : block)
        if (!((s.placed >> u) & 1u)) best = std::min(best, static_cast<std::uint32_t>(s.pattern[static_cast<size_t>(u)]));
    out.key.bytes.push_back(static_cast<char>((best >> 8) & 0xFF));
    out.key.bytes.push_back(static_cast<char>(best & 0xFF));

    std::vector<detail::CanonState> next;
    for (const auto& s : states) {
      for (int u : block) {
        if ((s.placed >> u) & 1u) continue;
        if (s.pattern[static_cast<size_t>(u)] != best) continue;
        detail::CanonState t = s;
        t.placed |= static_cast<std::uint16_t>(1u << u);
        for (int w = 0; w < n; ++w) {
          if ((t.placed >> w) & 1u) {
            t.pattern[static_cast<size_t>(w)] = 0;
          } else {
            t.pattern[static_cast<size_t>(w)] = static_cast<std::uint16_t>(
                (t.pattern[static_cast<size_t>(w)] << 1) | (g.adjacent(w, u) ? 1u : 0u));
          }
        }
        t.seq[static_cast<size_t>(pos)] = static_cast<std::int8_t>(u);
        next.push_back(t);
      }
    }
    std::sort(next.begin(), next.end(), detail::state_key_less);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const detail::CanonState& a, const detail::CanonState& b) {
                             return a.placed == b.placed && a.pattern == b.pattern;
                           }),
               next.end());
    if (next.size() > kStateBudget) throw BudgetError("canonical form state budget exceeded");
    states = std::move(next);
  }

  out.order.resize(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) out.order[static_cast<size_t>(p)] = states[0].seq[static_cast<size_t>(p)];
  return out;
}

inline CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return canonical_key(a) == canonical_key(b);
}

/// Stable identifier of the exact labeled graph (names + edges), used to
/// memoize certificate checks.
inline std::string graph_identity(const Graph& g) {
  std::string id;
  for (const auto& name : g.names()) {
    id += name;
    id += ';';
  }
  id += '|';
  for (const auto& [a, b] : g.edges()) {
    id += a;
    id += '-';
    id += b;
    id += ';';
  }
  return id;
}

}  // namespace cdg
