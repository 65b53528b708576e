#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cdg/enumerate.hpp"
#include "cdg/families.hpp"
#include "cdg/graph.hpp"

using namespace cdg;

namespace {

Graph quick(const std::vector<std::string>& vs, const std::vector<std::pair<std::string, std::string>>& es) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : es) edges.push_back(make_edge(a, b));
  return build_graph(vs, edges);
}

// Exhaustive isomorphism oracle, independent of the canonical-form search.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v = u + 1; v < n && match; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
          match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(int n, std::mt19937& rng) {
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  std::bernoulli_distribution coin(0.5);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back(make_edge(vs[static_cast<size_t>(u)], vs[static_cast<size_t>(v)]));
  return build_graph(vs, es);
}

}  // namespace

TEST_CASE("build_graph basics") {
  Graph k1 = quick({"a"}, {});
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);

  Graph c4 = quick({"a1", "a2", "b1", "b2"},
                   {{"a1", "a2"}, {"b1", "b2"}, {"a1", "b1"}, {"a2", "b2"}});
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent("a1", "a2"));
  CHECK_FALSE(c4.adjacent("a1", "b2"));
}

TEST_CASE("build_graph rejects malformed input") {
  CHECK_THROWS_AS(quick({"a", "b"}, {{"a", "b"}, {"b", "a"}}), GraphError);  // duplicate edge
  CHECK_THROWS_AS(quick({"a", "a"}, {}), GraphError);                       // duplicate vertex
  CHECK_THROWS_AS(quick({"a"}, {{"a", "a"}}), GraphError);                  // self-loop
  CHECK_THROWS_AS(quick({"a"}, {{"a", "b"}}), GraphError);                  // undeclared endpoint
  CHECK_THROWS_AS(quick({""}, {}), GraphError);                             // empty name
  CHECK_THROWS_AS(quick({"a-b"}, {}), GraphError);                          // bad charset
  std::vector<std::string> too_many;
  for (int i = 0; i < 17; ++i) too_many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(build_graph(too_many, {}), BudgetError);
}

TEST_CASE("distances") {
  Graph c4 = gamma(2, 2);
  auto dt = distances(c4);
  CHECK(dt.between("a1", "b2") == 2);  // opposite corners of the 4-cycle
  CHECK(dt.diameter() == 2);

  Graph g = remove(gamma(3, 3), {}, {make_edge("a1", "b1")});
  CHECK(distances(g).between("a1", "b1") == 3);

  Graph split = quick({"a", "b", "c"}, {{"b", "c"}});  // K1 + K2
  CHECK_FALSE(distances(split).between("a", "b").has_value());
  CHECK(distances(split).connected() == false);
}

TEST_CASE("distances are symmetric, satisfy the triangle inequality, and are finite exactly within components") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(2 + trial % 7, rng);
    auto dt = distances(g);
    auto comps = components(g);
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
      CHECK(dt.at(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(dt.at(u, v) == dt.at(v, u));
        bool together = false;
        for (const auto& c : comps)
          if (((c.mask >> u) & 1u) && ((c.mask >> v) & 1u)) together = true;
        CHECK((dt.at(u, v) >= 0) == together);
        for (int w = 0; w < n; ++w) {
          if (dt.at(u, v) < 0 || dt.at(v, w) < 0 || dt.at(u, w) < 0) continue;
          CHECK(dt.at(u, w) <= dt.at(u, v) + dt.at(v, w));
        }
      }
    }
  }
}

TEST_CASE("remove") {
  SECTION("vertex removal keeps isolated survivors") {
    Graph p3 = quick({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Graph rest = remove(p3, {"b"}, {});
    CHECK(rest.vertex_count() == 2);
    CHECK(rest.edge_count() == 0);
  }
  SECTION("gamma(3,3) minus a vertex is gamma(3,2)") {
    CHECK(isomorphic(remove(gamma(3, 3), {"a1"}, {}), gamma(3, 2)));
  }
  SECTION("gamma(4,4) minus a matching edge is connected with diameter 3") {
    Graph g = remove(gamma(4, 4), {}, {make_edge("a1", "b1")});
    auto dt = distances(g);
    CHECK(dt.connected());
    CHECK(dt.diameter() == 3);
  }
  SECTION("identity removal") {
    Graph g = gamma(3, 2);
    CHECK(canonical_key(remove(g, {}, {})) == canonical_key(g));
  }
  SECTION("vertex removal drops exactly the incident edges") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(3 + trial % 6, rng);
      const std::string v = g.name(trial % g.vertex_count());
      Graph rest = remove(g, {v}, {});
      CHECK(rest.vertex_count() == g.vertex_count() - 1);
      for (const auto& [a, b] : rest.edges()) {
        CHECK(a != v);
        CHECK(b != v);
        CHECK(g.adjacent(a, b));
      }
    }
  }
  SECTION("errors") {
    Graph g = gamma(2, 2);
    CHECK_THROWS_AS(remove(g, {"zz"}, {}), GraphError);
    CHECK_THROWS_AS(remove(g, {}, {make_edge("a1", "b2")}), GraphError);      // no such edge
    CHECK_THROWS_AS(remove(g, {"a1"}, {make_edge("a1", "a2")}), GraphError);  // touches dropped
  }
}

TEST_CASE("components") {
  Graph k3k3 = quick({"a", "b", "c", "x", "y", "z"},
                     {{"a", "b"}, {"a", "c"}, {"b", "c"}, {"x", "y"}, {"x", "z"}, {"y", "z"}});
  auto comps = components(k3k3);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].complete);
  CHECK(comps[1].complete);

  CHECK(components(gamma(3, 3)).size() == 1);

  Graph iso3 = quick({"a", "b", "c"}, {});
  CHECK(components(iso3).size() == 3);

  SECTION("component sets partition the vertices and no edge crosses") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = random_graph(2 + trial % 7, rng);
      auto cs = components(g);
      std::set<std::string> all;
      std::uint16_t mask_union = 0;
      for (const auto& c : cs) {
        CHECK((mask_union & c.mask) == 0);
        mask_union |= c.mask;
        for (const auto& v : c.vertices) CHECK(all.insert(v).second);
      }
      CHECK(all.size() == static_cast<size_t>(g.vertex_count()));
      for (const auto& [a, b] : g.edges()) {
        for (const auto& c : cs) {
          const bool ina = std::count(c.vertices.begin(), c.vertices.end(), a) > 0;
          const bool inb = std::count(c.vertices.begin(), c.vertices.end(), b) > 0;
          CHECK(ina == inb);
        }
      }
    }
  }
}

TEST_CASE("complement") {
  Graph c4 = gamma(2, 2);
  auto comps = components(complement(c4));
  REQUIRE(comps.size() == 2);  // two disjoint edges
  CHECK(comps[0].vertices.size() == 2);
  CHECK(comps[1].vertices.size() == 2);

  Graph k5 = complete_graph(5);
  CHECK(complement(k5).edge_count() == 0);

  // complement of gamma(3,3) is the 6-cycle: connected and 2-regular.
  Graph c = complement(gamma(3, 3));
  CHECK(distances(c).connected());
  for (int v = 0; v < c.vertex_count(); ++v) CHECK(c.degree(v) == 2);

  SECTION("involution preserves vertex order and edges") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_graph(1 + trial % 8, rng);
      CHECK(complement(complement(g)) == g);
    }
  }
}

TEST_CASE("canonical keys separate and identify isomorphism classes") {
  Graph path1 = quick({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Graph path2 = quick({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  CHECK(canonical_key(path1) == canonical_key(path2));

  Graph k3 = complete_graph(3);
  CHECK_FALSE(canonical_key(k3) == canonical_key(path1));

  Graph odd_c4 = quick({"pq", "zz", "m1", "k"},
                       {{"pq", "zz"}, {"zz", "m1"}, {"m1", "k"}, {"k", "pq"}});
  CHECK(brute_isomorphic(odd_c4, gamma(2, 2)));
  CHECK(canonical_key(odd_c4) == canonical_key(gamma(2, 2)));
}

TEST_CASE("canonical key is invariant under vertex permutations") {
  std::mt19937 rng(20240801);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_graph(n, rng);
      CanonicalKey key = canonical_key(g);
      std::vector<std::string> perm = g.names();
      std::shuffle(perm.begin(), perm.end(), rng);
      std::map<std::string, std::string> m;
      for (int i = 0; i < n; ++i) m[g.name(i)] = perm[static_cast<size_t>(i)];
      CHECK(canonical_key(relabel(g, m)) == key);
    }
  }
}

TEST_CASE("canonical key equality agrees with the exhaustive oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 5;
    Graph a = random_graph(n, rng);
    Graph b = random_graph(n, rng);
    CHECK(brute_isomorphic(a, b) == (canonical_key(a) == canonical_key(b)));
  }
}

TEST_CASE("canonical form order reproduces the key") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(2 + trial % 6, rng);
    CanonicalForm cf = canonical_form(g);
    // The order is a permutation of all vertices.
    std::set<int> seen(cf.order.begin(), cf.order.end());
    CHECK(seen.size() == static_cast<size_t>(g.vertex_count()));
  }
}

TEST_CASE("nonisomorphic enumeration matches the known class counts") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(nonisomorphic_graphs(n).size() == expected[static_cast<size_t>(n - 1)]);
  CHECK_THROWS_AS(nonisomorphic_graphs(8), BudgetError);
}
