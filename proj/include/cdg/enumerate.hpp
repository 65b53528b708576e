#pragma once

// Exhaustive enumeration of graph isomorphism classes on up to 7 vertices,
// plus the batch classification report over them.

#include <cstdint>
#include <exception>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cdg/classifier.hpp"
#include "cdg/graph.hpp"
#include "cdg/rules.hpp"

namespace cdg {

/// All non-isomorphic graphs on exactly n vertices, named v1..vn, sorted by
/// canonical key. Built by extending every (n-1)-vertex representative with
/// one new vertex over all neighbor subsets and deduplicating.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1) throw GraphError("enumeration needs at least one vertex");
  if (n > 7) throw BudgetError("enumeration is supported up to 7 vertices");
  std::vector<Graph> reps = {build_graph({"v1"}, {})};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::pair<CanonicalKey, Graph>> next;
    std::set<CanonicalKey> seen;
    const std::string fresh = "v" + std::to_string(m);
    for (const auto& g : reps) {
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<std::string> vertices = g.names();
        vertices.push_back(fresh);
        std::vector<Edge> edges = g.edges();
        for (int i = 0; i < m - 1; ++i)
          if ((mask >> i) & 1u) edges.push_back(make_edge(g.name(i), fresh));
        Graph h = build_graph(vertices, edges);
        CanonicalKey key = canonical_key(h);
        if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(h));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    reps.clear();
    for (auto& [key, g] : next) reps.push_back(std::move(g));
  }
  return reps;
}

struct EnumerationReport {
  int n = 0;
  int total = 0;
  int palfy_passing = 0;
  int occurs = 0;
  int not_occurs = 0;
  int unknown = 0;
  std::vector<std::string> lines;

  std::string text() const {
    std::string out = "enumerate n=" + std::to_string(n) + "\n";
    out += "graphs: " + std::to_string(total) + "\n";
    out += "palfy_passing: " + std::to_string(palfy_passing) + "\n";
    out += "occurs: " + std::to_string(occurs) + "\n";
    out += "not_occurs: " + std::to_string(not_occurs) + "\n";
    out += "unknown: " + std::to_string(unknown) + "\n";
    for (const auto& line : lines) {
      out += line;
      out += '\n';
    }
    return out;
  }
};

/// Classifies every graph on n vertices that passes the independent-triple
/// filter. Isomorphism classes may be distributed over parallel workers,
/// each with a private session; the merged report is deterministic.
inline EnumerationReport enumerate_graphs(int n, ClassifyOptions opts = {}, int jobs = 1) {
  if (jobs < 1) jobs = 1;
  const std::vector<Graph> reps = nonisomorphic_graphs(n);
  std::vector<const Graph*> passing;
  for (const auto& g : reps)
    if (!check_palfy(g)) passing.push_back(&g);

  std::vector<Verdict> verdicts(passing.size());
  std::vector<KnowledgeBase> bases(static_cast<size_t>(jobs));
  std::vector<std::exception_ptr> failures(static_cast<size_t>(jobs));
  auto work = [&](int w) {
    try {
      Session session(opts);
      for (std::size_t i = static_cast<std::size_t>(w); i < passing.size();
           i += static_cast<std::size_t>(jobs))
        verdicts[i] = classify(*passing[i], session);
      bases[static_cast<size_t>(w)] = session.local();
    } catch (...) {
      failures[static_cast<size_t>(w)] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  // Conflict-checked union of the per-worker bases.
  KnowledgeBase merged;
  for (const auto& kb : bases) merged.merge(kb);

  EnumerationReport report;
  report.n = n;
  report.total = static_cast<int>(reps.size());
  report.palfy_passing = static_cast<int>(passing.size());
  for (std::size_t i = 0; i < passing.size(); ++i) {
    const Graph& g = *passing[i];
    const Verdict& v = verdicts[i];
    std::string via;
    switch (v.tag) {
      case Verdict::Tag::occurs:
        ++report.occurs;
        via = v.witness ? to_string(v.witness->kind) : "?";
        break;
      case Verdict::Tag::not_occurs:
        ++report.not_occurs;
        via = v.certificate.node ? to_string(v.certificate.node->rule) : "?";
        break;
      case Verdict::Tag::unknown:
        ++report.unknown;
        via = "-";
        break;
    }
    std::string line = "graph " + std::to_string(i + 1) + ": v=" + std::to_string(g.vertex_count()) +
                       " e=" + std::to_string(g.edge_count()) + " edges=(";
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k) line += ' ';
      line += edges[k].first + "-" + edges[k].second;
    }
    line += ") verdict=";
    line += to_string(v.tag);
    line += " via=" + via;
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace cdg
