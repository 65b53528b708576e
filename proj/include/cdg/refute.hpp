#pragma once

// Refutation engine for connected graphs of diameter exactly three. A graph
// is refuted only when every eccentricity-3 base vertex is eliminated:
// either its partition violates the cardinality constraints, or, for every
// rho3 vertex p, every Sylow branch is itself refuted (by an independent
// triple, component shape, a recursive diameter-3 refutation, or an oracle
// verdict).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "cdg/graph.hpp"
#include "cdg/rules.hpp"
#include "cdg/verdict.hpp"

namespace cdg {

/// Read-only verdict lookup consulted for branch graphs; typically backed by
/// a session's knowledge base. May return nullopt for unseen graphs.
using VerdictOracle = std::function<std::optional<Verdict>(const Graph&)>;

struct RefuteOptions {
  SylowEdgeFamily edge_family = SylowEdgeFamily::broad;
  int sylow_depth = 3;                     // nested branching applications
  std::uint64_t max_branches = 1ull << 20; // per (graph, p)
};

struct RefuteResult {
  CertPtr certificate;  // null = inconclusive
  std::string reason;   // why the refutation gave up
};

inline RefuteResult refute_diameter3(const Graph& g, const VerdictOracle& oracle,
                                     const RefuteOptions& opts = {}, int depth = 0);

namespace detail {

/// Tries to refute one branch graph. Order: independent triple, component
/// shape, recursive diameter-3 refutation, oracle.
inline std::optional<CertLink> refute_branch(const Graph& b, const VerdictOracle& oracle,
                                             const RefuteOptions& opts, int depth,
                                             std::string& why_not) {
  if (auto viol = check_palfy(b)) return CertLink{{}, cert_palfy(*viol)};
  const auto comps = components(b);
  if (comps.size() >= 2) {
    // An independent triple would have been found above, so the shape here
    // is two complete components; those are not refutable by these rules.
    if (oracle) {
      if (auto v = oracle(b); v && v->tag == Verdict::Tag::not_occurs)
        return v->certificate;
    }
    why_not = "branch is two complete components";
    return std::nullopt;
  }
  const DistanceTable dt = distances(b);
  if (dt.diameter() == 3) {
    RefuteResult sub = refute_diameter3(b, oracle, opts, depth + 1);
    if (sub.certificate) return CertLink{{}, sub.certificate};
    why_not = "diameter-3 branch not refuted: " + sub.reason;
    return std::nullopt;
  }
  if (oracle) {
    if (auto v = oracle(b); v && v->tag == Verdict::Tag::not_occurs)
      return v->certificate;
  }
  why_not = "no rule refutes branch";
  return std::nullopt;
}

}  // namespace detail

inline RefuteResult refute_diameter3(const Graph& g, const VerdictOracle& oracle,
                                     const RefuteOptions& opts, int depth) {
  const DistanceTable dt = distances(g);
  if (!dt.connected()) throw GraphError("diameter-3 refutation requires a connected graph");
  if (dt.diameter() != 3) throw GraphError("graph does not have diameter 3");

  Diam3Cert cert;
  cert.family = opts.edge_family;
  for (const auto& base : sorted_names(g)) {
    if (dt.eccentricity(g.index_checked(base)) != 3) continue;
    BaseElimination elim;
    elim.partition = build_partition(g, base);
    elim.violations = check_sass(elim.partition);
    if (elim.violations.empty()) {
      // Partition passes the counting constraints; eliminate the base by
      // refuting every branch for every rho3 alternative.
      if (depth >= opts.sylow_depth)
        return {nullptr, "sylow branching depth cap reached at base " + base};
      for (const auto& p : elim.partition.rho3) {
        SylowAlternative alt;
        alt.p = p;
        for (auto& branch : sylow_branches(g, p, opts.edge_family, opts.max_branches)) {
          std::string why_not;
          auto link = detail::refute_branch(branch, oracle, opts, depth, why_not);
          if (!link)
            return {nullptr, "base " + base + ", p = " + p + ": " + why_not};
          alt.branches.push_back(SylowBranchCase{std::move(branch), std::move(*link)});
        }
        elim.branching.push_back(std::move(alt));
      }
    }
    cert.bases.push_back(std::move(elim));
  }
  return {cert_diam3(std::move(cert)), ""};
}

}  // namespace cdg
