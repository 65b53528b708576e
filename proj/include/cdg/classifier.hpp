#pragma once

// The verdict engine: construction-based Occurs witnesses, the
// admissibility recursion, certificate production, memoization keyed by
// canonical form, and an independent certificate verifier that re-derives
// every claim from scratch.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cdg/families.hpp"
#include "cdg/graph.hpp"
#include "cdg/refute.hpp"
#include "cdg/rules.hpp"
#include "cdg/verdict.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// Knowledge base: memo from canonical keys to verdicts. Entries are immutable
// once written; equal keys must carry equal verdict tags.

class KnowledgeBase {
 public:
  struct Entry {
    Verdict verdict;
    // Vertex names of the classified representative in canonical position
    // order; queries on isomorphic graphs rename certificates through it.
    std::vector<std::string> canonical_names;
  };

  const Entry* find(const CanonicalKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void insert(const CanonicalKey& key, Entry entry) {
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      if (it->second.verdict.tag != entry.verdict.tag)
        throw InconsistencyError(std::string("conflicting verdicts for one isomorphism class: ") +
                                 to_string(it->second.verdict.tag) + " vs " +
                                 to_string(entry.verdict.tag));
      return;  // first write wins
    }
    entries_.emplace(key, std::move(entry));
  }

  /// Conflict-checked union; the other base's new entries are copied in.
  void merge(const KnowledgeBase& other) {
    for (const auto& [key, entry] : other.entries_) insert(key, entry);
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<CanonicalKey, Entry> entries_;
};

struct ClassifyOptions {
  SylowEdgeFamily edge_family = SylowEdgeFamily::broad;
  int sylow_depth = 3;
  std::uint64_t max_branches = 1ull << 20;
};

struct SessionStats {
  std::uint64_t lookups = 0;
  std::uint64_t hits = 0;
  std::uint64_t classified = 0;
};

/// Built-in Occurs entries: complete graphs, an isolated vertex plus a
/// clique, and the 4-cycle gamma(2,2) with its direct-product witness.
inline std::shared_ptr<const KnowledgeBase> standard_seed_base();

/// A classification session owns a private mutable knowledge base and may
/// consult a shared read-only seed base. Sessions are independent; run one
/// per worker and merge afterwards.
class Session {
 public:
  Session() : Session(ClassifyOptions{}) {}
  explicit Session(ClassifyOptions opts)
      : options(opts), seeds_(standard_seed_base()) {}
  Session(std::shared_ptr<const KnowledgeBase> seeds, ClassifyOptions opts)
      : options(opts), seeds_(std::move(seeds)) {}

  std::optional<Verdict> lookup(const Graph& g, const CanonicalForm& cf) {
    ++stats.lookups;
    const KnowledgeBase::Entry* entry = local_.find(cf.key);
    if (!entry && seeds_) entry = seeds_->find(cf.key);
    if (!entry) return std::nullopt;
    ++stats.hits;
    Verdict v = entry->verdict;
    if (v.tag == Verdict::Tag::not_occurs) {
      std::vector<std::pair<std::string, std::string>> rename;
      bool identity = true;
      for (std::size_t p = 0; p < entry->canonical_names.size(); ++p) {
        const std::string& from = entry->canonical_names[p];
        const std::string& to = g.name(cf.order[p]);
        if (from != to) identity = false;
        rename.emplace_back(from, to);
      }
      if (!identity) v.certificate = compose(rename, v.certificate);
    }
    return v;
  }

  void remember(const Graph& g, const CanonicalForm& cf, const Verdict& v) {
    KnowledgeBase::Entry entry;
    entry.verdict = v;
    entry.canonical_names.reserve(cf.order.size());
    for (int p : cf.order) entry.canonical_names.push_back(g.name(p));
    local_.insert(cf.key, std::move(entry));
  }

  KnowledgeBase& local() { return local_; }
  const KnowledgeBase& local() const { return local_; }
  const KnowledgeBase* seeds() const { return seeds_.get(); }

  ClassifyOptions options;
  SessionStats stats;

 private:
  std::shared_ptr<const KnowledgeBase> seeds_;
  KnowledgeBase local_;
};

// ---------------------------------------------------------------------------
// Construction-based witnesses

namespace detail {

inline Graph induced(const Graph& g, const std::vector<std::string>& keep) {
  std::vector<std::string> drop;
  for (const auto& name : g.names()) {
    bool kept = false;
    for (const auto& k : keep)
      if (k == name) kept = true;
    if (!kept) drop.push_back(name);
  }
  return remove(g, drop, {});
}

}  // namespace detail

/// Witness when g is complete, is an isolated vertex plus a clique, or is a
/// join of graphs that themselves have witnesses. Null when no construction
/// applies.
inline WitnessPtr occurs_by_construction(const Graph& g) {
  if (g.vertex_count() == 0) return nullptr;
  if (g.is_complete()) return witness_complete(g.vertex_count());
  const auto comps = components(g);
  if (comps.size() == 2 && comps[0].complete && comps[1].complete) {
    const auto s0 = comps[0].vertices.size();
    const auto s1 = comps[1].vertices.size();
    if (s0 == 1 || s1 == 1)
      return witness_isolated_plus_complete(static_cast<int>(std::max(s0, s1)));
    return nullptr;
  }
  if (comps.size() >= 2) return nullptr;
  // Connected and not complete: a join shows up as a disconnected complement.
  const auto cc = components(complement(g));
  if (cc.size() < 2) return nullptr;
  std::vector<Graph> factors;
  factors.reserve(cc.size());
  for (const auto& comp : cc) factors.push_back(detail::induced(g, comp.vertices));
  std::sort(factors.begin(), factors.end(), [](const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return a.vertex_count() > b.vertex_count();
    return sorted_names(a).front() < sorted_names(b).front();
  });
  std::vector<WitnessPtr> ws;
  ws.reserve(factors.size());
  for (const auto& f : factors) {
    auto w = occurs_by_construction(f);
    if (!w) return nullptr;
    ws.push_back(std::move(w));
  }
  return witness_direct_product(std::move(ws));
}

// ---------------------------------------------------------------------------
// Classification

inline Verdict classify(const Graph& g, Session& session);

/// The first subgraph of an admissibility sweep not proved NotOccurs.
struct NotAdmissible {
  std::string vertex;
  bool vertex_removed = false;      // true: removing the vertex itself
  std::vector<Edge> removed_edges;  // otherwise: the offending edge subset
  Verdict verdict;
};

using AdmissibleResult = std::variant<AdmissibilityProof, NotAdmissible>;

inline std::string describe(const NotAdmissible& na) {
  std::string what;
  if (na.vertex_removed) {
    what = "removing vertex " + na.vertex;
  } else {
    what = "removing edges {";
    for (std::size_t i = 0; i < na.removed_edges.size(); ++i) {
      if (i) what += ", ";
      what += na.removed_edges[i].first + "-" + na.removed_edges[i].second;
    }
    what += "}";
  }
  std::string verdict = to_string(na.verdict.tag);
  if (na.verdict.tag == Verdict::Tag::unknown && !na.verdict.reason.empty())
    verdict += " (" + na.verdict.reason + ")";
  return "vertex " + na.vertex + " is not admissible: " + what +
         " yields a graph classified " + verdict;
}

/// Classifies the vertex-removal subgraph and every nonempty incident-edge
/// subset removal. Subsets run in increasing size with an independent-triple
/// pre-screen, since most multi-edge removals die instantly.
inline AdmissibleResult admissible(const Graph& g, const std::string& v, Session& session) {
  g.index_checked(v);
  AdmissibilityProof proof;
  proof.vertex = v;
  {
    const Graph gv = remove(g, {v}, {});
    Verdict verdict = classify(gv, session);
    if (verdict.tag != Verdict::Tag::not_occurs)
      return NotAdmissible{v, true, {}, std::move(verdict)};
    proof.vertex_removal = verdict.certificate;
  }
  std::vector<Edge> incident;
  for (const auto& e : g.edges())
    if (e.first == v || e.second == v) incident.push_back(e);
  const std::size_t d = incident.size();
  std::vector<std::uint32_t> masks;
  masks.reserve((1u << d) - 1);
  for (std::uint32_t m = 1; m < (1u << d); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (std::uint32_t mask : masks) {
    std::vector<Edge> subset;
    for (std::size_t i = 0; i < d; ++i)
      if ((mask >> i) & 1u) subset.push_back(incident[i]);
    const Graph gd = remove(g, {}, subset);
    CertLink cert;
    if (auto viol = check_palfy(gd)) {
      cert = CertLink{{}, cert_palfy(*viol)};
    } else {
      Verdict verdict = classify(gd, session);
      if (verdict.tag != Verdict::Tag::not_occurs)
        return NotAdmissible{v, false, subset, std::move(verdict)};
      cert = verdict.certificate;
    }
    proof.edge_subsets.push_back(EdgeSubsetCert{std::move(subset), std::move(cert)});
  }
  return proof;
}

namespace detail {

inline Verdict classify_fresh(const Graph& g, Session& session) {
  if (auto viol = check_palfy(g)) return verdict_not_occurs(cert_palfy(*viol));
  const auto comps = components(g);
  if (comps.size() >= 2) {
    // An independent triple was not found, so these are exactly two complete
    // components. Only the isolated-vertex-plus-clique shape is constructible
    // here; other pairs are outside the rule set.
    if (auto w = occurs_by_construction(g)) return verdict_occurs(std::move(w));
    return verdict_unknown("two complete components of sizes " +
                           std::to_string(comps[0].vertices.size()) + " and " +
                           std::to_string(comps[1].vertices.size()) +
                           "; no rule decides this shape");
  }
  if (auto w = occurs_by_construction(g)) return verdict_occurs(std::move(w));
  if (auto mm = check_markmain(g)) return verdict_not_occurs(cert_markmain(*mm));
  if (distances(g).diameter() == 3) {
    RefuteOptions ropts{session.options.edge_family, session.options.sylow_depth,
                        session.options.max_branches};
    VerdictOracle oracle = [&session](const Graph& b) -> std::optional<Verdict> {
      return session.lookup(b, canonical_form(b));
    };
    RefuteResult r = refute_diameter3(g, oracle, ropts, 0);
    if (r.certificate) return verdict_not_occurs(r.certificate);
  }
  AllAdmissibleCert all;
  for (const auto& name : sorted_names(g)) {
    AdmissibleResult res = admissible(g, name, session);
    if (auto* na = std::get_if<NotAdmissible>(&res)) return verdict_unknown(describe(*na));
    all.proofs.push_back(std::move(std::get<AdmissibilityProof>(res)));
  }
  return verdict_not_occurs(cert_all_admissible(std::move(all)));
}

}  // namespace detail

/// Deterministic rule pipeline with memoization: knowledge-base lookup,
/// independent-triple check, component shape, construction witnesses, the
/// degree-two pair rule, diameter-3 refutation, then the admissibility
/// sweep. Unknown is a first-class result; the engine never guesses.
inline Verdict classify(const Graph& g, Session& session) {
  if (g.vertex_count() == 0)
    throw GraphError("occurrence is undefined for the empty graph");
  const CanonicalForm cf = canonical_form(g);
  if (auto hit = session.lookup(g, cf)) return *hit;
  Verdict v = detail::classify_fresh(g, session);
  session.remember(g, cf, v);
  ++session.stats.classified;
  return v;
}

// ---------------------------------------------------------------------------
// Witness replay

/// Rebuilds a graph from a witness by running the family constructors.
/// Direct-product factors are prefixed f1_, f2_, ... to keep names disjoint.
inline Graph replay_witness(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::complete_graph:
      return complete_graph(w.n);
    case Witness::Kind::isolated_plus_complete:
      return isolated_plus_complete(w.n);
    case Witness::Kind::known_example:
      if (w.tag == "gamma22") return gamma(2, 2);
      throw GraphError("unknown example tag: " + w.tag);
    case Witness::Kind::direct_product: {
      if (w.factors.size() < 2)
        throw GraphError("direct product witness needs at least two factors");
      std::optional<Graph> acc;
      for (std::size_t i = 0; i < w.factors.size(); ++i) {
        Graph f = replay_witness(*w.factors[i]);
        std::map<std::string, std::string> prefix;
        for (const auto& name : f.names())
          prefix[name] = "f" + std::to_string(i + 1) + "_" + name;
        Graph renamed = relabel(f, prefix);
        acc = acc ? direct_product(*acc, renamed) : renamed;
      }
      return *acc;
    }
  }
  throw GraphError("malformed witness");
}

// ---------------------------------------------------------------------------
// Independent verification

struct VerifyResult {
  bool valid = false;
  std::string reason;
};

struct VerifyOptions {
  std::uint64_t max_branches = 1ull << 20;
};

namespace detail {

struct VerifyContext {
  VerifyOptions opts;
  // (node, exact labeled subject) pairs already checked; shared certificate
  // nodes are re-verified once per representative.
  std::set<std::pair<const Certificate*, std::string>> done;
};

inline VerifyResult ok() { return {true, ""}; }
inline VerifyResult bad(std::string reason) { return {false, std::move(reason)}; }

inline VerifyResult verify_link(const CertLink& link, const Graph& subject, VerifyContext& ctx);

inline VerifyResult verify_palfy(const PalfyViolation& v, const Graph& h) {
  const auto& t = v.triple;
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
    return bad("cited triple repeats a vertex");
  for (const auto& name : t)
    if (!h.has_vertex(name)) return bad("cited triple names unknown vertex " + name);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (h.adjacent(t[static_cast<size_t>(i)], t[static_cast<size_t>(j)]))
        return bad("cited triple spans the edge " + t[static_cast<size_t>(i)] + "-" + t[static_cast<size_t>(j)]);
  return ok();
}

inline VerifyResult verify_bad_components(const BadComponentsCert& b, const Graph& h) {
  auto comps = components(h);
  std::vector<std::vector<std::string>> actual;
  for (auto& c : comps) actual.push_back(c.vertices);
  std::sort(actual.begin(), actual.end());
  std::vector<std::vector<std::string>> cited = b.components;
  std::sort(cited.begin(), cited.end());
  if (actual != cited) return bad("cited components do not match the graph");
  if (b.kind == BadComponentsCert::Kind::three_plus_components) {
    if (comps.size() < 3) return bad("graph has fewer than three components");
    return ok();
  }
  if (comps.size() < 2) return bad("graph is connected");
  for (const auto& c : comps)
    if (c.vertices == b.noncomplete)
      return c.complete ? bad("cited component is complete") : ok();
  return bad("cited noncomplete component not found");
}

inline VerifyResult verify_markmain(const MarkmainMatch& m, const Graph& h) {
  if (h.vertex_count() < 5) return bad("degree-two pair rule needs at least 5 vertices");
  if (m.p1 == m.p2) return bad("cited pair repeats a vertex");
  if (!h.has_vertex(m.p1) || !h.has_vertex(m.p2)) return bad("cited pair names unknown vertex");
  if (check_palfy(h)) return bad("graph has an independent triple");
  const int u = h.index_checked(m.p1);
  const int v = h.index_checked(m.p2);
  if (h.degree(u) != 2 || h.degree(v) != 2) return bad("cited vertices are not both degree two");
  if (!h.adjacent(u, v)) return bad("cited vertices are not adjacent");
  if (h.neighbors_mask(u) & h.neighbors_mask(v)) return bad("cited vertices share a neighbor");
  return ok();
}

inline bool same_partition(const Partition& a, const Partition& b) {
  return a.base == b.base && a.rho1 == b.rho1 && a.rho2 == b.rho2 && a.rho3 == b.rho3 &&
         a.rho4 == b.rho4;
}

inline VerifyResult verify_diam3(const Diam3Cert& c, const Graph& h, VerifyContext& ctx) {
  const DistanceTable dt = distances(h);
  if (!dt.connected()) return bad("graph is not connected");
  if (dt.diameter() != 3) return bad("graph does not have diameter 3");
  std::vector<std::string> bases;
  for (const auto& name : sorted_names(h))
    if (dt.eccentricity(h.index_checked(name)) == 3) bases.push_back(name);
  if (c.bases.size() != bases.size()) return bad("certificate does not cover every eccentricity-3 base");
  std::map<std::string, const BaseElimination*> by_base;
  for (const auto& elim : c.bases)
    if (!by_base.emplace(elim.partition.base, &elim).second)
      return bad("base " + elim.partition.base + " eliminated twice");
  for (const auto& base : bases) {
    auto it = by_base.find(base);
    if (it == by_base.end()) return bad("base " + base + " is not eliminated");
    const BaseElimination& elim = *it->second;
    Partition rebuilt = build_partition(h, base);
    if (!same_partition(rebuilt, elim.partition))
      return bad("stored partition for base " + base + " does not match the graph");
    if (!elim.violations.empty()) {
      if (!elim.branching.empty())
        return bad("base " + base + " mixes violations with branching");
      for (const auto& v : elim.violations) {
        if (!same_partition(v.partition, rebuilt))
          return bad("violation partition for base " + base + " does not match");
        switch (v.kind) {
          case SassViolation::Kind::rho3_too_small:
            if (v.left != static_cast<int>(rebuilt.rho3.size()) || v.right != 3 || v.left >= 3)
              return bad("rho3_too_small numbers do not re-check for base " + base);
            break;
          case SassViolation::Kind::left_exceeds_right:
            if (v.left != rebuilt.left_size() || v.right != rebuilt.right_size() ||
                v.left <= v.right)
              return bad("left_exceeds_right numbers do not re-check for base " + base);
            break;
          case SassViolation::Kind::power_bound:
            if (v.left != rebuilt.left_size() || v.right != rebuilt.right_size() ||
                v.right >= (1 << v.left))
              return bad("power_bound numbers do not re-check for base " + base);
            break;
        }
      }
      continue;
    }
    // No violations: the base must be eliminated through branching over the
    // whole of rho3.
    if (elim.branching.size() != rebuilt.rho3.size())
      return bad("base " + base + " does not branch over every rho3 vertex");
    std::map<std::string, const SylowAlternative*> by_p;
    for (const auto& alt : elim.branching)
      if (!by_p.emplace(alt.p, &alt).second)
        return bad("base " + base + ": vertex " + alt.p + " branched twice");
    for (const auto& p : rebuilt.rho3) {
      auto ait = by_p.find(p);
      if (ait == by_p.end()) return bad("base " + base + ": rho3 vertex " + p + " not branched");
      const SylowAlternative& alt = *ait->second;
      std::vector<Graph> regen;
      try {
        regen = sylow_branches(h, alt.p, c.family, ctx.opts.max_branches);
      } catch (const BudgetError& e) {
        return bad(std::string("branch regeneration failed: ") + e.what());
      }
      if (regen.size() != alt.branches.size())
        return bad("base " + base + ", p = " + alt.p + ": branch count mismatch");
      // Refutations are isomorphism-class claims, and relabeling shifts which
      // representative the deduplication keeps, so stored branches are matched
      // to regenerated ones by canonical key. The list is pairwise
      // non-isomorphic, making the match unambiguous; each stored certificate
      // is checked against its own stored graph.
      std::vector<CanonicalKey> stored_keys;
      stored_keys.reserve(alt.branches.size());
      for (const auto& br : alt.branches) stored_keys.push_back(canonical_key(br.graph));
      std::vector<bool> used(alt.branches.size(), false);
      for (const auto& gen : regen) {
        const CanonicalKey gen_key = canonical_key(gen);
        bool matched = false;
        for (std::size_t k = 0; k < alt.branches.size(); ++k) {
          if (used[k] || !(stored_keys[k] == gen_key)) continue;
          used[k] = true;
          VerifyResult r = verify_link(alt.branches[k].cert, alt.branches[k].graph, ctx);
          if (!r.valid)
            return bad("base " + base + ", p = " + alt.p + ", branch " + std::to_string(k) +
                       ": " + r.reason);
          matched = true;
          break;
        }
        if (!matched)
          return bad("base " + base + ", p = " + alt.p + ": a generated branch has no certificate");
      }
    }
  }
  return ok();
}

inline VerifyResult verify_all_admissible(const AllAdmissibleCert& c, const Graph& h,
                                          VerifyContext& ctx) {
  const auto order = sorted_names(h);
  if (c.proofs.size() != order.size()) return bad("certificate does not cover every vertex");
  std::map<std::string, const AdmissibilityProof*> by_vertex;
  for (const auto& proof : c.proofs)
    if (!by_vertex.emplace(proof.vertex, &proof).second)
      return bad("vertex " + proof.vertex + " proved twice");
  for (const auto& vertex : order) {
    auto it = by_vertex.find(vertex);
    if (it == by_vertex.end()) return bad("vertex " + vertex + " has no admissibility proof");
    const AdmissibilityProof& proof = *it->second;
    const Graph gv = remove(h, {proof.vertex}, {});
    VerifyResult r = verify_link(proof.vertex_removal, gv, ctx);
    if (!r.valid) return bad("vertex " + proof.vertex + " removal: " + r.reason);
    std::vector<Edge> incident;
    for (const auto& e : h.edges())
      if (e.first == proof.vertex || e.second == proof.vertex) incident.push_back(e);
    const std::size_t d = incident.size();
    if (proof.edge_subsets.size() != (1u << d) - 1)
      return bad("vertex " + proof.vertex + ": expected " + std::to_string((1u << d) - 1) +
                 " edge subsets, certificate has " + std::to_string(proof.edge_subsets.size()));
    std::set<std::vector<Edge>> seen;
    for (const auto& sub : proof.edge_subsets) {
      if (sub.edges.empty()) return bad("vertex " + proof.vertex + ": empty edge subset");
      std::vector<Edge> norm = sub.edges;
      std::sort(norm.begin(), norm.end());
      for (const auto& e : norm) {
        bool found = false;
        for (const auto& inc : incident)
          if (inc == e) found = true;
        if (!found)
          return bad("vertex " + proof.vertex + ": subset cites non-incident edge " + e.first +
                     "-" + e.second);
      }
      if (!seen.insert(norm).second)
        return bad("vertex " + proof.vertex + ": duplicate edge subset");
      Graph gd;
      try {
        gd = remove(h, {}, sub.edges);
      } catch (const GraphError& e) {
        return bad("vertex " + proof.vertex + ": " + e.what());
      }
      VerifyResult r2 = verify_link(sub.cert, gd, ctx);
      if (!r2.valid) return bad("vertex " + proof.vertex + " edge subset: " + r2.reason);
    }
    // d distinct nonempty subsets of d edges with the right count cover all.
  }
  return ok();
}

inline VerifyResult verify_node(const Certificate& cert, const Graph& h, VerifyContext& ctx) {
  switch (cert.rule) {
    case Certificate::Rule::palfy_violation:
      return verify_palfy(cert.palfy, h);
    case Certificate::Rule::bad_components:
      return verify_bad_components(cert.bad, h);
    case Certificate::Rule::markmain:
      return verify_markmain(cert.markmain, h);
    case Certificate::Rule::diameter3_refutation:
      return verify_diam3(cert.diam3, h, ctx);
    case Certificate::Rule::all_admissible:
      return verify_all_admissible(cert.adm, h, ctx);
  }
  return bad("unknown certificate rule");
}

inline VerifyResult verify_link(const CertLink& link, const Graph& subject, VerifyContext& ctx) {
  if (!link.node) return bad("missing certificate node");
  const Graph* target = &subject;
  Graph relabeled;
  if (!link.rename.empty()) {
    if (link.rename.size() != static_cast<std::size_t>(subject.vertex_count()))
      return bad("rename does not cover the subject");
    std::map<std::string, std::string> inverse;
    std::set<std::string> froms;
    for (const auto& [from, to] : link.rename) {
      if (!froms.insert(from).second) return bad("rename maps vertex " + from + " twice");
      if (!subject.has_vertex(to)) return bad("rename targets unknown vertex " + to);
      if (!inverse.emplace(to, from).second) return bad("rename collapses two vertices onto " + to);
    }
    try {
      relabeled = relabel(subject, inverse);
    } catch (const GraphError& e) {
      return bad(std::string("rename rejected: ") + e.what());
    }
    target = &relabeled;
  }
  const auto memo_key = std::make_pair(link.node.get(), graph_identity(*target));
  if (ctx.done.count(memo_key)) return ok();
  VerifyResult r = verify_node(*link.node, *target, ctx);
  if (r.valid) ctx.done.insert(memo_key);
  return r;
}

}  // namespace detail

/// Re-derives every certificate claim against g from scratch; never consults
/// a knowledge base. Witnesses are replayed and isomorphism-checked. Unknown
/// verdicts claim nothing and are vacuously valid.
inline VerifyResult verify_certificate(const Graph& g, const Verdict& v,
                                       VerifyOptions opts = {}) {
  switch (v.tag) {
    case Verdict::Tag::unknown:
      return detail::ok();
    case Verdict::Tag::occurs: {
      if (!v.witness) return detail::bad("occurs verdict carries no witness");
      try {
        const Graph replayed = replay_witness(*v.witness);
        if (canonical_key(replayed) == canonical_key(g)) return detail::ok();
        return detail::bad("replayed witness is not isomorphic to the subject");
      } catch (const std::exception& e) {
        return detail::bad(std::string("witness replay failed: ") + e.what());
      }
    }
    case Verdict::Tag::not_occurs: {
      detail::VerifyContext ctx{opts, {}};
      return detail::verify_link(v.certificate, g, ctx);
    }
  }
  return detail::bad("malformed verdict");
}

inline std::shared_ptr<const KnowledgeBase> standard_seed_base() {
  static const std::shared_ptr<const KnowledgeBase> base = [] {
    auto kb = std::make_shared<KnowledgeBase>();
    auto add = [&kb](const Graph& g, Verdict v) {
      const CanonicalForm cf = canonical_form(g);
      KnowledgeBase::Entry entry;
      entry.verdict = std::move(v);
      for (int p : cf.order) entry.canonical_names.push_back(g.name(p));
      kb->insert(cf.key, std::move(entry));
    };
    for (int n = 1; n <= kMaxVertices; ++n)
      add(complete_graph(n), verdict_occurs(witness_complete(n)));
    for (int n = 1; n + 1 <= kMaxVertices; ++n)
      add(isolated_plus_complete(n), verdict_occurs(witness_isolated_plus_complete(n)));
    add(gamma(2, 2), verdict_occurs(witness_direct_product(
                         {witness_isolated_plus_complete(1), witness_isolated_plus_complete(1)})));
    return std::shared_ptr<const KnowledgeBase>(std::move(kb));
  }();
  return base;
}

}  // namespace cdg
