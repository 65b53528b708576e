#pragma once

// Verdicts and their evidence. Occurs carries a replayable construction
// witness; NotOccurs carries a certificate tree whose every node re-checks
// against the subject graph. Certificate subtrees are shared between
// isomorphic subjects through rename links, so nested proofs stay compact
// in memory; serialization expands them.

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cdg/graph.hpp"
#include "cdg/rules.hpp"

namespace cdg {

/// Both Occurs and NotOccurs derived for one isomorphism class.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Witnesses

struct Witness;
using WitnessPtr = std::shared_ptr<const Witness>;

struct Witness {
  enum class Kind { complete_graph, isolated_plus_complete, direct_product, known_example };
  Kind kind;
  int n = 0;                       // complete_graph / isolated_plus_complete
  std::vector<WitnessPtr> factors; // direct_product
  std::string tag;                 // known_example
};

inline const char* to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::complete_graph:
      return "complete_graph";
    case Witness::Kind::isolated_plus_complete:
      return "isolated_plus_complete";
    case Witness::Kind::direct_product:
      return "direct_product";
    case Witness::Kind::known_example:
      return "known_example";
  }
  return "?";
}

inline WitnessPtr witness_complete(int n) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::complete_graph;
  w->n = n;
  return w;
}

inline WitnessPtr witness_isolated_plus_complete(int n) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::isolated_plus_complete;
  w->n = n;
  return w;
}

inline WitnessPtr witness_direct_product(std::vector<WitnessPtr> factors) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::direct_product;
  w->factors = std::move(factors);
  return w;
}

inline WitnessPtr witness_known_example(std::string tag) {
  auto w = std::make_shared<Witness>();
  w->kind = Witness::Kind::known_example;
  w->tag = std::move(tag);
  return w;
}

// ---------------------------------------------------------------------------
// Certificates

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

/// Reference to a certificate node, optionally composed with a vertex
/// renaming. `rename` maps names in the node's frame to names in the
/// subject's frame; empty means identity. Shared nodes let isomorphic
/// subjects reuse one proof.
struct CertLink {
  std::vector<std::pair<std::string, std::string>> rename;
  CertPtr node;
};

struct BadComponentsCert {
  enum class Kind { three_plus_components, noncomplete_component };
  Kind kind;
  std::vector<std::vector<std::string>> components;  // each name-sorted
  std::vector<std::string> noncomplete;              // cited component (kind 2)
};

struct SylowBranchCase {
  Graph graph;
  CertLink cert;
};

struct SylowAlternative {
  std::string p;
  std::vector<SylowBranchCase> branches;
};

/// One eliminated base vertex: either the partition violates the cardinality
/// constraints, or every branch of every rho3 alternative is refuted.
struct BaseElimination {
  Partition partition;
  std::vector<SassViolation> violations;
  std::vector<SylowAlternative> branching;
};

struct Diam3Cert {
  SylowEdgeFamily family = SylowEdgeFamily::broad;
  std::vector<BaseElimination> bases;  // every eccentricity-3 base, name-sorted
};

struct EdgeSubsetCert {
  std::vector<Edge> edges;  // nonempty subset of the vertex's incident edges
  CertLink cert;
};

/// Evidence that one vertex is admissible: its removal and every nonempty
/// incident-edge-subset removal are each certified NotOccurs.
struct AdmissibilityProof {
  std::string vertex;
  CertLink vertex_removal;
  std::vector<EdgeSubsetCert> edge_subsets;  // all 2^deg - 1 subsets
};

struct AllAdmissibleCert {
  std::vector<AdmissibilityProof> proofs;  // one per vertex, name-sorted
};

struct Certificate {
  enum class Rule {
    palfy_violation,
    bad_components,
    markmain,
    diameter3_refutation,
    all_admissible,
  };
  Rule rule;
  PalfyViolation palfy;       // palfy_violation
  BadComponentsCert bad;      // bad_components
  MarkmainMatch markmain;     // markmain
  Diam3Cert diam3;            // diameter3_refutation
  AllAdmissibleCert adm;      // all_admissible
};

inline const char* to_string(Certificate::Rule r) {
  switch (r) {
    case Certificate::Rule::palfy_violation:
      return "palfy_violation";
    case Certificate::Rule::bad_components:
      return "bad_components";
    case Certificate::Rule::markmain:
      return "markmain";
    case Certificate::Rule::diameter3_refutation:
      return "diameter3_refutation";
    case Certificate::Rule::all_admissible:
      return "all_admissible";
  }
  return "?";
}

inline CertPtr cert_palfy(PalfyViolation v) {
  auto c = std::make_shared<Certificate>();
  c->rule = Certificate::Rule::palfy_violation;
  c->palfy = std::move(v);
  return c;
}

inline CertPtr cert_bad_components(BadComponentsCert b) {
  auto c = std::make_shared<Certificate>();
  c->rule = Certificate::Rule::bad_components;
  c->bad = std::move(b);
  return c;
}

inline CertPtr cert_markmain(MarkmainMatch m) {
  auto c = std::make_shared<Certificate>();
  c->rule = Certificate::Rule::markmain;
  c->markmain = std::move(m);
  return c;
}

inline CertPtr cert_diam3(Diam3Cert d) {
  auto c = std::make_shared<Certificate>();
  c->rule = Certificate::Rule::diameter3_refutation;
  c->diam3 = std::move(d);
  return c;
}

inline CertPtr cert_all_admissible(AllAdmissibleCert a) {
  auto c = std::make_shared<Certificate>();
  c->rule = Certificate::Rule::all_admissible;
  c->adm = std::move(a);
  return c;
}

/// Compose an outer renaming with a link's own renaming. `outer` maps the
/// link's subject frame into a new frame.
inline CertLink compose(const std::vector<std::pair<std::string, std::string>>& outer,
                        const CertLink& link) {
  if (outer.empty()) return link;
  if (link.rename.empty()) return CertLink{outer, link.node};
  CertLink out;
  out.node = link.node;
  out.rename.reserve(link.rename.size());
  for (const auto& [from, to] : link.rename) {
    std::string mapped = to;
    for (const auto& [a, b] : outer)
      if (a == to) {
        mapped = b;
        break;
      }
    out.rename.emplace_back(from, mapped);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

struct Verdict {
  enum class Tag { occurs, not_occurs, unknown };
  Tag tag = Tag::unknown;
  WitnessPtr witness;    // occurs
  CertLink certificate;  // not_occurs
  std::string reason;    // unknown
};

inline const char* to_string(Verdict::Tag t) {
  switch (t) {
    case Verdict::Tag::occurs:
      return "occurs";
    case Verdict::Tag::not_occurs:
      return "not_occurs";
    case Verdict::Tag::unknown:
      return "unknown";
  }
  return "?";
}

inline Verdict verdict_occurs(WitnessPtr w) {
  Verdict v;
  v.tag = Verdict::Tag::occurs;
  v.witness = std::move(w);
  return v;
}

inline Verdict verdict_not_occurs(CertLink cert) {
  Verdict v;
  v.tag = Verdict::Tag::not_occurs;
  v.certificate = std::move(cert);
  return v;
}

inline Verdict verdict_not_occurs(CertPtr node) {
  return verdict_not_occurs(CertLink{{}, std::move(node)});
}

inline Verdict verdict_unknown(std::string reason) {
  Verdict v;
  v.tag = Verdict::Tag::unknown;
  v.reason = std::move(reason);
  return v;
}

}  // namespace cdg
