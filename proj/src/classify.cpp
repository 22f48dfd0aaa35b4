#include "sepbox/classify.hpp"

#include <algorithm>

#include "sepbox/error.hpp"
#include "sepbox/products.hpp"

namespace sepbox {

const char* to_string(SymmetryTag tag) noexcept {
  switch (tag) {
    case SymmetryTag::DT: return "DT";
    case SymmetryTag::HT: return "HT";
    case SymmetryTag::SS: return "SS";
    case SymmetryTag::LR: return "LR";
    case SymmetryTag::Other: return "Other";
  }
  return "?";
}

const char* to_string(ExpectedTag tag) noexcept {
  switch (tag) {
    case ExpectedTag::LR: return "LR";
    case ExpectedTag::HT: return "HT";
    case ExpectedTag::SS: return "SS";
    case ExpectedTag::DT: return "DT";
    case ExpectedTag::NotCovered: return "NotCovered";
  }
  return "?";
}

namespace {

bool klein_local_action(const Digraph& g, const PermGroup& G) {
  if (g.order() == 0) return false;
  const auto nbrs = g.out_neighbours(0);
  if (nbrs.size() != 4) return false;
  const std::vector<Vertex> fixed{0};
  std::vector<Permutation> local;
  for (const auto& s : G.pointwise_stabiliser_generators(fixed)) {
    std::vector<Vertex> images(4);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto it = std::find(nbrs.begin(), nbrs.end(), s[nbrs[k]]);
      images[k] = static_cast<Vertex>(it - nbrs.begin());
    }
    local.emplace_back(std::move(images));
  }
  const PermGroup induced(4, std::move(local));
  const auto orbits = induced.orbits();
  return induced.order() == 4 && orbits.size() == 2 && orbits[0].size() == 2;
}

}  // namespace

SymmetryEvidence evidence_for(const Digraph& g, const PermGroup& G) {
  SymmetryEvidence e;
  e.vertex_orbits = G.orbits().size();
  e.edge_orbits = orbit_count(G, Action::Edges, g);
  const auto dart_ids = induced_orbit_ids(G, Action::Darts, g);
  e.dart_orbits = dart_ids.empty() ? 0 : *std::max_element(dart_ids.begin(), dart_ids.end()) + 1;
  e.group_order = G.order();
  e.vs = g.order() == 0 ? GroupOrder(1) : G.stabiliser_order(0);
  std::vector<std::size_t> orbit_size(e.dart_orbits, 0);
  for (auto id : dart_ids) ++orbit_size[id];
  e.dart_stab_nontrivial = std::all_of(orbit_size.begin(), orbit_size.end(),
                                       [&](std::size_t s) { return GroupOrder(s) < e.group_order; });
  e.klein_local = klein_local_action(g, G);
  return e;
}

bool is_g_lr(const Digraph& g, const PermGroup& G) {
  const auto e = evidence_for(g, G);
  return e.vertex_orbits == 1 && e.edge_orbits == 2 && e.dart_orbits == 2 && e.dart_stab_nontrivial;
}

SymmetryType symmetry_type(const Digraph& g) { return symmetry_type(g, automorphism_group(g).group); }

SymmetryType symmetry_type(const Digraph& g, const PermGroup& aut) {
  if (!is_graph(g) || !is_k_valent(g, 4) || !is_connected(g))
    throw Error(ErrorKind::InvalidInput, "symmetry types are defined for connected tetravalent graphs");
  SymmetryType t;
  t.evidence = evidence_for(g, aut);
  const auto& e = t.evidence;
  if (e.dart_orbits == 1) {
    t.tag = SymmetryTag::DT;
  } else if (e.edge_orbits == 1 && e.vertex_orbits == 1) {
    t.tag = SymmetryTag::HT;
  } else if (e.edge_orbits == 1) {
    t.tag = SymmetryTag::SS;
  } else if (e.vertex_orbits == 1 && e.edge_orbits == 2 && e.dart_orbits == 2 && e.dart_stab_nontrivial) {
    t.tag = SymmetryTag::LR;
  } else {
    t.tag = SymmetryTag::Other;
  }
  return t;
}

ExpectedType expected_type(const Digraph& g1, const Digraph& g2) {
  const char* names[] = {"first factor", "second factor"};
  const Digraph* factors[] = {&g1, &g2};
  for (int k = 0; k < 2; ++k) {
    const auto& g = *factors[k];
    const std::string who = names[k];
    if (g.order() == 0 || !is_connected(g))
      throw Error(ErrorKind::HypothesisNotMet, who + " is not connected");
    if (!is_k_valent(g, 2)) throw Error(ErrorKind::HypothesisNotMet, who + " is not 2-valent");
    if (!is_dart_transitive(g)) throw Error(ErrorKind::HypothesisNotMet, who + " is not dart-transitive");
  }
  ExpectedType t;
  t.isomorphic = are_isomorphic(g1, g2);
  t.isomorphic_to_reverse = are_isomorphic(g1, reverse(g2));
  t.first_reversible = is_reversible(g1);
  t.second_reversible = is_reversible(g2);
  if (!t.isomorphic && !t.isomorphic_to_reverse && t.first_reversible && t.second_reversible) {
    t = {ExpectedTag::LR, 1, t.isomorphic, t.isomorphic_to_reverse, t.first_reversible, t.second_reversible};
  } else if (t.isomorphic && !t.isomorphic_to_reverse) {
    t.tag = ExpectedTag::HT;
    t.clause = 2;
  } else if (!t.isomorphic && t.isomorphic_to_reverse) {
    t.tag = ExpectedTag::SS;
    t.clause = 3;
  } else if (t.isomorphic && t.isomorphic_to_reverse) {
    t.tag = ExpectedTag::DT;
    t.clause = 4;
  }
  return t;
}

ConsistencyReport type_consistency(const ExpectedType& expected, const SymmetryType& actual) {
  ConsistencyReport r{expected, actual, true, false};
  const auto a = actual.tag;
  switch (expected.tag) {
    case ExpectedTag::LR:
      r.consistent = a == SymmetryTag::LR || a == SymmetryTag::DT;
      r.unexpected = a == SymmetryTag::DT;
      break;
    case ExpectedTag::DT:
      r.consistent = a == SymmetryTag::DT;
      break;
    case ExpectedTag::HT:
      r.consistent = a == SymmetryTag::HT || a == SymmetryTag::DT;
      r.unexpected = a == SymmetryTag::DT;
      break;
    case ExpectedTag::SS:
      r.consistent = a == SymmetryTag::SS || a == SymmetryTag::HT || a == SymmetryTag::DT;
      r.unexpected = a != SymmetryTag::SS && r.consistent;
      break;
    case ExpectedTag::NotCovered:
      break;
  }
  return r;
}

ConsistencyReport type_consistency(const Digraph& g1, const Digraph& g2) {
  const auto expected = expected_type(g1, g2);
  return type_consistency(expected, symmetry_type(hash_product(g1, g2).graph));
}

}  // namespace sepbox
