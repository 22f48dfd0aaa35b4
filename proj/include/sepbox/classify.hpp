#pragma once

#include <optional>
#include <string>

#include "sepbox/digraph.hpp"
#include "sepbox/permgroup.hpp"
#include "sepbox/symmetry.hpp"

namespace sepbox {

enum class SymmetryTag { DT, HT, SS, LR, Other };

struct SymmetryEvidence {
  std::size_t vertex_orbits = 0;
  std::size_t edge_orbits = 0;
  std::size_t dart_orbits = 0;
  GroupOrder group_order = 1;
  /// Order of the stabiliser of vertex 0 (equals |G|/|V| when transitive).
  GroupOrder vs = 1;
  /// Every dart orbit has a non-trivial stabiliser.
  bool dart_stab_nontrivial = false;
  /// The stabiliser of vertex 0 induces the Klein 4-group with two orbits
  /// of size 2 on the neighbours.
  bool klein_local = false;
};

struct SymmetryType {
  SymmetryTag tag = SymmetryTag::Other;
  SymmetryEvidence evidence;
};

const char* to_string(SymmetryTag tag) noexcept;

/// Orbit evidence for a group G of automorphisms of the graph g.
SymmetryEvidence evidence_for(const Digraph& g, const PermGroup& G);

/// G is vertex-transitive with two orbits on edges and two on darts, and
/// dart stabilisers are non-trivial. Throws Error(NotAutomorphism) if G is
/// not a group of automorphisms of g.
bool is_g_lr(const Digraph& g, const PermGroup& G);

/// Classification under the full automorphism group. Throws
/// Error(InvalidInput) unless g is a connected tetravalent graph.
SymmetryType symmetry_type(const Digraph& g);
SymmetryType symmetry_type(const Digraph& g, const PermGroup& aut);

enum class ExpectedTag { LR, HT, SS, DT, NotCovered };
const char* to_string(ExpectedTag tag) noexcept;

struct ExpectedType {
  ExpectedTag tag = ExpectedTag::NotCovered;
  /// 1..4 for the clause that fired, 0 when none did.
  int clause = 0;
  bool isomorphic = false;
  bool isomorphic_to_reverse = false;
  bool first_reversible = false;
  bool second_reversible = false;
};

/// Expected symmetry type of the product of two connected 2-valent
/// dart-transitive digraphs. Throws Error(HypothesisNotMet) naming the failed
/// hypothesis otherwise.
ExpectedType expected_type(const Digraph& g1, const Digraph& g2);

struct ConsistencyReport {
  ExpectedType expected;
  SymmetryType actual;
  /// The actual type is one the expected symmetries allow.
  bool consistent = true;
  /// The actual type is strictly more symmetric than expected.
  bool unexpected = false;
};

ConsistencyReport type_consistency(const Digraph& g1, const Digraph& g2);
ConsistencyReport type_consistency(const ExpectedType& expected, const SymmetryType& actual);

}  // namespace sepbox
