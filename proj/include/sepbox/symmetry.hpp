#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepbox/digraph.hpp"
#include "sepbox/permgroup.hpp"

namespace sepbox {

struct AutResult {
  PermGroup group{0};
  GroupOrder order = 1;
};

/// Full automorphism group of g. When `colours` is non-empty, only
/// colour-preserving automorphisms are returned.
AutResult automorphism_group(const Digraph& g, std::span<const std::uint64_t> colours = {});

/// Second, independent computation: g is turned into a vertex-coloured
/// undirected graph (each dart becomes a coloured path of length 3) and the
/// result is restricted to the original vertices.
AutResult automorphism_group_by_reduction(const Digraph& g);

/// A bijection p with (u,v) in D(g1) iff (p[u],p[v]) in D(g2), or nothing.
/// Every returned map is checked dart by dart.
std::optional<Permutation> find_isomorphism(const Digraph& g1, const Digraph& g2);
bool are_isomorphic(const Digraph& g1, const Digraph& g2);

struct ReversalResult {
  bool exists = false;
  std::optional<Permutation> witness;
};

ReversalResult find_reversal(const Digraph& g);
bool is_reversible(const Digraph& g);

/// Relabelled dart list that is identical for isomorphic digraphs. The
/// search is exponential in the worst case and meant for small inputs.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<Dart> darts;
  /// labelling[v] is the canonical label of vertex v.
  std::vector<Vertex> labelling;

  bool operator==(const CanonicalForm& o) const { return order == o.order && darts == o.darts; }
  bool operator<(const CanonicalForm& o) const {
    return order != o.order ? order < o.order : darts < o.darts;
  }
};

CanonicalForm canonical_form(const Digraph& g);

bool is_dart_transitive(const Digraph& g);

}  // namespace sepbox
