#pragma once

#include <optional>
#include <vector>

#include "sepbox/digraph.hpp"
#include "sepbox/permgroup.hpp"

namespace sepbox {

// Permutations of the vertices of sbp(g1, g2), flattened as in SbpIndex.
// Every constructor checks its result dart by dart and throws
// Error(NotAutomorphism) when an input is not the required map.

/// (a,x,i) -> (a^p1, x^p2, i) for automorphisms p1, p2 of the factors.
Permutation lift_pair(const Digraph& g1, const Digraph& g2, const Permutation& p1, const Permutation& p2);

/// (a,x,i) -> (a^r1, x^r2, 1-i) for reversals r1, r2 of the factors.
Permutation sigma_reversal(const Digraph& g1, const Digraph& g2, const Permutation& r1, const Permutation& r2);

/// (a,x,i) -> (x,a,1-i), an automorphism of sbp(delta, delta).
Permutation tau_swap(const Digraph& delta);
/// (a,x,i) -> (iso^-1(x), iso(a), 1-i) for an isomorphism iso: g1 -> g2.
Permutation tau_swap(const Digraph& g1, const Digraph& g2, const Permutation& iso);

/// (a,x,i) -> (x,a,i), a reversal of sbp(delta, reverse(delta)).
Permutation mu_reversal(const Digraph& delta);
/// (a,x,i) -> (iso^-1(x), iso(a), i) for an isomorphism iso: g1 -> reverse(g2).
Permutation mu_reversal(const Digraph& g1, const Digraph& g2, const Permutation& iso);

struct ExpectedGroup {
  /// Lifted generators of G1 x G2.
  std::vector<Permutation> lifted;
  std::optional<Permutation> sigma;
  std::optional<Permutation> tau;
  std::optional<Permutation> mu;
  /// The whole group on the vertices of sbp(g1, g2).
  PermGroup on_product{0};
  /// Vertices of the component containing (0,0,0), sorted.
  std::vector<Vertex> component;
  /// Setwise stabiliser of that component, renumbered so that vertex k is
  /// component[k].
  PermGroup on_component{0};
};

/// <lifted G1 x G2> plus sigma when both factors are reversible, tau when
/// g1 and g2 are isomorphic and mu when g2 is isomorphic to reverse(g1).
/// Throws Error(HypothesisNotMet) unless G1, G2 are dart-transitive.
ExpectedGroup build_expected_group(const Digraph& g1, const Digraph& g2, const PermGroup& G1, const PermGroup& G2);

/// True when sbp(g1, g2) is disconnected and the factors are not both
/// dart-transitive, so the seeded component need not represent the others.
bool hash_product_warning(const Digraph& g1, const Digraph& g2);

/// Induced permutation of g.darts().
Permutation dart_action(const Digraph& g, const Permutation& p);

struct A2gGroups {
  PermGroup H{0};
  Permutation alpha;
  /// Vertices of cdc(a2d(lambda)) in the component Omega.
  std::vector<Vertex> omega;
  /// psi[v] is the cdc(a2d(lambda)) vertex representing a2d vertex v.
  std::vector<Vertex> psi;
  /// Both act on the vertices of a2d(lambda).
  PermGroup A{0};
  PermGroup B{0};
};

/// The groups A = <H x H, (alpha,alpha), (1,alpha)tau> and B = <A, tau sigma>
/// transported to a2d(lambda). G acts on the vertices of lambda. `alpha`
/// defaults to the first generator of G that swaps the colour classes.
/// Throws Error(HypothesisNotMet) unless lambda is connected, cubic and
/// bipartite and G is transitive on its 2-darts.
A2gGroups build_a2g_groups(const Digraph& lambda, const PermGroup& G, std::optional<Permutation> alpha = {});

/// On cdc(a2d(lambda)): ((x,y),0) -> ((x^g,y),0), ((x,y),1) -> ((x,y^g),1).
Permutation unexpected_symmetry(const Digraph& lambda, const Permutation& g);

/// True when p maps every fibre {((x,y),0), ((x,y),1)} of a double cover
/// onto a fibre.
bool preserves_fibres(const Permutation& p);

}  // namespace sepbox
