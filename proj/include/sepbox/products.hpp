#pragma once

#include <cstdint>
#include <vector>

#include "sepbox/digraph.hpp"

namespace sepbox {

/// Flat index of SBP vertices (a, x, i): ((a * n2) + x) * 2 + i.
struct SbpIndex {
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  struct Triple {
    Vertex a;
    Vertex x;
    int bit;
    bool operator==(const Triple&) const = default;
  };

  std::size_t size() const { return 2 * n1 * n2; }
  Vertex encode(Vertex a, Vertex x, int bit) const {
    return static_cast<Vertex>((a * n2 + x) * 2 + static_cast<std::size_t>(bit));
  }
  Triple decode(Vertex v) const {
    return {static_cast<Vertex>(v / 2 / n2), static_cast<Vertex>((v / 2) % n2), static_cast<int>(v % 2)};
  }
};

enum class DartKind { Horizontal, Vertical };

/// Cartesian product; vertex (a, x) is a * |V2| + x.
Digraph box_product(const Digraph& g1, const Digraph& g2);

/// Separated box product. Horizontal darts ((a,x,0),(b,x,1)) for (a,b) in
/// D1; vertical darts ((a,x,1),(a,y,0)) for (x,y) in D2.
Digraph sbp(const Digraph& g1, const Digraph& g2);

/// Horizontal darts leave white (bit 0) vertices, vertical darts leave black.
DartKind dart_kind(const SbpIndex& index, const Dart& d);

/// Canonical double cover; vertex (u, i) is 2u + i.
Digraph cdc(const Digraph& g);

/// Vertices are the darts of g in sorted order, darts are the 2-darts.
Digraph dart_digraph(const Digraph& g);

/// Vertex (x, y) of A2D is x * |D| + y, with darts indexed as in g.darts().
/// ((x,y),(z,w)) is a dart iff y == z and (x,w) is a 2-dart. Throws
/// Error(NotAGraph) unless g is a graph.
Digraph a2d(const Digraph& g);
Digraph a2g(const Digraph& g);

/// The map ((x,y),i) -> (x,y,0) if i == 0, (y,x,1) if i == 1, from
/// cdc(a2d(g)) onto sbp(dart_digraph(g), dart_digraph(g)). images[v] is the
/// image of flat vertex v. Verified dart by dart; throws
/// Error(InternalConsistency) on failure.
std::vector<Vertex> phi_iso(const Digraph& g);

/// Induced subdigraph on the component containing `seed`, plus the original
/// ids of its vertices (sorted).
struct Component {
  Digraph digraph;
  std::vector<Vertex> vertices;
};
Component extract_component(const Digraph& g, Vertex seed);

/// Underlying graph of the component of sbp(g1, g2) containing (0,0,0),
/// together with the directed component it came from.
struct HashProduct {
  Digraph graph;
  Digraph oriented;
  std::vector<Vertex> vertices;
  std::size_t component_count = 0;
};
HashProduct hash_product(const Digraph& g1, const Digraph& g2);

/// gcd of the alter-perimeters. Throws Error(HypothesisNotMet) unless both
/// factors are connected and free of sources and sinks.
std::size_t predicted_component_count(const Digraph& g1, const Digraph& g2);

}  // namespace sepbox
