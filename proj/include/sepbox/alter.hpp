#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sepbox/digraph.hpp"

namespace sepbox {

/// Alter classes of a connected digraph. Every dart (u,v) satisfies
/// class_of[v] == class_of[u] + 1 modulo `modulus` (exactly, when the
/// modulus is 0).
struct AlterLabeling {
  /// gcd of the potential discrepancies; 0 when every discrepancy vanishes.
  std::int64_t modulus = 0;
  /// Number of distinct classes.
  std::size_t perimeter = 0;
  /// Class per vertex; the lowest vertex is in class 0.
  std::vector<std::int64_t> class_of;
};

/// Throws Error(Disconnected) on disconnected input.
AlterLabeling alter_labeling(const Digraph& g);
std::size_t alter_perimeter(const Digraph& g);

/// A walk of sum 0 from u to v, or nothing when u and v are not
/// alter-related.
std::optional<Walk> sum_zero_walk(const Digraph& g, Vertex u, Vertex v);

}  // namespace sepbox
