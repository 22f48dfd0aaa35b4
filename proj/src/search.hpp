#pragma once

// Individualisation-refinement search over ordered partitions. Internal to
// the symmetry module.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepbox/digraph.hpp"
#include "sepbox/permgroup.hpp"

namespace sepbox::detail {

/// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`;
/// `cell[v]` is the start position of v's cell and `end[s]` the end of the
/// cell starting at s.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<Vertex> pos;
  std::vector<Vertex> cell;
  std::vector<Vertex> end;
  std::size_t cells = 0;

  Partition() = default;
  /// Cells ordered by ascending colour.
  Partition(std::size_t n, std::span<const std::uint64_t> colours);

  std::size_t order() const { return lab.size(); }
  bool discrete() const { return cells == lab.size(); }
  /// Start of the first smallest non-singleton cell.
  std::size_t target_cell() const;
};

/// Equitable refinement that counts out- and in-neighbours separately, so
/// dart direction is part of every split.
class Refiner {
 public:
  explicit Refiner(const Digraph& g);

  /// Refines with every current cell as splitter. Returns the trace hash.
  std::uint64_t refine_all(Partition& p);
  /// Splits v off its cell and refines. Returns the trace hash.
  std::uint64_t individualise(Partition& p, Vertex v);

 private:
  std::uint64_t refine(Partition& p, std::uint64_t trace);
  void push(Vertex start);

  const Digraph& g_;
  std::vector<std::uint32_t> cnt_out_, cnt_in_;
  std::vector<char> touched_flag_;
  std::vector<Vertex> touched_;
  std::vector<char> in_queue_;
  std::vector<Vertex> queue_;
  std::size_t queue_head_ = 0;
  std::vector<Vertex> splitter_;
  std::vector<Vertex> scratch_;
};

struct SearchResult {
  std::vector<Vertex> base;
  std::vector<Permutation> generators;
  GroupOrder order = 1;
};

/// Automorphisms of a vertex-coloured digraph. The generators form a strong
/// generating set relative to `base`.
SearchResult search_automorphisms(const Digraph& g, std::span<const std::uint64_t> colours);

/// Canonical labelling: lab[i] is the vertex that receives label i. Requires
/// the full automorphism group for orbit pruning.
std::vector<Vertex> canonical_labelling(const Digraph& g, std::span<const std::uint64_t> colours,
                                        const PermGroup& aut);

}  // namespace sepbox::detail
