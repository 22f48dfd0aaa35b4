#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sepbox {

using Vertex = std::uint32_t;

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  Dart reversed() const { return {head, tail}; }
  auto operator<=>(const Dart&) const = default;
};

/// A finite loopless digraph on the vertex set {0, ..., n-1}.
///
/// The dart list is kept sorted by (tail, head) and free of duplicates, so
/// two digraphs compare equal exactly when they have the same order and the
/// same dart set. Out- and in-neighbourhoods are stored in CSR form and are
/// sorted ascending. Values are immutable once built.
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error(InvalidInput) on loops, duplicate darts or out-of-range ids.
  Digraph(std::size_t order, std::vector<Dart> darts);

  /// Same as the constructor but silently drops duplicate darts. Loops and
  /// out-of-range ids are still rejected.
  static Digraph from_darts_dedup(std::size_t order, std::vector<Dart> darts);

  std::size_t order() const { return order_; }
  std::size_t size() const { return darts_.size(); }

  std::span<const Dart> darts() const { return darts_; }
  std::span<const Vertex> out_neighbours(Vertex v) const {
    return {out_.data() + out_offset_[v], out_.data() + out_offset_[v + 1]};
  }
  std::span<const Vertex> in_neighbours(Vertex v) const {
    return {in_.data() + in_offset_[v], in_.data() + in_offset_[v + 1]};
  }
  std::size_t out_valence(Vertex v) const { return out_offset_[v + 1] - out_offset_[v]; }
  std::size_t in_valence(Vertex v) const { return in_offset_[v + 1] - in_offset_[v]; }

  bool has_dart(Vertex tail, Vertex head) const;
  /// Position of the dart in darts(), if present.
  std::optional<std::size_t> dart_index(Vertex tail, Vertex head) const;

  bool operator==(const Digraph& other) const {
    return order_ == other.order_ && darts_ == other.darts_;
  }

 private:
  struct Trusted {};
  Digraph(Trusted, std::size_t order, std::vector<Dart> sorted_unique);
  void build_index();

  std::size_t order_ = 0;
  std::vector<Dart> darts_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<Vertex> out_;
  std::vector<std::size_t> in_offset_{0};
  std::vector<Vertex> in_;
};

/// Walk in the sense of signed steps: sign +1 means (v[i-1], v[i]) is a dart,
/// sign -1 means (v[i], v[i-1]) is.
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<int> signs;

  long sum() const;
  std::size_t length() const { return signs.size(); }
};

bool is_valid_walk(const Digraph& g, const Walk& walk);

Digraph reverse(const Digraph& g);
Digraph underlying(const Digraph& g);
bool is_graph(const Digraph& g);
bool is_orientation(const Digraph& g);

struct Valence {
  std::size_t out = 0;
  std::size_t in = 0;
  bool operator==(const Valence&) const = default;
};
Valence valences(const Digraph& g, Vertex v);
bool is_k_valent(const Digraph& g, std::size_t k);
bool has_sources_or_sinks(const Digraph& g);

std::vector<std::pair<Dart, Dart>> two_darts(const Digraph& g);

/// Component id per vertex (components of the underlying graph, numbered by
/// their smallest vertex).
std::vector<std::size_t> component_ids(const Digraph& g);
/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Digraph& g);
bool is_connected(const Digraph& g);
bool is_bipartite(const Digraph& g);
/// Proper 2-colouring of the underlying graph (0/1 per vertex), if bipartite.
/// Colours are normalised so the smallest vertex of each component gets 0.
std::optional<std::vector<int>> bipartition(const Digraph& g);

inline constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

/// Length of a shortest cycle of the underlying simple graph, or kNoCycle.
std::size_t girth(const Digraph& g);
/// Maximum eccentricity in the underlying graph. Throws Error(Disconnected).
std::size_t diameter(const Digraph& g);

/// The cycle C_n as a 2-valent graph (both dart directions). Requires n >= 3.
Digraph dcyc(std::size_t n);
/// The directed cycle 0 -> 1 -> ... -> n-1 -> 0. Requires n >= 2.
Digraph directed_cycle(std::size_t n);

/// Induced subdigraph on `vertices` (must be sorted, distinct). Vertex i of the
/// result is vertices[i].
Digraph induced_subdigraph(const Digraph& g, std::span<const Vertex> vertices);
Digraph disjoint_union(const Digraph& a, const Digraph& b);
/// Relabels v -> images[v]; `images` must be a bijection on the vertex set.
Digraph relabel(const Digraph& g, std::span<const Vertex> images);

}  // namespace sepbox
