#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepbox/digraph.hpp"

namespace sepbox {

/// Exact group orders; the census products quickly exceed 64 bits.
using GroupOrder = boost::multiprecision::cpp_int;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products follow the right-action convention: (g * h)[x] == h[g[x]],
/// i.e. apply g first, then h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws Error(InvalidInput) unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);
  /// Cycles are lists of points; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Vertex>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Vertex operator[](Vertex x) const { return images_[x]; }
  std::span<const Vertex> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints as "()".
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// Finitely generated permutation group with a base and strong generating set.
///
/// The stabiliser chain is built eagerly by a deterministic Schreier-Sims
/// pass (no randomisation), so a constructed group is immutable and all
/// queries are const. Transversals are kept as Schreier vectors.
class PermGroup {
 public:
  explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

  /// Builds the chain for a base/strong generating set that is already known
  /// to be complete (e.g. from the automorphism search). Only transversals are
  /// computed; the BSGS property is trusted.
  static PermGroup from_strong_generators(std::size_t degree, std::vector<Vertex> base,
                                          std::vector<Permutation> strong);

  /// Schreier-Sims with `base_prefix` as the first base points.
  static PermGroup with_base_prefix(std::size_t degree, std::vector<Permutation> generators,
                                    std::span<const Vertex> base_prefix);

  /// Schreier-Sims when a base of the generated group is already known, for
  /// instance a base of an overgroup such as the full automorphism group.
  /// Only the identity may fix every point of `base`; Schreier generators are
  /// then tested on base images alone, which is far cheaper on large degrees.
  /// Throws Error(InvalidInput) when a generator visibly violates this.
  static PermGroup with_known_base(std::size_t degree, std::vector<Permutation> generators,
                                   std::span<const Vertex> base);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<Vertex> base() const;

  const GroupOrder& order() const { return order_; }

  std::vector<Vertex> orbit(Vertex point) const;
  /// Orbit partition; each orbit sorted, orbits ordered by smallest point.
  std::vector<std::vector<Vertex>> orbits() const;
  /// Orbit index per point, numbered as in orbits().
  std::vector<std::size_t> orbit_ids() const;
  bool is_transitive() const;
  GroupOrder stabiliser_order(Vertex point) const;

  bool contains(const Permutation& p) const;
  PermGroup with_generators(std::span<const Permutation> extra) const;

  /// Generators of the pointwise stabiliser of `points` (in that order).
  std::vector<Permutation> pointwise_stabiliser_generators(std::span<const Vertex> points) const;

 private:
  struct Level {
    Vertex base_point = 0;
    std::vector<std::size_t> gens;      // indices into strong_
    std::vector<int> schreier;          // -1: not in orbit, -2: base point, else strong index
    std::vector<Vertex> orbit;          // discovery order
    std::size_t processed = 0;          // orbit points closed under gens[0, applied)
    std::size_t applied = 0;
    std::vector<std::size_t> tested;    // per point: gens whose Schreier generator passed
  };

  PermGroup() = default;
  void schreier_sims(std::span<const Vertex> base_prefix, bool trusted_base);
  void rebuild_level(std::size_t level);
  void extend_level(std::size_t level);
  /// Sifts the Schreier generator u_p * s * u_{p^s}^-1 of `level` using base
  /// images only; true when it reduces to something fixing the whole base.
  bool sifts_on_base(std::size_t level, Vertex p, std::size_t gi) const;
  void compute_order();
  /// Coset representative u with base_point^u == point at the given level.
  Permutation transversal(std::size_t level, Vertex point) const;
  /// Sifts p from `from_level`; returns residue and the level where it stopped
  /// (levels_.size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from_level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inverse_;
  std::vector<Level> levels_;
  GroupOrder order_ = 1;
};

enum class Action { Vertices, Darts, Edges };

/// Orbit id per element of the chosen action domain. Darts are indexed as in
/// g.darts(); edges as in edge_list(g). Throws Error(NotAutomorphism) if any
/// generator fails to preserve the dart set of g.
std::vector<std::size_t> induced_orbit_ids(const PermGroup& group, Action action, const Digraph& g);
std::size_t orbit_count(const PermGroup& group, Action action, const Digraph& g);
bool is_transitive_on(const PermGroup& group, Action action, const Digraph& g);

/// Unordered pairs {u, v} (u < v) joined by at least one dart, sorted.
std::vector<Dart> edge_list(const Digraph& g);

bool is_automorphism(const Digraph& g, const Permutation& p);
/// True iff p maps the dart set of g onto the dart set of reverse(g).
bool is_reversal(const Digraph& g, const Permutation& p);

std::string to_string(const GroupOrder& order);

}  // namespace sepbox
