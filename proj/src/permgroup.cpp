#include "sepbox/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sepbox/error.hpp"

namespace sepbox {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Vertex{0});
}

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorKind::InvalidInput, "image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex x = cycle[i];
      if (x >= degree || used[x]) throw Error(ErrorKind::InvalidInput, "cycles are not disjoint or out of range");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::size_t x = 0; x < degree(); ++x) inv.images_[images_[x]] = static_cast<Vertex>(x);
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Vertex x = static_cast<Vertex>(start);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  Permutation r(g.degree());
  for (std::size_t x = 0; x < g.degree(); ++x) r.images_[x] = h.images_[g.images_[x]];
  return r;
}

// ---------------------------------------------------------------- helpers

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }
  /// Dense ids numbered by smallest element.
  std::vector<std::size_t> ids() {
    std::vector<std::size_t> id(parent_.size());
    std::vector<std::size_t> dense(parent_.size(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const auto r = find(x);
      if (dense[r] == SIZE_MAX) dense[r] = next++;
      id[x] = dense[r];
    }
    return id;
  }

 private:
  std::vector<std::size_t> parent_;
};

Vertex first_moved_point(const Permutation& p) {
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (p[static_cast<Vertex>(x)] != x) return static_cast<Vertex>(x);
  return static_cast<Vertex>(p.degree());
}

void check_degree(std::size_t degree, const std::vector<Permutation>& perms) {
  for (const auto& p : perms)
    if (p.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(p.degree()) +
                                                 " in a group of degree " + std::to_string(degree));
}

}  // namespace

std::string to_string(const GroupOrder& order) { return order.str(); }

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  check_degree(degree_, generators_);
  schreier_sims({}, false);
}

PermGroup PermGroup::with_base_prefix(std::size_t degree, std::vector<Permutation> generators,
                                      std::span<const Vertex> base_prefix) {
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  check_degree(degree, g.generators_);
  for (Vertex b : base_prefix)
    if (b >= degree) throw Error(ErrorKind::InvalidInput, "base point out of range");
  g.schreier_sims(base_prefix, false);
  return g;
}

PermGroup PermGroup::with_known_base(std::size_t degree, std::vector<Permutation> generators,
                                     std::span<const Vertex> base) {
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  check_degree(degree, g.generators_);
  for (Vertex b : base)
    if (b >= degree) throw Error(ErrorKind::InvalidInput, "base point out of range");
  for (const auto& p : g.generators_)
    if (!p.is_identity() && std::all_of(base.begin(), base.end(), [&](Vertex b) { return p[b] == b; }))
      throw Error(ErrorKind::InvalidInput, "generator fixes every point of the claimed base");
  g.schreier_sims(base, true);
  return g;
}

PermGroup PermGroup::from_strong_generators(std::size_t degree, std::vector<Vertex> base,
                                            std::vector<Permutation> strong) {
  PermGroup g;
  g.degree_ = degree;
  check_degree(degree, strong);
  for (auto& s : strong) {
    if (s.is_identity()) continue;
    g.generators_.push_back(s);
    g.strong_inverse_.push_back(s.inverse());
    g.strong_.push_back(std::move(s));
  }
  for (std::size_t gi = 0; gi < g.strong_.size(); ++gi) {
    const auto& s = g.strong_[gi];
    if (std::all_of(base.begin(), base.end(), [&](Vertex b) { return s[b] == b; }))
      throw Error(ErrorKind::InternalConsistency, "strong generator fixes every base point");
  }
  g.levels_.resize(base.size());
  for (std::size_t l = 0; l < base.size(); ++l) {
    g.levels_[l].base_point = base[l];
    for (std::size_t gi = 0; gi < g.strong_.size(); ++gi) {
      const auto& s = g.strong_[gi];
      bool fixes = true;
      for (std::size_t k = 0; k < l && fixes; ++k) fixes = s[base[k]] == base[k];
      if (fixes) g.levels_[l].gens.push_back(gi);
    }
    g.rebuild_level(l);
  }
  g.compute_order();
  return g;
}

std::vector<Vertex> PermGroup::base() const {
  std::vector<Vertex> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

void PermGroup::rebuild_level(std::size_t level) {
  auto& L = levels_[level];
  L.schreier.assign(degree_, -1);
  L.tested.assign(degree_, 0);
  L.orbit.assign(1, L.base_point);
  L.schreier[L.base_point] = -2;
  L.processed = 0;
  L.applied = 0;
  extend_level(level);
}

// Grows the orbit and Schreier tree for newly added generators without
// touching existing tree edges, so earlier transversals stay valid.
void PermGroup::extend_level(std::size_t level) {
  auto& L = levels_[level];
  auto visit = [&](Vertex p, std::size_t gi) {
    const Vertex q = strong_[gi][p];
    if (L.schreier[q] == -1) {
      L.schreier[q] = static_cast<int>(gi);
      L.orbit.push_back(q);
    }
  };
  for (std::size_t j = L.applied; j < L.gens.size(); ++j)
    for (std::size_t k = 0; k < L.processed; ++k) visit(L.orbit[k], L.gens[j]);
  L.applied = L.gens.size();
  for (; L.processed < L.orbit.size(); ++L.processed)
    for (std::size_t gi : L.gens) visit(L.orbit[L.processed], gi);
}

Permutation PermGroup::transversal(std::size_t level, Vertex point) const {
  const auto& L = levels_[level];
  std::vector<std::size_t> word;
  Vertex x = point;
  while (L.schreier[x] != -2) {
    const auto gi = static_cast<std::size_t>(L.schreier[x]);
    word.push_back(gi);
    x = strong_inverse_[gi][x];
  }
  Permutation u(degree_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = u * strong_[*it];
  return u;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const auto& L = levels_[l];
    Vertex beta = p[L.base_point];
    if (L.schreier[beta] == -1) return {std::move(p), l};
    while (L.schreier[beta] != -2) {
      const auto gi = static_cast<std::size_t>(L.schreier[beta]);
      p = p * strong_inverse_[gi];
      beta = strong_inverse_[gi][beta];
    }
  }
  return {std::move(p), levels_.size()};
}

bool PermGroup::sifts_on_base(std::size_t level, Vertex p, std::size_t gi) const {
  // images of the base points under u_p * s * u_q^-1, then sifted further
  const auto& top = levels_[level];
  std::vector<std::size_t> up, uq;
  for (Vertex x = p; top.schreier[x] != -2; x = strong_inverse_[top.schreier[x]][x]) up.push_back(top.schreier[x]);
  const Vertex q = strong_[gi][p];
  for (Vertex x = q; top.schreier[x] != -2; x = strong_inverse_[top.schreier[x]][x]) uq.push_back(top.schreier[x]);
  std::vector<Vertex> images(levels_.size());
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    Vertex x = levels_[j].base_point;
    for (auto it = up.rbegin(); it != up.rend(); ++it) x = strong_[*it][x];
    x = strong_[gi][x];
    for (auto k : uq) x = strong_inverse_[k][x];
    images[j] = x;
  }
  for (std::size_t l = level + 1; l < levels_.size(); ++l) {
    const auto& L = levels_[l];
    Vertex beta = images[l];
    if (L.schreier[beta] == -1) return false;
    while (L.schreier[beta] != -2) {
      const auto& inv = strong_inverse_[static_cast<std::size_t>(L.schreier[beta])];
      for (std::size_t j = l; j < images.size(); ++j) images[j] = inv[images[j]];
      beta = images[l];
    }
  }
  return true;
}

void PermGroup::schreier_sims(std::span<const Vertex> base_prefix, bool trusted_base) {
  strong_.clear();
  strong_inverse_.clear();
  levels_.clear();
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    strong_.push_back(g);
    strong_inverse_.push_back(g.inverse());
  }
  std::vector<Vertex> base;
  for (Vertex b : base_prefix)
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  for (const auto& s : strong_) {
    if (std::all_of(base.begin(), base.end(), [&](Vertex b) { return s[b] == b; }))
      base.push_back(first_moved_point(s));
  }
  levels_.resize(base.size());
  for (std::size_t l = 0; l < base.size(); ++l) {
    levels_[l].base_point = base[l];
    for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
      bool fixes = true;
      for (std::size_t k = 0; k < l && fixes; ++k) fixes = strong_[gi][base[k]] == base[k];
      if (fixes) levels_[l].gens.push_back(gi);
    }
    rebuild_level(l);
  }

  // A Schreier generator that once sifted through the lower levels keeps
  // doing so as they grow, and tree edges never change, so each (point,
  // generator) pair is tested once.
  auto level = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (level >= 0) {
    const auto i = static_cast<std::size_t>(level);
    bool extended = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !extended; ++k) {
      const Vertex p = levels_[i].orbit[k];
      while (levels_[i].tested[p] < levels_[i].gens.size()) {
        const std::size_t gi = levels_[i].gens[levels_[i].tested[p]];
        const Vertex q = strong_[gi][p];
        const bool tree_edge = levels_[i].schreier[q] == static_cast<int>(gi) && strong_inverse_[gi][q] == p;
        if (tree_edge || (trusted_base && sifts_on_base(i, p, gi))) {
          ++levels_[i].tested[p];
          continue;
        }
        Permutation schreier_gen = transversal(i, p) * strong_[gi] * transversal(i, q).inverse();
        auto [residue, stop] = sift(std::move(schreier_gen), i + 1);
        if (stop == levels_.size() && residue.is_identity()) {
          ++levels_[i].tested[p];
          continue;
        }
        if (stop == levels_.size()) {
          if (trusted_base) throw Error(ErrorKind::InvalidInput, "claimed base is not a base of the group");
          Level fresh;
          fresh.base_point = first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        const std::size_t index = strong_.size();
        strong_inverse_.push_back(residue.inverse());
        strong_.push_back(std::move(residue));
        for (std::size_t l = 0; l <= stop; ++l) levels_[l].gens.push_back(index);
        for (std::size_t l = 0; l < stop; ++l) extend_level(l);
        if (stop == levels_.size() - 1 && levels_[stop].orbit.empty())
          rebuild_level(stop);
        else
          extend_level(stop);
        level = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --level;
  }
  compute_order();
}

void PermGroup::compute_order() {
  order_ = 1;
  for (const auto& L : levels_) order_ *= static_cast<unsigned long long>(L.orbit.size());
}

std::vector<Vertex> PermGroup::orbit(Vertex point) const {
  if (point >= degree_) throw Error(ErrorKind::InvalidInput, "point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Vertex> orb{point};
  seen[point] = true;
  for (std::size_t qi = 0; qi < orb.size(); ++qi)
    for (const auto& s : strong_) {
      const Vertex q = s[orb[qi]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::size_t> PermGroup::orbit_ids() const {
  UnionFind uf(degree_);
  for (const auto& s : strong_)
    for (std::size_t x = 0; x < degree_; ++x) uf.unite(x, s[static_cast<Vertex>(x)]);
  return uf.ids();
}

std::vector<std::vector<Vertex>> PermGroup::orbits() const {
  const auto ids = orbit_ids();
  std::size_t count = 0;
  for (auto id : ids) count = std::max(count, id + 1);
  std::vector<std::vector<Vertex>> result(count);
  for (std::size_t x = 0; x < degree_; ++x) result[ids[x]].push_back(static_cast<Vertex>(x));
  return result;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

GroupOrder PermGroup::stabiliser_order(Vertex point) const {
  if (point >= degree_) throw Error(ErrorKind::InvalidInput, "point out of range");
  std::vector<Vertex> base{point};
  for (Vertex b : this->base()) base.push_back(b);
  const auto chain = with_known_base(degree_, strong_, base);
  GroupOrder order = 1;
  for (std::size_t l = 1; l < chain.levels_.size(); ++l) order *= static_cast<unsigned long long>(chain.levels_[l].orbit.size());
  return order;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "membership test with wrong degree");
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

PermGroup PermGroup::with_generators(std::span<const Permutation> extra) const {
  auto gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(degree_, std::move(gens));
}

std::vector<Permutation> PermGroup::pointwise_stabiliser_generators(std::span<const Vertex> points) const {
  std::vector<Vertex> base(points.begin(), points.end());
  for (Vertex b : this->base()) base.push_back(b);
  const auto chain = with_known_base(degree_, strong_, base);
  std::vector<Permutation> result;
  for (const auto& s : chain.strong_)
    if (std::all_of(points.begin(), points.end(), [&](Vertex b) { return s[b] == b; })) result.push_back(s);
  return result;
}

// ---------------------------------------------------------------- actions

std::vector<Dart> edge_list(const Digraph& g) {
  std::vector<Dart> edges;
  for (const auto& d : g.darts()) edges.push_back(d.tail < d.head ? d : d.reversed());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

bool is_automorphism(const Digraph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const auto& d : g.darts())
    if (!g.has_dart(p[d.tail], p[d.head])) return false;
  return true;
}

bool is_reversal(const Digraph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const auto& d : g.darts())
    if (!g.has_dart(p[d.head], p[d.tail])) return false;
  return true;
}

std::vector<std::size_t> induced_orbit_ids(const PermGroup& group, Action action, const Digraph& g) {
  if (group.degree() != g.order()) throw Error(ErrorKind::DegreeMismatch, "group degree differs from digraph order");
  for (const auto& s : group.strong_generators())
    if (!is_automorphism(g, s))
      throw Error(ErrorKind::NotAutomorphism, "generator " + s.cycle_string() + " does not preserve the dart set");
  switch (action) {
    case Action::Vertices:
      return group.orbit_ids();
    case Action::Darts: {
      UnionFind uf(g.size());
      const auto darts = g.darts();
      for (const auto& s : group.strong_generators())
        for (std::size_t i = 0; i < darts.size(); ++i)
          uf.unite(i, *g.dart_index(s[darts[i].tail], s[darts[i].head]));
      return uf.ids();
    }
    case Action::Edges: {
      const auto edges = edge_list(g);
      UnionFind uf(edges.size());
      for (const auto& s : group.strong_generators())
        for (std::size_t i = 0; i < edges.size(); ++i) {
          Dart e{s[edges[i].tail], s[edges[i].head]};
          if (e.tail > e.head) e = e.reversed();
          const auto it = std::lower_bound(edges.begin(), edges.end(), e);
          uf.unite(i, static_cast<std::size_t>(it - edges.begin()));
        }
      return uf.ids();
    }
  }
  return {};
}

std::size_t orbit_count(const PermGroup& group, Action action, const Digraph& g) {
  const auto ids = induced_orbit_ids(group, action, g);
  std::size_t count = 0;
  for (auto id : ids) count = std::max(count, id + 1);
  return count;
}

bool is_transitive_on(const PermGroup& group, Action action, const Digraph& g) {
  return orbit_count(group, action, g) <= 1;
}

}  // namespace sepbox
