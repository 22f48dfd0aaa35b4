#include "sepbox/symmetry.hpp"

#include <algorithm>
#include <deque>

#include "search.hpp"
#include "sepbox/error.hpp"

namespace sepbox {

namespace {

/// Some group element mapping `from` to `to`, assembled from a Schreier tree
/// over the generators.
std::optional<Permutation> element_mapping(const PermGroup& group, Vertex from, Vertex to) {
  const std::size_t n = group.degree();
  const auto& gens = group.generators();
  std::vector<int> via(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Vertex y = gens[i][x];
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = static_cast<int>(i);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> word;
  for (Vertex y = to; y != from; y = parent[y]) word.push_back(static_cast<std::size_t>(via[y]));
  Permutation result(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) result = result * gens[*it];
  return result;
}

bool is_isomorphism(const Digraph& g1, const Digraph& g2, const Permutation& p) {
  if (g1.order() != g2.order() || g1.size() != g2.size() || p.degree() != g1.order()) return false;
  for (const auto& d : g1.darts())
    if (!g2.has_dart(p[d.tail], p[d.head])) return false;
  return true;
}

std::optional<Permutation> isomorphism_connected(const Digraph& g1, const Digraph& g2) {
  const std::size_t n = g1.order();
  if (n == 0) return Permutation(0);
  const auto joined = disjoint_union(g1, g2);
  const auto aut = automorphism_group(joined);
  std::optional<Permutation> found;
  for (Vertex target = static_cast<Vertex>(n); target < 2 * n && !found; ++target) {
    auto p = element_mapping(aut.group, 0, target);
    if (p) found = std::move(p);
  }
  if (!found) return std::nullopt;
  std::vector<Vertex> images(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = (*found)[v];
    if (w < n) throw Error(ErrorKind::InternalConsistency, "automorphism of a union splits a component");
    images[v] = w - static_cast<Vertex>(n);
  }
  return Permutation(std::move(images));
}

struct ComponentInvariant {
  std::size_t order;
  std::size_t size;
  std::vector<std::pair<std::size_t, std::size_t>> valences;
  auto operator<=>(const ComponentInvariant&) const = default;
};

ComponentInvariant invariant_of(const Digraph& g) {
  ComponentInvariant inv{g.order(), g.size(), {}};
  for (Vertex v = 0; v < g.order(); ++v) inv.valences.emplace_back(g.out_valence(v), g.in_valence(v));
  std::sort(inv.valences.begin(), inv.valences.end());
  return inv;
}

}  // namespace

AutResult automorphism_group(const Digraph& g, std::span<const std::uint64_t> colours) {
  auto found = detail::search_automorphisms(g, colours);
  for (const auto& p : found.generators)
    if (!is_automorphism(g, p)) throw Error(ErrorKind::InternalConsistency, "search produced a non-automorphism");
  AutResult result;
  result.group = PermGroup::from_strong_generators(g.order(), std::move(found.base), std::move(found.generators));
  if (result.group.order() != found.order)
    throw Error(ErrorKind::InternalConsistency, "stabiliser chain disagrees with search order");
  result.order = found.order;
  return result;
}

AutResult automorphism_group_by_reduction(const Digraph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  std::vector<Dart> edges;
  std::vector<std::uint64_t> colours(n + 2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto d = g.darts()[i];
    const auto a = static_cast<Vertex>(n + 2 * i);
    const auto b = static_cast<Vertex>(n + 2 * i + 1);
    colours[a] = 1;
    colours[b] = 2;
    for (const Dart e : {Dart{d.tail, a}, Dart{a, b}, Dart{b, d.head}}) {
      edges.push_back(e);
      edges.push_back(e.reversed());
    }
  }
  const Digraph gadget(n + 2 * m, std::move(edges));
  const auto found = detail::search_automorphisms(gadget, colours);
  std::vector<Permutation> restricted;
  for (const auto& p : found.generators) {
    std::vector<Vertex> images(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(n));
    Permutation r(std::move(images));
    if (!is_automorphism(g, r)) throw Error(ErrorKind::InternalConsistency, "reduction produced a non-automorphism");
    restricted.push_back(std::move(r));
  }
  AutResult result;
  result.group = PermGroup(n, std::move(restricted));
  result.order = result.group.order();
  return result;
}

std::optional<Permutation> find_isomorphism(const Digraph& g1, const Digraph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (invariant_of(g1) != invariant_of(g2)) return std::nullopt;
  std::optional<Permutation> result;
  if (is_connected(g1) && is_connected(g2)) {
    result = isomorphism_connected(g1, g2);
  } else {
    const auto comps1 = connected_components(g1);
    const auto comps2 = connected_components(g2);
    if (comps1.size() != comps2.size()) return std::nullopt;
    std::vector<Digraph> sub2;
    std::vector<ComponentInvariant> inv2;
    for (const auto& c : comps2) {
      sub2.push_back(induced_subdigraph(g2, c));
      inv2.push_back(invariant_of(sub2.back()));
    }
    std::vector<char> used(comps2.size(), 0);
    std::vector<Vertex> images(g1.order());
    for (const auto& c1 : comps1) {
      const auto sub1 = induced_subdigraph(g1, c1);
      const auto inv1 = invariant_of(sub1);
      bool matched = false;
      for (std::size_t j = 0; j < comps2.size() && !matched; ++j) {
        if (used[j] || inv2[j] != inv1) continue;
        const auto iso = isomorphism_connected(sub1, sub2[j]);
        if (!iso) continue;
        used[j] = 1;
        matched = true;
        for (std::size_t k = 0; k < c1.size(); ++k) images[c1[k]] = comps2[j][(*iso)[static_cast<Vertex>(k)]];
      }
      if (!matched) return std::nullopt;
    }
    result = Permutation(std::move(images));
  }
  if (result && !is_isomorphism(g1, g2, *result))
    throw Error(ErrorKind::InternalConsistency, "isomorphism certificate failed verification");
  return result;
}

bool are_isomorphic(const Digraph& g1, const Digraph& g2) { return find_isomorphism(g1, g2).has_value(); }

ReversalResult find_reversal(const Digraph& g) {
  ReversalResult result;
  if (is_graph(g)) {
    result.witness = Permutation(g.order());
  } else {
    result.witness = find_isomorphism(g, reverse(g));
  }
  result.exists = result.witness.has_value();
  if (result.exists && !is_reversal(g, *result.witness))
    throw Error(ErrorKind::InternalConsistency, "reversal witness failed verification");
  return result;
}

bool is_reversible(const Digraph& g) { return find_reversal(g).exists; }

CanonicalForm canonical_form(const Digraph& g) {
  const auto aut = automorphism_group(g);
  const auto lab = detail::canonical_labelling(g, {}, aut.group);
  CanonicalForm form;
  form.order = g.order();
  form.labelling.resize(g.order());
  for (std::size_t i = 0; i < lab.size(); ++i) form.labelling[lab[i]] = static_cast<Vertex>(i);
  for (const auto& d : g.darts()) form.darts.push_back({form.labelling[d.tail], form.labelling[d.head]});
  std::sort(form.darts.begin(), form.darts.end());
  return form;
}

bool is_dart_transitive(const Digraph& g) {
  if (g.size() == 0) return false;
  return is_transitive_on(automorphism_group(g).group, Action::Darts, g);
}

}  // namespace sepbox
