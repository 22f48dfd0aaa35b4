#include "sepbox/expected.hpp"

#include <algorithm>
#include <map>

#include "sepbox/error.hpp"
#include "sepbox/products.hpp"
#include "sepbox/symmetry.hpp"

namespace sepbox {

namespace {

void require_automorphism(const Digraph& g, const Permutation& p, const char* what) {
  if (!is_automorphism(g, p)) throw Error(ErrorKind::NotAutomorphism, std::string(what) + " is not an automorphism");
}

void require_reversal(const Digraph& g, const Permutation& p, const char* what) {
  if (!is_reversal(g, p)) throw Error(ErrorKind::NotAutomorphism, std::string(what) + " is not a reversal");
}

void require_degree(const Permutation& p, std::size_t n) {
  if (p.degree() != n) throw Error(ErrorKind::DegreeMismatch, "permutation degree differs from digraph order");
}

/// Generators of the stabiliser of the block containing `seed` in the action
/// on blocks (Schreier's lemma).
std::vector<Permutation> block_stabiliser(std::size_t degree, const std::vector<Permutation>& gens,
                                          const std::vector<std::size_t>& block_of, Vertex seed) {
  std::vector<Vertex> representative(degree, 0);
  for (Vertex v = degree; v-- > 0;) representative[block_of[v]] = v;
  std::map<std::size_t, Permutation> transversal;
  transversal.emplace(block_of[seed], Permutation(degree));
  std::vector<std::size_t> queue{block_of[seed]};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto b = queue[head];
    for (const auto& s : gens) {
      const auto c = block_of[s[representative[b]]];
      if (!transversal.contains(c)) {
        transversal.emplace(c, transversal.at(b) * s);
        queue.push_back(c);
      }
    }
  }
  std::vector<Permutation> result;
  for (const auto& [b, t] : transversal)
    for (const auto& s : gens) {
      const auto c = block_of[s[representative[b]]];
      auto g = t * s * transversal.at(c).inverse();
      if (!g.is_identity() && std::find(result.begin(), result.end(), g) == result.end())
        result.push_back(std::move(g));
    }
  return result;
}

/// Restricts permutations that preserve `subset` (sorted) to it.
Permutation restrict_to(const Permutation& p, std::span<const Vertex> subset, const std::vector<Vertex>& local) {
  std::vector<Vertex> images(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const Vertex w = p[subset[k]];
    if (local[w] == static_cast<Vertex>(-1))
      throw Error(ErrorKind::InternalConsistency, "permutation does not preserve the subset");
    images[k] = local[w];
  }
  return Permutation(std::move(images));
}

std::vector<Vertex> local_index(std::size_t degree, std::span<const Vertex> subset) {
  std::vector<Vertex> local(degree, static_cast<Vertex>(-1));
  for (std::size_t k = 0; k < subset.size(); ++k) local[subset[k]] = static_cast<Vertex>(k);
  return local;
}

Permutation lift_unchecked(const SbpIndex& index, const Permutation& p1, const Permutation& p2) {
  std::vector<Vertex> images(index.size());
  for (Vertex v = 0; v < images.size(); ++v) {
    const auto t = index.decode(v);
    images[v] = index.encode(p1[t.a], p2[t.x], t.bit);
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation lift_pair(const Digraph& g1, const Digraph& g2, const Permutation& p1, const Permutation& p2) {
  require_degree(p1, g1.order());
  require_degree(p2, g2.order());
  require_automorphism(g1, p1, "first factor map");
  require_automorphism(g2, p2, "second factor map");
  auto lifted = lift_unchecked({g1.order(), g2.order()}, p1, p2);
  require_automorphism(sbp(g1, g2), lifted, "lifted pair");
  return lifted;
}

Permutation sigma_reversal(const Digraph& g1, const Digraph& g2, const Permutation& r1, const Permutation& r2) {
  require_degree(r1, g1.order());
  require_degree(r2, g2.order());
  require_reversal(g1, r1, "first factor map");
  require_reversal(g2, r2, "second factor map");
  const SbpIndex index{g1.order(), g2.order()};
  std::vector<Vertex> images(index.size());
  for (Vertex v = 0; v < images.size(); ++v) {
    const auto t = index.decode(v);
    images[v] = index.encode(r1[t.a], r2[t.x], 1 - t.bit);
  }
  Permutation sigma(std::move(images));
  require_reversal(sbp(g1, g2), sigma, "sigma");
  return sigma;
}

Permutation tau_swap(const Digraph& delta) { return tau_swap(delta, delta, Permutation(delta.order())); }

Permutation tau_swap(const Digraph& g1, const Digraph& g2, const Permutation& iso) {
  require_degree(iso, g1.order());
  if (g1.order() != g2.order()) throw Error(ErrorKind::DegreeMismatch, "factors differ in order");
  for (const auto& d : g1.darts())
    if (!g2.has_dart(iso[d.tail], iso[d.head])) throw Error(ErrorKind::NotAutomorphism, "map is not an isomorphism");
  const auto inv = iso.inverse();
  const SbpIndex index{g1.order(), g2.order()};
  std::vector<Vertex> images(index.size());
  for (Vertex v = 0; v < images.size(); ++v) {
    const auto t = index.decode(v);
    images[v] = index.encode(inv[t.x], iso[t.a], 1 - t.bit);
  }
  Permutation tau(std::move(images));
  require_automorphism(sbp(g1, g2), tau, "tau");
  return tau;
}

Permutation mu_reversal(const Digraph& delta) { return mu_reversal(delta, reverse(delta), Permutation(delta.order())); }

Permutation mu_reversal(const Digraph& g1, const Digraph& g2, const Permutation& iso) {
  require_degree(iso, g1.order());
  if (g1.order() != g2.order()) throw Error(ErrorKind::DegreeMismatch, "factors differ in order");
  for (const auto& d : g1.darts())
    if (!g2.has_dart(iso[d.head], iso[d.tail])) throw Error(ErrorKind::NotAutomorphism, "map is not an anti-isomorphism");
  const auto inv = iso.inverse();
  const SbpIndex index{g1.order(), g2.order()};
  std::vector<Vertex> images(index.size());
  for (Vertex v = 0; v < images.size(); ++v) {
    const auto t = index.decode(v);
    images[v] = index.encode(inv[t.x], iso[t.a], t.bit);
  }
  Permutation mu(std::move(images));
  require_reversal(sbp(g1, g2), mu, "mu");
  return mu;
}

ExpectedGroup build_expected_group(const Digraph& g1, const Digraph& g2, const PermGroup& G1, const PermGroup& G2) {
  if (G1.degree() != g1.order() || G2.degree() != g2.order())
    throw Error(ErrorKind::DegreeMismatch, "group degree differs from factor order");
  if (g1.size() == 0 || !is_transitive_on(G1, Action::Darts, g1))
    throw Error(ErrorKind::HypothesisNotMet, "first group is not dart-transitive");
  if (g2.size() == 0 || !is_transitive_on(G2, Action::Darts, g2))
    throw Error(ErrorKind::HypothesisNotMet, "second group is not dart-transitive");

  const SbpIndex index{g1.order(), g2.order()};
  const auto product = sbp(g1, g2);
  const auto id1 = Permutation(g1.order());
  const auto id2 = Permutation(g2.order());

  ExpectedGroup e;
  for (const auto& p : G1.generators()) e.lifted.push_back(lift_unchecked(index, p, id2));
  for (const auto& q : G2.generators()) e.lifted.push_back(lift_unchecked(index, id1, q));
  for (const auto& p : e.lifted) require_automorphism(product, p, "lifted generator");

  const auto r1 = find_reversal(g1);
  const auto r2 = find_reversal(g2);
  if (r1.exists && r2.exists) e.sigma = sigma_reversal(g1, g2, *r1.witness, *r2.witness);
  if (auto iso = find_isomorphism(g1, g2)) e.tau = tau_swap(g1, g2, *iso);
  if (auto iso = find_isomorphism(g1, reverse(g2))) e.mu = mu_reversal(g1, g2, *iso);

  std::vector<Permutation> gens = e.lifted;
  for (const auto* extra : {&e.sigma, &e.tau, &e.mu})
    if (*extra) gens.push_back(**extra);
  e.on_product = PermGroup(index.size(), gens);

  const auto ids = component_ids(product);
  for (Vertex v = 0; v < product.order(); ++v)
    if (ids[v] == ids[0]) e.component.push_back(v);
  const auto local = local_index(product.order(), e.component);
  std::vector<Permutation> restricted;
  for (const auto& s : block_stabiliser(product.order(), gens, ids, 0))
    restricted.push_back(restrict_to(s, e.component, local));
  e.on_component = PermGroup(e.component.size(), std::move(restricted));
  return e;
}

bool hash_product_warning(const Digraph& g1, const Digraph& g2) {
  if (hash_product(g1, g2).component_count <= 1) return false;
  return !(is_dart_transitive(g1) && is_dart_transitive(g2));
}

Permutation dart_action(const Digraph& g, const Permutation& p) {
  require_degree(p, g.order());
  std::vector<Vertex> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto d = g.darts()[i];
    const auto j = g.dart_index(p[d.tail], p[d.head]);
    if (!j) throw Error(ErrorKind::NotAutomorphism, "permutation does not preserve the darts");
    images[i] = static_cast<Vertex>(*j);
  }
  return Permutation(std::move(images));
}

A2gGroups build_a2g_groups(const Digraph& lambda, const PermGroup& G, std::optional<Permutation> alpha) {
  if (G.degree() != lambda.order()) throw Error(ErrorKind::DegreeMismatch, "group degree differs from graph order");
  if (!is_graph(lambda) || !is_connected(lambda) || !is_k_valent(lambda, 3))
    throw Error(ErrorKind::HypothesisNotMet, "graph must be connected and cubic");
  const auto colour = bipartition(lambda);
  if (!colour) throw Error(ErrorKind::HypothesisNotMet, "graph must be bipartite");

  const std::size_t m = lambda.size();
  std::vector<Permutation> dart_gens;
  for (const auto& g : G.generators()) dart_gens.push_back(dart_action(lambda, g));
  if (!is_transitive_on(PermGroup(m, dart_gens), Action::Darts, dart_digraph(lambda)))
    throw Error(ErrorKind::HypothesisNotMet, "group is not transitive on 2-darts");

  A2gGroups out;
  auto swaps = [&](const Permutation& g) { return (*colour)[g[0]] != (*colour)[0]; };
  if (alpha) {
    if (!G.contains(*alpha) || !swaps(*alpha)) throw Error(ErrorKind::InvalidInput, "alpha must lie in G but not in H");
    out.alpha = *alpha;
  } else {
    const auto it = std::find_if(G.generators().begin(), G.generators().end(), swaps);
    if (it == G.generators().end()) throw Error(ErrorKind::HypothesisNotMet, "group preserves the colour classes");
    out.alpha = *it;
  }
  {
    std::vector<std::size_t> block_of(colour->begin(), colour->end());
    auto hgens = block_stabiliser(lambda.order(), G.generators(), block_of, 0);
    out.H = PermGroup(lambda.order(), std::move(hgens));
    if (out.H.order() * 2 != G.order()) throw Error(ErrorKind::InternalConsistency, "colour-preserving subgroup has wrong index");
  }

  // Actions on cdc(a2d(lambda)); vertex ((x,y),i) is 2(xm+y)+i.
  const auto base = a2d(lambda);
  const auto cover = cdc(base);
  auto idx = [m](std::size_t x, std::size_t y, std::size_t i) { return static_cast<Vertex>(2 * (x * m + y) + i); };
  auto pair_action = [&](const Permutation& g1, const Permutation& g2) {
    const auto d1 = dart_action(lambda, g1);
    const auto d2 = dart_action(lambda, g2);
    std::vector<Vertex> images(cover.order());
    for (Vertex x = 0; x < m; ++x)
      for (Vertex y = 0; y < m; ++y) {
        images[idx(x, y, 0)] = idx(d1[x], d2[y], 0);
        images[idx(x, y, 1)] = idx(d2[x], d1[y], 1);
      }
    Permutation p(std::move(images));
    require_automorphism(cover, p, "pair action");
    return p;
  };
  std::vector<Vertex> inverse_dart(m);
  for (std::size_t i = 0; i < m; ++i) inverse_dart[i] = static_cast<Vertex>(*lambda.dart_index(lambda.darts()[i].head, lambda.darts()[i].tail));
  std::vector<Vertex> sigma_img(cover.order()), tau_img(cover.order());
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y = 0; y < m; ++y)
      for (Vertex i = 0; i < 2; ++i) {
        sigma_img[idx(x, y, i)] = idx(inverse_dart[y], inverse_dart[x], 1 - i);
        tau_img[idx(x, y, i)] = idx(x, y, 1 - i);
      }
  const Permutation sigma(std::move(sigma_img));
  const Permutation tau(std::move(tau_img));
  require_reversal(cover, sigma, "sigma");
  require_automorphism(cover, tau, "tau");

  std::vector<int> dart_colour(m);
  for (std::size_t i = 0; i < m; ++i) dart_colour[i] = (*colour)[lambda.darts()[i].tail];
  out.psi.resize(m * m);
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y = 0; y < m; ++y) out.psi[x * m + y] = idx(x, y, dart_colour[x] == dart_colour[y] ? 0 : 1);
  out.omega = out.psi;
  std::sort(out.omega.begin(), out.omega.end());
  {
    const auto comp = extract_component(cover, out.psi[0]);
    if (comp.vertices != out.omega) throw Error(ErrorKind::InternalConsistency, "psi image is not a component");
  }
  std::vector<Vertex> psi_inverse(cover.order(), static_cast<Vertex>(-1));
  for (Vertex v = 0; v < out.psi.size(); ++v) psi_inverse[out.psi[v]] = v;
  auto transport = [&](const Permutation& p) {
    std::vector<Vertex> images(m * m);
    for (Vertex v = 0; v < images.size(); ++v) {
      const Vertex w = psi_inverse[p[out.psi[v]]];
      if (w == static_cast<Vertex>(-1)) throw Error(ErrorKind::InternalConsistency, "element does not preserve Omega");
      images[v] = w;
    }
    return Permutation(std::move(images));
  };

  const Permutation one(lambda.order());
  std::vector<Permutation> a_gens;
  for (const auto& h : out.H.generators()) {
    a_gens.push_back(transport(pair_action(h, one)));
    a_gens.push_back(transport(pair_action(one, h)));
  }
  a_gens.push_back(transport(pair_action(out.alpha, out.alpha)));
  a_gens.push_back(transport(pair_action(one, out.alpha) * tau));
  for (const auto& p : a_gens) require_automorphism(base, p, "generator of A");
  const auto tau_sigma = transport(tau * sigma);
  require_reversal(base, tau_sigma, "tau sigma");

  // Both groups lie in Aut(a2g(lambda)), so its base is a base for them.
  const auto overgroup_base = automorphism_group(underlying(base)).group.base();
  out.A = PermGroup::with_known_base(m * m, a_gens, overgroup_base);
  auto b_gens = a_gens;
  b_gens.push_back(tau_sigma);
  out.B = PermGroup::with_known_base(m * m, std::move(b_gens), overgroup_base);
  return out;
}

Permutation unexpected_symmetry(const Digraph& lambda, const Permutation& g) {
  const std::size_t m = lambda.size();
  const auto d = dart_action(lambda, g);
  std::vector<Vertex> images(2 * m * m);
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y = 0; y < m; ++y) {
      images[2 * (x * m + y)] = static_cast<Vertex>(2 * (d[x] * m + y));
      images[2 * (x * m + y) + 1] = static_cast<Vertex>(2 * (x * m + d[y]) + 1);
    }
  Permutation p(std::move(images));
  require_automorphism(cdc(a2d(lambda)), p, "unexpected symmetry");
  return p;
}

bool preserves_fibres(const Permutation& p) {
  for (Vertex v = 0; v + 1 < p.degree(); v += 2)
    if (p[v] / 2 != p[v + 1] / 2) return false;
  return true;
}

}  // namespace sepbox
