#include "sepbox/products.hpp"

#include <algorithm>
#include <numeric>

#include "sepbox/alter.hpp"
#include "sepbox/error.hpp"

namespace sepbox {

Digraph box_product(const Digraph& g1, const Digraph& g2) {
  const std::size_t n2 = g2.order();
  auto id = [n2](Vertex a, Vertex x) { return static_cast<Vertex>(a * n2 + x); };
  std::vector<Dart> darts;
  darts.reserve(g1.size() * n2 + g1.order() * g2.size());
  for (const auto& d : g1.darts())
    for (Vertex x = 0; x < n2; ++x) darts.push_back({id(d.tail, x), id(d.head, x)});
  for (Vertex a = 0; a < g1.order(); ++a)
    for (const auto& d : g2.darts()) darts.push_back({id(a, d.tail), id(a, d.head)});
  return Digraph(g1.order() * n2, std::move(darts));
}

Digraph sbp(const Digraph& g1, const Digraph& g2) {
  const SbpIndex index{g1.order(), g2.order()};
  std::vector<Dart> darts;
  darts.reserve(g1.size() * g2.order() + g1.order() * g2.size());
  for (const auto& d : g1.darts())
    for (Vertex x = 0; x < g2.order(); ++x) darts.push_back({index.encode(d.tail, x, 0), index.encode(d.head, x, 1)});
  for (Vertex a = 0; a < g1.order(); ++a)
    for (const auto& d : g2.darts()) darts.push_back({index.encode(a, d.tail, 1), index.encode(a, d.head, 0)});
  return Digraph(index.size(), std::move(darts));
}

DartKind dart_kind(const SbpIndex& index, const Dart& d) {
  return index.decode(d.tail).bit == 0 ? DartKind::Horizontal : DartKind::Vertical;
}

Digraph cdc(const Digraph& g) {
  std::vector<Dart> darts;
  darts.reserve(2 * g.size());
  for (const auto& d : g.darts()) {
    darts.push_back({2 * d.tail, 2 * d.head + 1});
    darts.push_back({2 * d.tail + 1, 2 * d.head});
  }
  return Digraph(2 * g.order(), std::move(darts));
}

Digraph dart_digraph(const Digraph& g) {
  std::vector<Dart> darts;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto d = g.darts()[i];
    for (Vertex w : g.out_neighbours(d.head)) {
      if (w == d.tail) continue;
      darts.push_back({static_cast<Vertex>(i), static_cast<Vertex>(*g.dart_index(d.head, w))});
    }
  }
  return Digraph(g.size(), std::move(darts));
}

Digraph a2d(const Digraph& g) {
  if (!is_graph(g)) throw Error(ErrorKind::NotAGraph, "a2d needs a graph");
  const std::size_t m = g.size();
  const auto dd = dart_digraph(g);
  std::vector<Dart> darts;
  // ((x,y),(y,w)) for every 2-dart (x,w) and every dart y.
  for (const auto& xw : dd.darts())
    for (Vertex y = 0; y < m; ++y)
      darts.push_back({static_cast<Vertex>(xw.tail * m + y), static_cast<Vertex>(y * m + xw.head)});
  return Digraph(m * m, std::move(darts));
}

Digraph a2g(const Digraph& g) { return underlying(a2d(g)); }

std::vector<Vertex> phi_iso(const Digraph& g) {
  const std::size_t m = g.size();
  const auto source = cdc(a2d(g));
  const auto dd = dart_digraph(g);
  const auto target = sbp(dd, dd);
  const SbpIndex index{m, m};
  std::vector<Vertex> images(source.order());
  for (Vertex v = 0; v < source.order(); ++v) {
    const Vertex pair = v / 2;
    const Vertex x = static_cast<Vertex>(pair / m);
    const Vertex y = static_cast<Vertex>(pair % m);
    images[v] = v % 2 == 0 ? index.encode(x, y, 0) : index.encode(y, x, 1);
  }
  bool ok = source.size() == target.size();
  for (const auto& d : source.darts())
    if (ok && !target.has_dart(images[d.tail], images[d.head])) ok = false;
  if (ok) {
    // forward preservation with equal dart counts is a bijection on darts
    std::vector<Vertex> seen(images);
    std::sort(seen.begin(), seen.end());
    ok = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }
  if (!ok) throw Error(ErrorKind::InternalConsistency, "phi is not an isomorphism");
  return images;
}

Component extract_component(const Digraph& g, Vertex seed) {
  if (seed >= g.order()) throw Error(ErrorKind::InvalidInput, "seed vertex out of range");
  const auto ids = component_ids(g);
  Component c;
  for (Vertex v = 0; v < g.order(); ++v)
    if (ids[v] == ids[seed]) c.vertices.push_back(v);
  c.digraph = induced_subdigraph(g, c.vertices);
  return c;
}

HashProduct hash_product(const Digraph& g1, const Digraph& g2) {
  if (g1.order() == 0 || g2.order() == 0) throw Error(ErrorKind::InvalidInput, "empty factor");
  const auto product = sbp(g1, g2);
  const auto ids = component_ids(product);
  auto comp = extract_component(product, 0);
  HashProduct h;
  h.component_count = *std::max_element(ids.begin(), ids.end()) + 1;
  h.graph = underlying(comp.digraph);
  h.oriented = std::move(comp.digraph);
  h.vertices = std::move(comp.vertices);
  return h;
}

std::size_t predicted_component_count(const Digraph& g1, const Digraph& g2) {
  for (const auto* g : {&g1, &g2}) {
    if (g->order() == 0 || !is_connected(*g))
      throw Error(ErrorKind::HypothesisNotMet, "theorem hypotheses not met: factor is not connected");
    if (has_sources_or_sinks(*g))
      throw Error(ErrorKind::HypothesisNotMet, "theorem hypotheses not met: factor has a source or sink");
  }
  return std::gcd(alter_perimeter(g1), alter_perimeter(g2));
}

}  // namespace sepbox
