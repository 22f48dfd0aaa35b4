#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sepbox/census.hpp"
#include "sepbox/digraph.hpp"

namespace testutil {

using sepbox::Dart;
using sepbox::Digraph;
using sepbox::Vertex;

inline Digraph random_digraph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Dart> darts;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && coin(rng)) darts.push_back({u, v});
  return Digraph(n, darts);
}

/// Needs n >= 3. Union of directed cycles through shared vertices: connected and free of
/// sources and sinks. The first cycle is Hamiltonian; later darts antiparallel
/// to an existing one are dropped so the result stays an orientation.
inline Digraph random_orientation(std::mt19937& rng, std::size_t n) {
  std::set<Dart> darts;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  auto add_cycle = [&](const std::vector<Vertex>& cyc) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Dart d{cyc[i], cyc[(i + 1) % cyc.size()]};
      if (!darts.count(d.reversed())) darts.insert(d);
    }
  };
  std::shuffle(all.begin(), all.end(), rng);
  add_cycle(all);
  const std::size_t extra = rng() % 4;
  for (std::size_t k = 0; k < extra; ++k) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> cyc(all.begin(), all.begin() + 3 + rng() % (n - 2));
    add_cycle(cyc);
  }
  return Digraph(n, std::vector<Dart>(darts.begin(), darts.end()));
}

/// A connected orientation without sources or sinks on k * r vertices whose
/// alter-perimeter is a multiple of k: vertex v lies in layer v mod k and every
/// dart goes from one layer to the next.
/// Needs k >= 2; r is raised to 2 when k == 2 to avoid a digon.
inline Digraph random_layered_orientation(std::mt19937& rng, std::size_t k, std::size_t r) {
  if (k == 2 && r < 2) r = 2;
  const std::size_t n = k * r;
  // a Hamiltonian cycle visiting layers 0, 1, ..., k-1, 0, ...
  std::vector<std::vector<Vertex>> layers(k);
  for (Vertex v = 0; v < n; ++v) layers[v % k].push_back(v);
  for (auto& l : layers) std::shuffle(l.begin(), l.end(), rng);
  std::vector<Vertex> cycle;
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < k; ++i) cycle.push_back(layers[i][j]);
  std::set<Dart> darts;
  for (std::size_t i = 0; i < n; ++i) darts.insert({cycle[i], cycle[(i + 1) % n]});
  const std::size_t extra = rng() % (n + 1);
  for (std::size_t e = 0; e < extra; ++e) {
    const Vertex u = static_cast<Vertex>(rng() % n);
    const auto& next = layers[(u % k + 1) % k];
    const Dart d{u, next[rng() % next.size()]};
    if (d.tail != d.head && !darts.count(d.reversed())) darts.insert(d);
  }
  return Digraph(n, std::vector<Dart>(darts.begin(), darts.end()));
}

}  // namespace testutil

/// One shared catalogue per test binary so generation runs once.
struct CensusFixture {
  const sepbox::Digraph& get(const std::string& name) { return entry(name).digraph; }
  const sepbox::CensusEntry& entry(const std::string& name) { return catalog().get(name); }
  static sepbox::CensusCatalog& catalog() {
    static sepbox::CensusCatalog c;
    return c;
  }
};
