#include "sepbox/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sepbox/error.hpp"

namespace sepbox {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotAGraph: return "not a graph";
    case ErrorKind::HypothesisNotMet: return "theorem hypotheses not met";
    case ErrorKind::NotAutomorphism: return "not a subgroup of Aut";
    case ErrorKind::DegreeMismatch: return "degree mismatch";
    case ErrorKind::InternalConsistency: return "internal consistency";
  }
  return "unknown";
}

namespace {

void check_darts(std::size_t order, const std::vector<Dart>& darts) {
  for (const auto& d : darts) {
    if (d.tail >= order || d.head >= order) {
      throw Error(ErrorKind::InvalidInput,
                  "dart (" + std::to_string(d.tail) + "," + std::to_string(d.head) +
                      ") refers to a vertex outside 0.." + std::to_string(order) + "-1");
    }
    if (d.tail == d.head) {
      throw Error(ErrorKind::InvalidInput, "loop at vertex " + std::to_string(d.tail));
    }
  }
}

}  // namespace

Digraph::Digraph(std::size_t order, std::vector<Dart> darts) : order_(order), darts_(std::move(darts)) {
  check_darts(order_, darts_);
  std::sort(darts_.begin(), darts_.end());
  auto dup = std::adjacent_find(darts_.begin(), darts_.end());
  if (dup != darts_.end()) {
    throw Error(ErrorKind::InvalidInput, "duplicate dart (" + std::to_string(dup->tail) + "," +
                                             std::to_string(dup->head) + ")");
  }
  build_index();
}

Digraph::Digraph(Trusted, std::size_t order, std::vector<Dart> sorted_unique)
    : order_(order), darts_(std::move(sorted_unique)) {
  build_index();
}

Digraph Digraph::from_darts_dedup(std::size_t order, std::vector<Dart> darts) {
  check_darts(order, darts);
  std::sort(darts.begin(), darts.end());
  darts.erase(std::unique(darts.begin(), darts.end()), darts.end());
  return Digraph(Trusted{}, order, std::move(darts));
}

void Digraph::build_index() {
  out_offset_.assign(order_ + 1, 0);
  in_offset_.assign(order_ + 1, 0);
  for (const auto& d : darts_) {
    ++out_offset_[d.tail + 1];
    ++in_offset_[d.head + 1];
  }
  for (std::size_t v = 0; v < order_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  out_.resize(darts_.size());
  in_.resize(darts_.size());
  std::vector<std::size_t> fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < darts_.size(); ++i) {
    out_[i] = darts_[i].head;
    in_[fill[darts_[i].head]++] = darts_[i].tail;
  }
}

bool Digraph::has_dart(Vertex tail, Vertex head) const {
  if (tail >= order_) return false;
  auto nb = out_neighbours(tail);
  return std::binary_search(nb.begin(), nb.end(), head);
}

std::optional<std::size_t> Digraph::dart_index(Vertex tail, Vertex head) const {
  if (tail >= order_) return std::nullopt;
  auto nb = out_neighbours(tail);
  auto it = std::lower_bound(nb.begin(), nb.end(), head);
  if (it == nb.end() || *it != head) return std::nullopt;
  return out_offset_[tail] + static_cast<std::size_t>(it - nb.begin());
}

long Walk::sum() const {
  long s = 0;
  for (int sign : signs) s += sign;
  return s;
}

bool is_valid_walk(const Digraph& g, const Walk& walk) {
  if (walk.vertices.empty() || walk.vertices.size() != walk.signs.size() + 1) return false;
  for (std::size_t i = 0; i < walk.signs.size(); ++i) {
    const Vertex a = walk.vertices[i];
    const Vertex b = walk.vertices[i + 1];
    if (walk.signs[i] == 1) {
      if (!g.has_dart(a, b)) return false;
    } else if (walk.signs[i] == -1) {
      if (!g.has_dart(b, a)) return false;
    } else {
      return false;
    }
  }
  return true;
}

Digraph reverse(const Digraph& g) {
  std::vector<Dart> darts;
  darts.reserve(g.size());
  for (const auto& d : g.darts()) darts.push_back(d.reversed());
  return Digraph(g.order(), std::move(darts));
}

Digraph underlying(const Digraph& g) {
  std::vector<Dart> darts;
  darts.reserve(2 * g.size());
  for (const auto& d : g.darts()) {
    darts.push_back(d);
    darts.push_back(d.reversed());
  }
  return Digraph::from_darts_dedup(g.order(), std::move(darts));
}

bool is_graph(const Digraph& g) {
  for (const auto& d : g.darts())
    if (!g.has_dart(d.head, d.tail)) return false;
  return true;
}

bool is_orientation(const Digraph& g) {
  for (const auto& d : g.darts())
    if (g.has_dart(d.head, d.tail)) return false;
  return true;
}

Valence valences(const Digraph& g, Vertex v) {
  if (v >= g.order()) throw Error(ErrorKind::InvalidInput, "vertex out of range");
  return {g.out_valence(v), g.in_valence(v)};
}

bool is_k_valent(const Digraph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.out_valence(v) != k || g.in_valence(v) != k) return false;
  return true;
}

bool has_sources_or_sinks(const Digraph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.out_valence(v) == 0 || g.in_valence(v) == 0) return true;
  return false;
}

std::vector<std::pair<Dart, Dart>> two_darts(const Digraph& g) {
  std::vector<std::pair<Dart, Dart>> result;
  for (const auto& x : g.darts())
    for (Vertex w : g.out_neighbours(x.head))
      if (w != x.tail) result.push_back({x, Dart{x.head, w}});
  return result;
}

std::vector<std::size_t> component_ids(const Digraph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> id(g.order(), unset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (id[root] != unset) continue;
    id[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (auto nbs : {g.out_neighbours(v), g.in_neighbours(v)}) {
        for (Vertex w : nbs) {
          if (id[w] == unset) {
            id[w] = root;
            stack.push_back(w);
          }
        }
      }
    }
  }
  // renumber roots densely
  std::vector<std::size_t> dense(g.order(), unset);
  std::size_t next = 0;
  for (auto& c : id) {
    if (dense[c] == unset) dense[c] = next++;
    c = dense[c];
  }
  return id;
}

std::vector<std::vector<Vertex>> connected_components(const Digraph& g) {
  const auto id = component_ids(g);
  std::size_t count = 0;
  for (auto c : id) count = std::max(count, c + 1);
  std::vector<std::vector<Vertex>> comps(count);
  for (Vertex v = 0; v < g.order(); ++v) comps[id[v]].push_back(v);
  return comps;
}

bool is_connected(const Digraph& g) {
  if (g.order() == 0) return true;
  const auto id = component_ids(g);
  return std::all_of(id.begin(), id.end(), [](std::size_t c) { return c == 0; });
}

std::optional<std::vector<int>> bipartition(const Digraph& g) {
  std::vector<int> colour(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (auto nbs : {g.out_neighbours(v), g.in_neighbours(v)}) {
        for (Vertex w : nbs) {
          if (colour[w] == -1) {
            colour[w] = 1 - colour[v];
            queue.push_back(w);
          } else if (colour[w] == colour[v]) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Digraph& g) { return bipartition(g).has_value(); }

namespace {

// Neighbour lists of the underlying simple graph.
std::vector<std::vector<Vertex>> simple_adjacency(const Digraph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (const auto& d : g.darts()) {
    adj[d.tail].push_back(d.head);
    adj[d.head].push_back(d.tail);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

}  // namespace

std::size_t girth(const Digraph& g) {
  const auto adj = simple_adjacency(g);
  const std::size_t n = g.order();
  std::size_t best = kNoCycle;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unset);
    dist[root] = 0;
    parent[root] = root;
    queue.clear();
    queue.push_back(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex v = queue[qi];
      // no shorter cycle can be closed from this depth on
      if (best != kNoCycle && 2 * dist[v] >= best) break;
      for (Vertex w : adj[v]) {
        if (dist[w] == unset) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::size_t diameter(const Digraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "diameter of a disconnected digraph");
  const auto adj = simple_adjacency(g);
  const std::size_t n = g.order();
  std::size_t diam = 0;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unset);
    dist[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex v = queue[qi];
      for (Vertex w : adj[v]) {
        if (dist[w] == unset) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    diam = std::max(diam, dist[queue.back()]);
  }
  return diam;
}

Digraph dcyc(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "DCyc[n] requires n >= 3, got " + std::to_string(n));
  std::vector<Dart> darts;
  for (Vertex i = 0; i < n; ++i) {
    const auto j = static_cast<Vertex>((i + 1) % n);
    darts.push_back({i, j});
    darts.push_back({j, i});
  }
  return Digraph(n, std::move(darts));
}

Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "directed cycle requires n >= 2");
  std::vector<Dart> darts;
  for (Vertex i = 0; i < n; ++i) darts.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Digraph(n, std::move(darts));
}

Digraph induced_subdigraph(const Digraph& g, std::span<const Vertex> vertices) {
  constexpr auto absent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> index(g.order(), absent);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Dart> darts;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.out_neighbours(vertices[i]))
      if (index[w] != absent) darts.push_back({static_cast<Vertex>(i), index[w]});
  return Digraph(vertices.size(), std::move(darts));
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<Dart> darts(a.darts().begin(), a.darts().end());
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& d : b.darts()) darts.push_back({d.tail + shift, d.head + shift});
  return Digraph(a.order() + b.order(), std::move(darts));
}

Digraph relabel(const Digraph& g, std::span<const Vertex> images) {
  if (images.size() != g.order()) throw Error(ErrorKind::InvalidInput, "relabel: wrong length");
  std::vector<Dart> darts;
  darts.reserve(g.size());
  for (const auto& d : g.darts()) darts.push_back({images[d.tail], images[d.head]});
  return Digraph(g.order(), std::move(darts));
}

}  // namespace sepbox
