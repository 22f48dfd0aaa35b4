#include "sepbox/alter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "sepbox/error.hpp"

namespace sepbox {

AlterLabeling alter_labeling(const Digraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return {};
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "alter labeling needs a connected digraph");

  std::vector<std::int64_t> potential(n, 0);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.out_neighbours(u))
      if (!seen[v]) {
        seen[v] = 1;
        potential[v] = potential[u] + 1;
        queue.push_back(v);
      }
    for (Vertex v : g.in_neighbours(u))
      if (!seen[v]) {
        seen[v] = 1;
        potential[v] = potential[u] - 1;
        queue.push_back(v);
      }
  }

  AlterLabeling result;
  for (const auto& d : g.darts())
    result.modulus = std::gcd(result.modulus, potential[d.tail] + 1 - potential[d.head]);
  result.class_of.resize(n);
  const std::int64_t m = result.modulus;
  for (Vertex v = 0; v < n; ++v) {
    const std::int64_t p = potential[v] - potential[0];
    result.class_of[v] = m == 0 ? p : ((p % m) + m) % m;
  }
  result.perimeter = std::set<std::int64_t>(result.class_of.begin(), result.class_of.end()).size();
  return result;
}

std::size_t alter_perimeter(const Digraph& g) { return alter_labeling(g).perimeter; }

namespace {

std::optional<Walk> bounded_search(const Digraph& g, Vertex u, Vertex v, std::int64_t bound) {
  const std::size_t n = g.order();
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);
  auto key = [&](Vertex x, std::int64_t s) { return x * width + static_cast<std::size_t>(s + bound); };
  std::vector<std::int64_t> parent(n * width, -1);
  std::vector<int> step(n * width, 0);
  std::deque<std::pair<Vertex, std::int64_t>> queue{{u, 0}};
  parent[key(u, 0)] = static_cast<std::int64_t>(key(u, 0));
  const std::size_t goal = key(v, 0);
  while (!queue.empty() && parent[goal] < 0) {
    const auto [x, s] = queue.front();
    queue.pop_front();
    auto visit = [&](Vertex y, std::int64_t t, int sign) {
      if (t < -bound || t > bound) return;
      const auto k = key(y, t);
      if (parent[k] >= 0) return;
      parent[k] = static_cast<std::int64_t>(key(x, s));
      step[k] = sign;
      queue.emplace_back(y, t);
    };
    for (Vertex y : g.out_neighbours(x)) visit(y, s + 1, 1);
    for (Vertex y : g.in_neighbours(x)) visit(y, s - 1, -1);
  }
  if (parent[goal] < 0) return std::nullopt;

  Walk walk;
  for (std::size_t k = goal; k != key(u, 0); k = static_cast<std::size_t>(parent[k])) {
    walk.vertices.push_back(static_cast<Vertex>(k / width));
    walk.signs.push_back(step[k]);
  }
  walk.vertices.push_back(u);
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.signs.begin(), walk.signs.end());
  return walk;
}

}  // namespace

std::optional<Walk> sum_zero_walk(const Digraph& g, Vertex u, Vertex v) {
  const std::size_t n = g.order();
  if (u >= n || v >= n) throw Error(ErrorKind::InvalidInput, "vertex out of range");
  if (u == v) return Walk{{u}, {}};
  const auto labels = alter_labeling(g);
  if (labels.class_of[u] != labels.class_of[v]) return std::nullopt;
  // States (vertex, partial sum) with the partial sum kept within a window
  // that widens until the walk is found.
  for (auto bound = static_cast<std::int64_t>(2 * n);; bound *= 2)
    if (auto walk = bounded_search(g, u, v, bound)) return walk;
}

}  // namespace sepbox
