#include "sepbox/named.hpp"

#include <array>
#include <charconv>
#include <string>
#include <vector>

namespace sepbox::named {

namespace {

void add_edge(std::vector<Dart>& darts, Vertex u, Vertex v) {
  darts.push_back({u, v});
  darts.push_back({v, u});
}

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = name.substr(prefix.size());
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return n;
}

}  // namespace

Digraph complete(std::size_t n) {
  std::vector<Dart> darts;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) add_edge(darts, u, v);
  return Digraph(n, std::move(darts));
}

Digraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Dart> darts;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) add_edge(darts, u, static_cast<Vertex>(a + v));
  return Digraph(a + b, std::move(darts));
}

Digraph cube() {
  std::vector<Dart> darts;
  for (Vertex v = 0; v < 8; ++v)
    for (Vertex bit = 1; bit < 8; bit <<= 1) darts.push_back({v, v ^ bit});
  return Digraph(8, std::move(darts));
}

Digraph petersen() {
  std::vector<std::array<Vertex, 2>> pairs;
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  std::vector<Dart> darts;
  for (Vertex i = 0; i < pairs.size(); ++i)
    for (Vertex j = 0; j < pairs.size(); ++j) {
      const auto& p = pairs[i];
      const auto& q = pairs[j];
      if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]) darts.push_back({i, j});
    }
  return Digraph(pairs.size(), std::move(darts));
}

Digraph tutte_8_cage() {
  std::vector<std::array<Vertex, 2>> duads;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b) duads.push_back({a, b});
  auto duad_index = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    for (Vertex i = 0; i < duads.size(); ++i)
      if (duads[i][0] == a && duads[i][1] == b) return i;
    return Vertex{0};
  };
  // synthemes: perfect matchings of {0..5}, each as three duad indices
  std::vector<std::array<Vertex, 3>> synthemes;
  for (Vertex b = 1; b < 6; ++b) {
    std::vector<Vertex> rest;
    for (Vertex v = 1; v < 6; ++v)
      if (v != b) rest.push_back(v);
    for (std::size_t k = 1; k < 4; ++k) {
      std::vector<Vertex> last;
      for (std::size_t j = 1; j < 4; ++j)
        if (j != k) last.push_back(rest[j]);
      synthemes.push_back({duad_index(0, b), duad_index(rest[0], rest[k]), duad_index(last[0], last[1])});
    }
  }
  std::vector<Dart> darts;
  for (Vertex s = 0; s < synthemes.size(); ++s)
    for (Vertex d : synthemes[s]) add_edge(darts, d, static_cast<Vertex>(duads.size() + s));
  return Digraph(duads.size() + synthemes.size(), std::move(darts));
}

std::optional<Digraph> by_name(std::string_view name) {
  if (name == "K4") return complete(4);
  if (name == "K33") return complete_bipartite(3, 3);
  if (name == "cube") return cube();
  if (name == "petersen") return petersen();
  if (name == "tutte8") return tutte_8_cage();
  if (auto n = suffix_number(name, "DCyc"); n && *n >= 3) return dcyc(*n);
  if (auto n = suffix_number(name, "C"); n && *n >= 2) return directed_cycle(*n);
  return std::nullopt;
}

}  // namespace sepbox::named
