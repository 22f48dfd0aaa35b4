#include "search.hpp"

#include <algorithm>
#include <numeric>

#include "sepbox/error.hpp"

namespace sepbox::detail {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return (h ^ x) * 0x100000001b3ULL + 0x7f4a7c15ULL;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::size_t n, std::span<const std::uint64_t> colours)
    : lab(n), pos(n), cell(n), end(n) {
  std::iota(lab.begin(), lab.end(), Vertex{0});
  if (!colours.empty()) {
    std::stable_sort(lab.begin(), lab.end(), [&](Vertex a, Vertex b) { return colours[a] < colours[b]; });
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pos[lab[i]] = static_cast<Vertex>(i);
    const bool boundary = i + 1 == n || (!colours.empty() && colours[lab[i]] != colours[lab[i + 1]]);
    if (boundary) {
      for (std::size_t j = start; j <= i; ++j) cell[lab[j]] = static_cast<Vertex>(start);
      end[start] = static_cast<Vertex>(i + 1);
      ++cells;
      start = i + 1;
    }
  }
}

std::size_t Partition::target_cell() const {
  std::size_t best = lab.size();
  std::size_t best_size = lab.size() + 1;
  for (std::size_t s = 0; s < lab.size(); s = end[s]) {
    const std::size_t size = end[s] - s;
    if (size > 1 && size < best_size) {
      best = s;
      best_size = size;
      if (size == 2) break;
    }
  }
  return best;
}

// ---------------------------------------------------------------- Refiner

Refiner::Refiner(const Digraph& g)
    : g_(g),
      cnt_out_(g.order(), 0),
      cnt_in_(g.order(), 0),
      touched_flag_(g.order(), 0),
      in_queue_(g.order(), 0) {}

void Refiner::push(Vertex start) {
  if (in_queue_[start]) return;
  in_queue_[start] = 1;
  queue_.push_back(start);
}

std::uint64_t Refiner::refine_all(Partition& p) {
  for (std::size_t s = 0; s < p.order(); s = p.end[s]) push(static_cast<Vertex>(s));
  return refine(p, mix(0x51ed270b27a1f1c3ULL, p.cells));
}

std::uint64_t Refiner::individualise(Partition& p, Vertex v) {
  const Vertex start = p.cell[v];
  const Vertex stop = p.end[start];
  if (stop - start <= 1) throw Error(ErrorKind::InternalConsistency, "individualising a singleton cell");
  // move v to the front of its cell
  const Vertex other = p.lab[start];
  const Vertex pv = p.pos[v];
  p.lab[start] = v;
  p.pos[v] = start;
  p.lab[pv] = other;
  p.pos[other] = pv;
  for (Vertex i = start + 1; i < stop; ++i) p.cell[p.lab[i]] = start + 1;
  p.end[start] = start + 1;
  p.end[start + 1] = stop;
  ++p.cells;
  push(start);
  return refine(p, mix(0x2545f4914f6cdd1dULL, (std::uint64_t{start} << 32) | (stop - start)));
}

std::uint64_t Refiner::refine(Partition& p, std::uint64_t trace) {
  struct Keyed {
    std::uint64_t key;
    Vertex pos;
    Vertex v;
  };
  std::vector<Keyed> group;
  std::vector<Vertex> frag_starts;

  while (queue_head_ < queue_.size()) {
    if (p.discrete()) break;
    const Vertex w_start = queue_[queue_head_++];
    in_queue_[w_start] = 0;
    splitter_.assign(p.lab.begin() + w_start, p.lab.begin() + p.end[w_start]);

    for (Vertex w : splitter_) {
      for (Vertex u : g_.in_neighbours(w)) {
        ++cnt_out_[u];
        if (!touched_flag_[u]) {
          touched_flag_[u] = 1;
          touched_.push_back(u);
        }
      }
      for (Vertex u : g_.out_neighbours(w)) {
        ++cnt_in_[u];
        if (!touched_flag_[u]) {
          touched_flag_[u] = 1;
          touched_.push_back(u);
        }
      }
    }
    std::sort(touched_.begin(), touched_.end(), [&](Vertex a, Vertex b) { return p.pos[a] < p.pos[b]; });

    std::size_t ti = 0;
    while (ti < touched_.size()) {
      const Vertex c = p.cell[touched_[ti]];
      std::size_t tj = ti;
      while (tj < touched_.size() && p.cell[touched_[tj]] == c) ++tj;
      const Vertex c_end = p.end[c];
      const std::size_t size = c_end - c;
      const std::size_t n_touched = tj - ti;
      if (size == 1) {
        ti = tj;
        continue;
      }
      group.clear();
      for (std::size_t k = ti; k < tj; ++k) {
        const Vertex u = touched_[k];
        group.push_back({(std::uint64_t{cnt_out_[u]} << 32) | cnt_in_[u], p.pos[u], u});
      }
      std::sort(group.begin(), group.end(), [](const Keyed& a, const Keyed& b) {
        return a.key != b.key ? a.key < b.key : a.pos < b.pos;
      });
      const bool has_untouched = n_touched < size;
      if (!has_untouched && group.front().key == group.back().key) {
        ti = tj;
        continue;
      }

      // touched vertices go to the tail of the cell, sorted by key
      const Vertex region = static_cast<Vertex>(c_end - n_touched);
      scratch_.clear();
      for (Vertex q = region; q < c_end; ++q)
        if (!touched_flag_[p.lab[q]]) scratch_.push_back(p.lab[q]);
      std::size_t hole = 0;
      for (const auto& kv : group) {
        if (kv.pos < region) {
          const Vertex u = scratch_[hole++];
          p.lab[kv.pos] = u;
          p.pos[u] = kv.pos;
        }
      }
      for (std::size_t k = 0; k < group.size(); ++k) {
        const Vertex q = static_cast<Vertex>(region + k);
        p.lab[q] = group[k].v;
        p.pos[group[k].v] = q;
      }

      frag_starts.clear();
      if (has_untouched) frag_starts.push_back(c);
      for (std::size_t k = 0; k < group.size(); ++k)
        if (k == 0 || group[k].key != group[k - 1].key) frag_starts.push_back(static_cast<Vertex>(region + k));

      trace = mix(trace, (std::uint64_t{c} << 32) | frag_starts.size());
      std::size_t largest = 0;
      std::size_t largest_size = 0;
      for (std::size_t f = 0; f < frag_starts.size(); ++f) {
        const Vertex fs = frag_starts[f];
        const Vertex fe = f + 1 < frag_starts.size() ? frag_starts[f + 1] : c_end;
        p.end[fs] = fe;
        if (f > 0)
          for (Vertex q = fs; q < fe; ++q) p.cell[p.lab[q]] = fs;
        const std::uint64_t key = has_untouched && f == 0 ? 0 : group[fs - region].key;
        trace = mix(trace, key);
        trace = mix(trace, fe - fs);
        if (fe - fs > largest_size) {
          largest_size = fe - fs;
          largest = f;
        }
      }
      p.cells += frag_starts.size() - 1;
      if (in_queue_[c]) {
        for (std::size_t f = 1; f < frag_starts.size(); ++f) push(frag_starts[f]);
      } else {
        for (std::size_t f = 0; f < frag_starts.size(); ++f)
          if (f != largest) push(frag_starts[f]);
      }
      ti = tj;
    }

    for (Vertex u : touched_) {
      cnt_out_[u] = 0;
      cnt_in_[u] = 0;
      touched_flag_[u] = 0;
    }
    touched_.clear();
  }
  for (std::size_t i = queue_head_; i < queue_.size(); ++i) in_queue_[queue_[i]] = 0;
  queue_.clear();
  queue_head_ = 0;
  return mix(trace, p.cells);
}

// ---------------------------------------------------------------- search

namespace {

class PointUnion {
 public:
  explicit PointUnion(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void add_permutation(const Permutation& g) {
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      Vertex a = find(static_cast<Vertex>(x));
      Vertex b = find(g[static_cast<Vertex>(x)]);
      if (a == b) continue;
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
    }
  }
  std::size_t class_size(Vertex x) { return size_[find(x)]; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Digraph& g, std::span<const std::uint64_t> colours)
      : g_(g), colours_(colours), refiner_(g) {}

  SearchResult run() {
    SearchResult result;
    const std::size_t n = g_.order();
    if (n == 0) return result;

    Partition root(n, colours_);
    traces_.push_back(refiner_.refine_all(root));
    path_.push_back(std::move(root));
    while (!path_.back().discrete()) {
      Partition next = path_.back();
      const auto tc = next.target_cell();
      const Vertex v = next.lab[tc];
      choices_.push_back(v);
      traces_.push_back(refiner_.individualise(next, v));
      path_.push_back(std::move(next));
    }
    depth_ = choices_.size();
    first_leaf_ = path_.back().lab;

    PointUnion orbits(n);
    for (std::size_t k = depth_; k-- > 0;) {
      const Partition& node = path_[k];
      const auto tc = node.target_cell();
      const std::vector<Vertex> cell(node.lab.begin() + tc, node.lab.begin() + node.end[tc]);
      const Vertex v = choices_[k];
      std::vector<Vertex> failed;
      for (Vertex w : cell) {
        if (orbits.find(w) == orbits.find(v)) continue;
        const bool known_bad = std::any_of(failed.begin(), failed.end(),
                                           [&](Vertex f) { return orbits.find(f) == orbits.find(w); });
        if (known_bad) continue;
        Partition child = node;
        const auto trace = refiner_.individualise(child, w);
        std::optional<Permutation> found;
        if (trace == traces_[k + 1] && child.cells == path_[k + 1].cells) found = find_leaf(child, k + 1);
        if (found) {
          orbits.add_permutation(*found);
          result.generators.push_back(std::move(*found));
        } else {
          failed.push_back(w);
        }
      }
      result.order *= static_cast<unsigned long long>(orbits.class_size(v));
    }
    result.base = choices_;
    return result;
  }

 private:
  std::optional<Permutation> find_leaf(const Partition& node, std::size_t level) {
    if (node.discrete()) return leaf_automorphism(node);
    if (level >= depth_) return std::nullopt;
    const auto tc = node.target_cell();
    const std::vector<Vertex> cell(node.lab.begin() + tc, node.lab.begin() + node.end[tc]);
    for (Vertex x : cell) {
      Partition child = node;
      const auto trace = refiner_.individualise(child, x);
      if (trace != traces_[level + 1] || child.cells != path_[level + 1].cells) continue;
      if (auto found = find_leaf(child, level + 1)) return found;
    }
    return std::nullopt;
  }

  std::optional<Permutation> leaf_automorphism(const Partition& leaf) const {
    std::vector<Vertex> images(g_.order());
    for (std::size_t i = 0; i < images.size(); ++i) images[first_leaf_[i]] = leaf.lab[i];
    for (const auto& d : g_.darts())
      if (!g_.has_dart(images[d.tail], images[d.head])) return std::nullopt;
    return Permutation(std::move(images));
  }

  const Digraph& g_;
  std::span<const std::uint64_t> colours_;
  Refiner refiner_;
  std::vector<Partition> path_;
  std::vector<std::uint64_t> traces_;
  std::vector<Vertex> choices_;
  std::vector<Vertex> first_leaf_;
  std::size_t depth_ = 0;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const Digraph& g, std::span<const std::uint64_t> colours, const PermGroup& aut)
      : g_(g), colours_(colours), aut_(aut), refiner_(g) {}

  std::vector<Vertex> run() {
    if (g_.order() == 0) return {};
    Partition root(g_.order(), colours_);
    refiner_.refine_all(root);
    std::vector<Vertex> prefix;
    explore(root, prefix);
    return best_lab_;
  }

 private:
  void explore(const Partition& node, std::vector<Vertex>& prefix) {
    if (node.discrete()) {
      consider_leaf(node);
      return;
    }
    const auto tc = node.target_cell();
    const std::vector<Vertex> cell(node.lab.begin() + tc, node.lab.begin() + node.end[tc]);
    const auto stab = aut_.order() == 1 ? std::vector<Permutation>{} : aut_.pointwise_stabiliser_generators(prefix);
    PointUnion orbits(g_.order());
    for (const auto& s : stab) orbits.add_permutation(s);
    std::vector<Vertex> reps;
    for (Vertex x : cell) {
      if (std::none_of(reps.begin(), reps.end(), [&](Vertex r) { return orbits.find(r) == orbits.find(x); }))
        reps.push_back(x);
    }
    for (Vertex x : reps) {
      Partition child = node;
      refiner_.individualise(child, x);
      prefix.push_back(x);
      explore(child, prefix);
      prefix.pop_back();
    }
  }

  void consider_leaf(const Partition& leaf) {
    std::vector<Dart> code;
    code.reserve(g_.size());
    for (const auto& d : g_.darts()) code.push_back({leaf.pos[d.tail], leaf.pos[d.head]});
    std::sort(code.begin(), code.end());
    if (best_lab_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = leaf.lab;
    }
  }

  const Digraph& g_;
  std::span<const std::uint64_t> colours_;
  const PermGroup& aut_;
  Refiner refiner_;
  std::vector<Dart> best_code_;
  std::vector<Vertex> best_lab_;
};

}  // namespace

SearchResult search_automorphisms(const Digraph& g, std::span<const std::uint64_t> colours) {
  if (!colours.empty() && colours.size() != g.order())
    throw Error(ErrorKind::InvalidInput, "colour vector length differs from digraph order");
  return AutomorphismSearch(g, colours).run();
}

std::vector<Vertex> canonical_labelling(const Digraph& g, std::span<const std::uint64_t> colours,
                                        const PermGroup& aut) {
  return CanonicalSearch(g, colours, aut).run();
}

}  // namespace sepbox::detail
