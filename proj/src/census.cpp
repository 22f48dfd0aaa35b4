#include "sepbox/census.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <set>

#include "sepbox/alter.hpp"
#include "sepbox/error.hpp"
#include "sepbox/io.hpp"
#include "sepbox/named.hpp"
#include "sepbox/symmetry.hpp"

namespace sepbox {

namespace {

constexpr std::size_t kMaxOrder = 32;

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 3; --p) {
    current.push_back(p);
    partitions(n - p, p, current, out);
    current.pop_back();
  }
}

/// Exhaustive search for the second permutation g of a 2-in/2-out
/// orientation f u g with f fixed.
class Enumerator {
 public:
  Enumerator(std::size_t n, const std::vector<std::size_t>& cycle_type, std::set<CanonicalForm>& found)
      : n_(n), found_(found) {
    std::size_t start = 0;
    for (auto len : cycle_type) {
      for (std::size_t k = 0; k < len; ++k) {
        f_[start + k] = static_cast<Vertex>(start + (k + 1) % len);
        finv_[start + (k + 1) % len] = static_cast<Vertex>(start + k);
      }
      start += len;
    }
    // The centraliser of f fixing 0 permutes the cycles other than the first
    // one of each length, so g(0) only needs one point per such length.
    const std::size_t first_len = cycle_type[0];
    for (Vertex v = 0; v < first_len; ++v) first_choices_.push_back(v);
    start = first_len;
    std::size_t last_len = 0;
    for (std::size_t c = 1; c < cycle_type.size(); ++c) {
      if (cycle_type[c] != last_len) first_choices_.push_back(static_cast<Vertex>(start));
      last_len = cycle_type[c];
      start += cycle_type[c];
    }
  }

  void run() {
    g_.fill(kUnset);
    used_.fill(false);
    for (Vertex target : first_choices_)
      if (allowed(0, target)) {
        assign(0, target);
        extend(1);
        unassign(0, target);
      }
  }

 private:
  static constexpr Vertex kUnset = static_cast<Vertex>(-1);

  bool allowed(Vertex v, Vertex u) const {
    if (used_[u] || u == v || u == f_[v] || u == finv_[v]) return false;
    return g_[u] != v;
  }
  void assign(Vertex v, Vertex u) {
    g_[v] = u;
    used_[u] = true;
  }
  void unassign(Vertex v, Vertex u) {
    g_[v] = kUnset;
    used_[u] = false;
  }

  void extend(Vertex v) {
    if (v == n_) {
      leaf();
      return;
    }
    for (Vertex u = 0; u < n_; ++u)
      if (allowed(v, u)) {
        assign(v, u);
        extend(v + 1);
        unassign(v, u);
      }
  }

  std::size_t closed_walks(Vertex v, std::size_t length) const {
    std::size_t count = 0;
    const std::size_t walks = std::size_t{1} << length;
    for (std::size_t code = 0; code < walks; ++code) {
      Vertex x = v;
      for (std::size_t s = 0; s < length; ++s) x = (code >> s) & 1 ? g_[x] : f_[x];
      count += x == v;
    }
    return count;
  }

  bool uniform_local_structure() const {
    for (std::size_t length : {3u, 4u}) {
      const auto reference = closed_walks(0, length);
      for (Vertex v = 1; v < n_; ++v)
        if (closed_walks(v, length) != reference) return false;
    }
    return true;
  }

  bool connected() const {
    std::array<Vertex, kMaxOrder> parent{};
    for (Vertex v = 0; v < n_; ++v) parent[v] = v;
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = n_;
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : {f_[v], g_[v]}) {
        const Vertex a = find(v), b = find(w);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    return components == 1;
  }

  void leaf() {
    if (!uniform_local_structure() || !connected()) return;
    std::vector<Dart> darts;
    for (Vertex v = 0; v < n_; ++v) {
      darts.push_back({v, f_[v]});
      darts.push_back({v, g_[v]});
    }
    const Digraph d(n_, std::move(darts));
    const auto aut = automorphism_group(d);
    if (aut.order % (2 * n_) != 0) return;
    if (!is_transitive_on(aut.group, Action::Darts, d)) return;
    found_.insert(canonical_form(d));
  }

  std::size_t n_;
  std::set<CanonicalForm>& found_;
  std::array<Vertex, kMaxOrder> f_{};
  std::array<Vertex, kMaxOrder> finv_{};
  std::array<Vertex, kMaxOrder> g_{};
  std::array<bool, kMaxOrder> used_{};
  std::vector<Vertex> first_choices_;
};

struct PublishedName {
  std::size_t order;
  std::size_t ap;
  const char* name;
};

constexpr PublishedName kPublished[] = {
    {6, 3, "ATD[6,1]"},   {8, 2, "ATD[8,1]"},   {8, 4, "ATD[8,2]"},   {9, 3, "ATD[9,1]"},
    {10, 2, "ATD[10,1]"}, {10, 5, "ATD[10,2]"}, {12, 1, "ATD[12,1]"}, {12, 4, "ATD[12,2]"},
    {12, 2, "ATD[12,3]"}, {12, 3, "ATD[12,4]"}, {12, 6, "ATD[12,5]"},
};

std::string local_atd_name(std::size_t n, std::size_t i) {
  return "ATD[" + std::to_string(n) + "," + std::to_string(i) + "]";
}

}  // namespace

std::optional<std::string> published_name(std::size_t order, std::size_t alter_perimeter) {
  for (const auto& p : kPublished)
    if (p.order == order && p.ap == alter_perimeter) return p.name;
  return std::nullopt;
}

CensusEntry make_entry(std::string name, Digraph g, Provenance provenance) {
  CensusEntry e;
  e.local_name = name;
  e.name = std::move(name);
  e.provenance = provenance;
  e.is_graph = sepbox::is_graph(g);
  e.alter_perimeter = is_connected(g) && g.order() > 0 ? alter_perimeter(g) : 0;
  e.reversible = is_reversible(g);
  e.digraph = std::move(g);
  return e;
}

std::vector<CensusEntry> generate_atd(std::size_t n, std::size_t bound) {
  if (n > bound || n > kMaxOrder)
    throw Error(ErrorKind::InvalidInput, "order " + std::to_string(n) + " exceeds the generation bound");
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::size_t> current;
  partitions(n, n, current, types);
  std::vector<std::future<std::set<CanonicalForm>>> jobs;
  for (const auto& type : types)
    jobs.push_back(std::async(std::launch::async, [n, type] {
      std::set<CanonicalForm> part;
      Enumerator(n, type, part).run();
      return part;
    }));
  std::set<CanonicalForm> found;
  for (auto& job : jobs) found.merge(job.get());

  std::vector<CensusEntry> entries;
  std::size_t index = 0;
  for (const auto& form : found) {
    auto e = make_entry(local_atd_name(n, ++index), Digraph(n, form.darts), Provenance::Generated);
    if (auto published = published_name(n, e.alter_perimeter)) e.name = *published;
    entries.push_back(std::move(e));
  }
  return entries;
}

CensusEntry dcyc_entry(std::size_t n) {
  return make_entry("DCyc[" + std::to_string(n) + "]", dcyc(n), Provenance::Generated);
}

std::string ValidationReport::problems() const {
  std::string out;
  auto add = [&](bool ok, const char* what) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += what;
  };
  add(connected, "not connected");
  add(two_valent, "not 2-valent");
  add(dart_transitive, "not dart-transitive");
  return out;
}

ValidationReport validate_entry(const Digraph& g) {
  ValidationReport r;
  r.connected = g.order() > 0 && is_connected(g);
  r.two_valent = is_k_valent(g, 2);
  r.dart_transitive = is_dart_transitive(g);
  return r;
}

CensusEntry ingest(const std::filesystem::path& path, bool force) {
  auto g = io::load(path);
  const auto report = validate_entry(g);
  if (!report.ok() && !force)
    throw Error(ErrorKind::HypothesisNotMet, path.string() + ": " + report.problems());
  return make_entry(path.stem().string(), std::move(g), Provenance::Ingested);
}

namespace {

std::optional<std::pair<std::size_t, std::string>> parse_atd_name(const std::string& name) {
  if (name.rfind("ATD[", 0) != 0 || name.back() != ']') return std::nullopt;
  std::string inner = name.substr(4, name.size() - 5);
  inner.erase(std::remove(inner.begin(), inner.end(), ' '), inner.end());
  const auto comma = inner.find(',');
  if (comma == std::string::npos || comma == 0) throw Error(ErrorKind::InvalidInput, "bad census name " + name);
  return std::pair{static_cast<std::size_t>(std::stoul(inner.substr(0, comma))), "ATD[" + inner + "]"};
}

std::optional<std::size_t> parse_dcyc_name(const std::string& name) {
  if (name.rfind("DCyc[", 0) != 0 || name.back() != ']') return std::nullopt;
  return std::stoul(name.substr(5, name.size() - 6));
}

const CensusEntry* find_atd(const std::vector<CensusEntry>& entries, const std::string& wanted) {
  for (const auto& e : entries)
    if (e.name == wanted) return &e;
  for (const auto& e : entries)
    if (e.local_name == wanted) return &e;
  return nullptr;
}

}  // namespace

CensusEntry resolve_entry(const std::string& name) {
  CensusCatalog catalog;
  return catalog.get(name);
}

const std::vector<CensusEntry>& CensusCatalog::generated(std::size_t n) {
  auto it = by_order_.find(n);
  if (it == by_order_.end()) it = by_order_.emplace(n, generate_atd(n, bound_)).first;
  return it->second;
}

void CensusCatalog::add(CensusEntry entry) {
  auto key = entry.name;
  others_.insert_or_assign(std::move(key), std::move(entry));
}

const CensusEntry& CensusCatalog::get(const std::string& name) {
  if (auto it = others_.find(name); it != others_.end()) return it->second;
  if (auto atd = parse_atd_name(name)) {
    if (const auto* e = find_atd(generated(atd->first), atd->second)) return *e;
    throw Error(ErrorKind::InvalidInput, "no census entry named " + name);
  }
  CensusEntry entry;
  if (auto n = parse_dcyc_name(name)) {
    entry = dcyc_entry(*n);
  } else if (auto g = named::by_name(name)) {
    entry = make_entry(name, std::move(*g), Provenance::Generated);
  } else {
    entry = ingest(name);
  }
  return others_.emplace(name, std::move(entry)).first->second;
}

}  // namespace sepbox
