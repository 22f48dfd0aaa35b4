// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "expected_checks.hpp"
#include "oracles.hpp"
#include "sepbox/alter.hpp"
#include "sepbox/classify.hpp"
#include "sepbox/named.hpp"
#include "sepbox/products.hpp"
#include "sepbox/symmetry.hpp"
#include "sepbox/table.hpp"
#include "test_util.hpp"

using namespace sepbox;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGcdSeconds = 10;
constexpr double kTableSeconds = 120;
constexpr double kPhiSeconds = 10;
constexpr double kA2gSeconds = 30;
constexpr double kStretchSeconds = 1800;
constexpr std::size_t kGcdTrials = 100;
constexpr std::size_t kMaxRandomOrder = 20;
constexpr std::uint32_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::vector<PermGroup> g_computed;

const PermGroup& remember(PermGroup g) {
  g_computed.push_back(std::move(g));
  return g_computed.back();
}

int report(int number, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit > 0) {
    std::ostringstream msg;
    msg << "took " << seconds << " s, limit " << limit << " s";
    out.require(seconds < limit, msg.str());
  }
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << seconds << " s)\n";
  for (std::size_t i = 0; i < out.notes.size() && i < 20; ++i) std::cout << "    " << out.notes[i] << '\n';
  std::cout.flush();
  return out.ok ? 0 : 1;
}

struct Reference {
  const char* name1;
  const char* name2;
  std::size_t V, AP;
  GroupOrder vs;
  std::size_t girth, diam;
  SymmetryTag type;
};

const GroupOrder p2(unsigned k) { return GroupOrder(1) << k; }

std::vector<Reference> table1() {
  using T = SymmetryTag;
  return {
      {"ATD[6,1]", "DCyc[3]", 36, 6, 8, 4, 5, T::LR},      {"ATD[6,1]", "DCyc[4]", 48, 12, p2(11), 4, 6, T::DT},
      {"ATD[6,1]", "DCyc[5]", 60, 6, 8, 4, 6, T::LR},      {"ATD[6,1]", "DCyc[6]", 72, 12, 64, 4, 6, T::LR},
      {"ATD[6,1]", "DCyc[7]", 84, 6, 8, 4, 6, T::LR},      {"ATD[6,1]", "ATD[8,1]", 96, 12, 64, 4, 7, T::LR},
      {"ATD[6,1]", "ATD[8,2]", 96, 24, p2(23), 4, 12, T::DT}, {"ATD[6,1]", "DCyc[8]", 96, 12, 64, 4, 7, T::LR},
      {"ATD[8,1]", "DCyc[3]", 48, 4, 4, 6, 5, T::LR},      {"ATD[8,1]", "DCyc[4]", 32, 4, 4, 4, 4, T::LR},
      {"ATD[8,1]", "DCyc[5]", 80, 4, 4, 6, 7, T::LR},      {"ATD[8,1]", "ATD[8,2]", 64, 8, 16, 4, 6, T::LR},
      {"ATD[8,1]", "DCyc[8]", 64, 4, 4, 6, 6, T::LR},      {"ATD[8,2]", "DCyc[3]", 48, 8, 16, 4, 5, T::LR},
      {"ATD[8,2]", "DCyc[4]", 32, 8, p2(7), 4, 4, T::DT},  {"ATD[8,2]", "DCyc[5]", 80, 8, 16, 4, 7, T::LR},
  };
}

std::vector<Reference> table2() {
  using T = SymmetryTag;
  return {
      {"ATD[6,1]", "ATD[6,1]", 24, 6, 32, 4, 4, T::DT},      {"ATD[8,1]", "ATD[8,1]", 64, 4, 8, 6, 5, T::DT},
      {"ATD[8,2]", "ATD[8,2]", 32, 8, p2(7), 4, 4, T::DT},   {"ATD[9,1]", "ATD[9,1]", 54, 6, 24, 6, 5, T::DT},
      {"ATD[10,1]", "ATD[10,1]", 100, 4, 8, 8, 6, T::DT},    {"ATD[10,2]", "ATD[10,2]", 40, 10, p2(9), 4, 5, T::DT},
  };
}

void check_table(Outcome& out, const std::vector<Reference>& refs, TableMode mode) {
  auto& catalog = CensusFixture::catalog();
  std::vector<std::pair<CensusEntry, CensusEntry>> spec;
  for (const auto& r : refs) spec.emplace_back(catalog.get(r.name1), catalog.get(r.name2));
  const auto rows = run_table(spec, mode);
  out.require(rows.size() == refs.size(), "row count");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& got = rows[i];
    const auto& want = refs[i];
    const std::string label = std::string(want.name1) + " x " + want.name2;
    out.require(got.V == want.V, label + ": V " + std::to_string(got.V));
    out.require(got.AP == want.AP, label + ": AP " + std::to_string(got.AP));
    out.require(got.vs == want.vs, label + ": vs " + to_string(got.vs));
    out.require(got.girth == want.girth, label + ": girth " + std::to_string(got.girth));
    out.require(got.diam == want.diam, label + ": diam " + std::to_string(got.diam));
    out.require(got.symtype == want.type, label + ": type " + to_string(got.symtype));
  }
}

/// Orbits of G on the 2-darts (x, y, z), x != z, of a graph.
std::size_t two_dart_orbits(const Digraph& g, const PermGroup& G) {
  std::map<std::tuple<Vertex, Vertex, Vertex>, std::size_t> index;
  for (const auto& d : g.darts())
    for (Vertex z : g.out_neighbours(d.head))
      if (z != d.tail) index.emplace(std::tuple{d.tail, d.head, z}, index.size());
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t classes = index.size();
  for (const auto& p : G.generators())
    for (const auto& [t, i] : index) {
      const auto j = index.at({p[std::get<0>(t)], p[std::get<1>(t)], p[std::get<2>(t)]});
      const auto a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --classes;
      }
    }
  return classes;
}

}  // namespace

int main() {
  int failed = 0;
  std::cout << "acceptance suite\n";

  failed += report(1, "component count of sbp equals gcd of alter-perimeters", kGcdSeconds, [](Outcome& out) {
    std::mt19937 rng(kSeed);
    std::size_t nontrivial = 0;
    // half the factors are layered so that gcds above 1 are common
    auto factor = [&](std::size_t t) {
      if (t % 2 == 0) return testutil::random_orientation(rng, 3 + rng() % (kMaxRandomOrder - 2));
      const std::size_t k = 2 + rng() % 5;
      return testutil::random_layered_orientation(rng, k, 1 + rng() % (kMaxRandomOrder / k));
    };
    for (std::size_t t = 0; t < kGcdTrials; ++t) {
      const auto g1 = factor(t);
      const auto g2 = factor(t + t / 2);
      out.require(is_connected(g1) && is_connected(g2) && !has_sources_or_sinks(g1) && !has_sources_or_sinks(g2) &&
                      is_orientation(g1) && is_orientation(g2) && g1.order() <= kMaxRandomOrder &&
                      g2.order() <= kMaxRandomOrder,
                  "generator produced an invalid factor");
      const auto count = connected_components(sbp(g1, g2)).size();
      const auto predicted = predicted_component_count(g1, g2);
      if (predicted > 1) ++nontrivial;
      out.require(count == predicted, "trial " + std::to_string(t) + ": " + std::to_string(count) +
                                          " components, gcd " + std::to_string(predicted));
    }
    out.notes.push_back(std::to_string(nontrivial) + " of " + std::to_string(kGcdTrials) + " trials had gcd > 1");
  });

  failed += report(2, "product table, factors of order at most 8", kTableSeconds,
                   [](Outcome& out) { check_table(out, table1(), TableMode::T1); });

  failed += report(3, "self-products of census entries up to order 10", kTableSeconds,
                   [](Outcome& out) { check_table(out, table2(), TableMode::T2); });

  failed += report(4, "cdc(a2d(L)) is isomorphic to sbp(DL, DL) via phi", kPhiSeconds, [](Outcome& out) {
    const std::pair<const char*, Digraph> cases[] = {{"K4", named::complete(4)},
                                                     {"K33", named::complete_bipartite(3, 3)},
                                                     {"cube", named::cube()},
                                                     {"petersen", named::petersen()}};
    for (const auto& [name, lambda] : cases) {
      const auto images = phi_iso(lambda);
      const auto source = cdc(a2d(lambda));
      const auto dd = dart_digraph(lambda);
      const auto target = sbp(dd, dd);
      std::vector<Vertex> inverse(images.size());
      for (Vertex v = 0; v < images.size(); ++v) inverse[images[v]] = v;
      bool forward = source.size() == target.size(), backward = forward;
      for (const auto& d : source.darts()) forward = forward && target.has_dart(images[d.tail], images[d.head]);
      for (const auto& d : target.darts()) backward = backward && source.has_dart(inverse[d.tail], inverse[d.head]);
      out.require(std::set<Vertex>(images.begin(), images.end()).size() == source.order(),
                  std::string(name) + ": phi is not a bijection");
      out.require(forward && backward, std::string(name) + ": phi does not preserve darts");
    }
  });

  failed += report(5, "dart-transitive group of order 2|G|^2 on a2g(K33)", kA2gSeconds, [](Outcome& out) {
    const auto k33 = named::complete_bipartite(3, 3);
    const auto& G = remember(automorphism_group(k33).group);
    out.require(G.order() == 72, "|Aut(K33)| = " + to_string(G.order()));
    out.require(two_dart_orbits(k33, G) == 1, "Aut(K33) is not 2-dart-transitive");
    const auto groups = build_a2g_groups(k33, G);
    remember(groups.B);
    out.require(groups.B.order() == 10368, "|B| = " + to_string(groups.B.order()));
    out.require(groups.B.order() == 2 * G.order() * G.order(), "|B| != 2|G|^2");
    const auto ag = a2g(k33);
    out.require(ag.order() == 324, "a2g(K33) has " + std::to_string(ag.order()) + " vertices");
    out.require(ag.size() == 1296, "a2g(K33) has " + std::to_string(ag.size()) + " darts");
    for (const auto& g : groups.B.generators()) out.require(is_automorphism(ag, g), "generator of B is not an automorphism");
    out.require(is_transitive_on(groups.B, Action::Darts, ag), "B is not dart-transitive");
  });

  failed += report(6, "expected symmetries of every table pair", 0, [](Outcome& out) {
    auto& catalog = CensusFixture::catalog();
    auto note = [&](const std::string& label, const std::vector<std::string>& failures) {
      for (const auto& f : failures) out.require(false, label + ": " + f);
    };
    for (const auto& r : table1()) {
      const auto& g1 = catalog.get(r.name1).digraph;
      const auto& g2 = catalog.get(r.name2).digraph;
      const auto p = checks::product_groups(g1, g2);
      remember(p.expected.on_product);
      remember(p.expected.on_component);
      const std::string label = std::string(r.name1) + " x " + r.name2;
      out.require(!p.expected.tau && !p.expected.mu, label + ": unexpected tau or mu");
      note(label, checks::lifted_checks(p));
      note(label, checks::lr_checks(p));
      const auto c = type_consistency(g1, g2);
      out.require(c.expected.tag == ExpectedTag::LR && c.consistent, label + ": type consistency");
    }
    for (const auto& r : table2()) {
      const auto& d = catalog.get(r.name1).digraph;
      const auto p = checks::product_groups(d, d);
      remember(p.expected.on_product);
      const std::string label = std::string(r.name1) + " squared";
      note(label, checks::lifted_checks(p));
      note(label, checks::delta_checks(p));
      note(label + " with reverse", checks::ss_checks(d));
      const auto c = type_consistency(d, d);
      out.require(c.expected.tag == ExpectedTag::DT && c.consistent, label + ": type consistency");
    }
  });

  failed += report(7, "Tutte 8-cage: a2g has 8100 vertices, |Aut| 4147200, vs 512", kStretchSeconds, [](Outcome& out) {
    const auto tutte = named::tutte_8_cage();
    out.require(tutte.order() == 30, "order");
    out.require(girth(tutte) == 8, "girth");
    const auto& G = remember(automorphism_group(tutte).group);
    out.require(G.order() == 1440, "|Aut| = " + to_string(G.order()));
    const auto g = a2g(tutte);
    out.require(g.order() == 8100, "a2g order " + std::to_string(g.order()));
    const auto aut = automorphism_group(g);
    const auto& full = remember(aut.group);
    out.require(aut.order == 4147200, "|Aut(a2g)| = " + to_string(aut.order));
    out.require(full.stabiliser_order(0) == 512, "vs = " + to_string(full.stabiliser_order(0)));
    const auto groups = build_a2g_groups(tutte, G);
    out.require(groups.B.order() == 4147200, "|B| = " + to_string(groups.B.order()));
    out.require(is_transitive_on(groups.B, Action::Darts, g), "B is not dart-transitive");
  });

  failed += report(8, "property suites", 0, [](Outcome& out) {
    std::mt19937 rng(kSeed + 8);
    std::vector<Digraph> corpus;
    for (std::size_t n : {6u, 8u})
      for (const auto& e : CensusFixture::catalog().generated(n)) corpus.push_back(e.digraph);
    for (std::size_t n = 3; n <= 8; ++n) {
      corpus.push_back(dcyc(n));
      corpus.push_back(directed_cycle(n));
    }
    corpus.push_back(named::complete(4));
    corpus.push_back(named::complete_bipartite(3, 3));
    corpus.push_back(named::cube());
    for (int i = 0; i < 120; ++i) corpus.push_back(testutil::random_digraph(rng, 1 + rng() % 8, 0.15 + 0.1 * (i % 5)));

    std::size_t aut_checked = 0;
    for (const auto& g : corpus) {
      const auto aut = automorphism_group(g);
      remember(aut.group);
      const auto all = oracle::all_automorphisms(g);
      bool ok = aut.order == all.size();
      for (const auto& p : all) ok = ok && aut.group.contains(p);
      out.require(ok, "automorphism oracle disagrees on a digraph of order " + std::to_string(g.order()));
      ++aut_checked;
    }

    std::size_t alter_checked = 0;
    for (int i = 0; i < 2000 && alter_checked < 300; ++i) {
      const auto g = testutil::random_digraph(rng, 1 + rng() % 6, 0.3);
      if (g.size() > 10 || !is_connected(g)) continue;
      ++alter_checked;
      const auto lab = alter_labeling(g);
      const auto cls = oracle::alter_classes(g);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v)
          out.require((lab.class_of[u] == lab.class_of[v]) == (cls[u] == cls[v]), "alter classes disagree");
    }

    std::size_t points = 0;
    for (const auto& G : g_computed) {
      const std::size_t step = G.degree() <= 400 ? 1 : G.degree() / 16;
      for (Vertex v = 0; v < G.degree(); v += static_cast<Vertex>(step)) {
        out.require(G.orbit(v).size() * G.stabiliser_order(v) == G.order(), "orbit-stabiliser identity fails");
        ++points;
      }
    }

    for (int i = 0; i < 100; ++i) {
      const auto g1 = testutil::random_digraph(rng, 1 + rng() % 7, 0.35);
      const auto g2 = testutil::random_digraph(rng, 1 + rng() % 7, 0.35);
      const auto s = sbp(g1, g2);
      const SbpIndex index{g1.order(), g2.order()};
      bool ok = is_orientation(s) && s.size() == g1.size() * g2.order() + g1.order() * g2.size();
      for (const auto& d : s.darts()) ok = ok && index.decode(d.tail).bit != index.decode(d.head).bit;
      for (Vertex v = 0; v < s.order(); ++v) {
        const auto t = index.decode(v);
        const auto out_v = t.bit == 0 ? g1.out_valence(t.a) : g2.out_valence(t.x);
        const auto in_v = t.bit == 0 ? g2.in_valence(t.x) : g1.in_valence(t.a);
        ok = ok && s.out_valence(v) == out_v && s.in_valence(v) == in_v;
      }
      out.require(ok, "sbp invariant fails");
    }
    out.notes.push_back(std::to_string(aut_checked) + " digraphs against the automorphism oracle, " +
                        std::to_string(alter_checked) + " against the alter oracle, " + std::to_string(g_computed.size()) +
                        " groups and " + std::to_string(points) + " points for orbit-stabiliser");
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed;
}
