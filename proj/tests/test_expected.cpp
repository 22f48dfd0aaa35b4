#include <doctest.h>

#include "expected_checks.hpp"
#include "oracles.hpp"
#include "sepbox/classify.hpp"
#include "sepbox/error.hpp"
#include "sepbox/expected.hpp"
#include "sepbox/named.hpp"
#include "sepbox/products.hpp"
#include "sepbox/symmetry.hpp"
#include "test_util.hpp"

using namespace sepbox;

namespace {

void require_empty(const std::vector<std::string>& failures) {
  for (const auto& f : failures) INFO(f);
  CHECK(failures.empty());
}

}  // namespace

TEST_CASE("lift, sigma, tau and mu on small products") {
  const auto c3 = dcyc(3);
  const auto id = Permutation(3);
  CHECK(lift_pair(c3, c3, id, id).is_identity());
  CHECK_THROWS_AS(lift_pair(directed_cycle(3), c3, Permutation::from_cycles(3, {{0, 1}}), id), Error);

  const auto s = sbp(c3, c3);
  const auto sigma = sigma_reversal(c3, c3, id, id);
  CHECK(is_reversal(s, sigma));
  for (Vertex v = 0; v < s.order(); ++v) CHECK(sigma[v] == (v ^ 1u));
  CHECK(is_automorphism(s, sigma * sigma));
  CHECK_THROWS_AS(sigma_reversal(directed_cycle(3), c3, Permutation(3), id), Error);

  CensusFixture census;
  const auto& d = census.get("ATD[8,2]");
  const auto tau = tau_swap(d);
  CHECK(is_automorphism(sbp(d, d), tau));
  CHECK((tau * tau).is_identity());
  const auto mu = mu_reversal(d);
  CHECK(is_reversal(sbp(d, reverse(d)), mu));
  CHECK((mu * mu).is_identity());
}

TEST_CASE("tau and mu for isomorphic factors given by a certificate") {
  CensusFixture census;
  const auto& d = census.get("ATD[6,1]");
  std::mt19937 rng(3);
  std::vector<Vertex> shuffle(d.order());
  std::iota(shuffle.begin(), shuffle.end(), Vertex{0});
  std::shuffle(shuffle.begin(), shuffle.end(), rng);
  const auto copy = relabel(d, shuffle);
  const auto iso = find_isomorphism(d, copy);
  REQUIRE(iso);
  CHECK(is_automorphism(sbp(d, copy), tau_swap(d, copy, *iso)));
  const auto rev_iso = find_isomorphism(d, reverse(reverse(copy)));
  REQUIRE(rev_iso);
  CHECK(is_reversal(sbp(d, reverse(copy)), mu_reversal(d, reverse(copy), *rev_iso)));
}

TEST_CASE("lemma-level orbit counts") {
  CensusFixture census;
  for (const char* a : {"ATD[6,1]", "ATD[8,1]", "ATD[8,2]"})
    for (const char* b : {"DCyc[3]", "DCyc[4]", "DCyc[5]"}) {
      const auto p = checks::product_groups(census.get(a), census.get(b));
      require_empty(checks::lifted_checks(p));
      require_empty(checks::lr_checks(p));
    }
  for (const char* a : {"ATD[6,1]", "ATD[8,1]", "ATD[8,2]", "ATD[9,1]", "DCyc[5]"}) {
    const auto p = checks::product_groups(census.get(a), census.get(a));
    require_empty(checks::lifted_checks(p));
    require_empty(checks::delta_checks(p));
    require_empty(checks::ss_checks(census.get(a)));
  }
}

TEST_CASE("expected group on a component") {
  CensusFixture census;
  const auto& d = census.get("ATD[6,1]");
  const auto G = automorphism_group(d).group;
  const auto e = build_expected_group(d, d, G, G);
  CHECK(e.component.size() == 24);
  const auto comp = extract_component(sbp(d, d), 0);
  CHECK(e.component == comp.vertices);
  const auto u = underlying(comp.digraph);
  for (const auto& g : e.on_component.generators()) CHECK(is_automorphism(u, g));
  CHECK(orbit_count(e.on_component, Action::Darts, u) == 1);
  CHECK_FALSE(hash_product_warning(d, d));

  const auto& atd81 = census.get("ATD[8,1]");
  const auto lr = build_expected_group(atd81, dcyc(3), automorphism_group(atd81).group, automorphism_group(dcyc(3)).group);
  const auto lr_comp = underlying(extract_component(sbp(atd81, dcyc(3)), 0).digraph);
  CHECK(is_g_lr(lr_comp, lr.on_component));

  CHECK_THROWS_AS(build_expected_group(d, d, PermGroup(d.order()), G), Error);
  const auto star = Digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(build_expected_group(star, d, automorphism_group(star).group, G), Error);
}

TEST_CASE("order of the expected group for the K4 dart digraph") {
  const auto d = dart_digraph(named::complete(4));
  const auto G = automorphism_group(d).group;
  const auto e = build_expected_group(d, d, G, G);
  REQUIRE(e.sigma);
  REQUIRE(e.tau);
  CHECK(e.on_product.order() == 4 * G.order() * G.order());
}

TEST_CASE("a2g groups for K33") {
  const auto k33 = named::complete_bipartite(3, 3);
  const auto G = automorphism_group(k33).group;
  CHECK(G.order() == 72);
  const auto groups = build_a2g_groups(k33, G);
  CHECK(groups.B.order() == 10368);
  CHECK(groups.B.order() == 2 * G.order() * G.order());
  const auto ag = a2g(k33);
  CHECK(ag.size() == 1296);
  for (const auto& g : groups.B.generators()) CHECK(is_automorphism(ag, g));
  CHECK(is_transitive_on(groups.B, Action::Darts, ag));
  const auto ad = a2d(k33);
  for (const auto& g : groups.A.generators()) CHECK(is_automorphism(ad, g));
  CHECK(is_transitive_on(groups.A, Action::Darts, ad));
  CHECK(orbit_count(groups.A, Action::Vertices, ad) == 1);
  // without the swap (1,alpha)tau the blue and red vertices stay apart
  const auto& a_gens = groups.A.generators();
  const PermGroup colour_preserving(ad.order(), std::vector<Permutation>(a_gens.begin(), a_gens.end() - 1));
  CHECK(orbit_count(colour_preserving, Action::Vertices, ad) == 2);

  // any element of G outside H gives the same groups
  for (const auto& alpha : oracle::enumerate_group(6, G.generators())) {
    const auto tail = alpha[0];
    if (tail < 3) continue;
    const auto other = build_a2g_groups(k33, G, alpha);
    for (const auto& g : other.B.generators()) CHECK(groups.B.contains(g));
    CHECK(other.B.order() == groups.B.order());
    CHECK(other.A.order() == groups.A.order());
    break;
  }
  CHECK_THROWS_AS(build_a2g_groups(k33, G, Permutation(6)), Error);
  CHECK_THROWS_AS(build_a2g_groups(named::complete(4), automorphism_group(named::complete(4)).group), Error);
  CHECK_THROWS_AS(build_a2g_groups(k33, PermGroup(6, {Permutation::from_cycles(6, {{0, 3}})})), Error);
}

TEST_CASE("a2g groups for the 3-cube") {
  const auto cube = named::cube();
  const auto G = automorphism_group(cube).group;
  const auto groups = build_a2g_groups(cube, G);
  CHECK(groups.B.order() == 2 * G.order() * G.order());
  CHECK(is_transitive_on(groups.B, Action::Darts, a2g(cube)));
}

TEST_CASE("unexpected symmetries of the double cover") {
  for (const auto& lambda : {named::complete(4), named::complete_bipartite(3, 3)}) {
    const auto G = automorphism_group(lambda).group;
    const auto cover = cdc(a2d(lambda));
    bool moved_fibre = false;
    for (const auto& g : G.generators()) {
      const auto p = unexpected_symmetry(lambda, g);
      CHECK(is_automorphism(cover, p));
      if (!preserves_fibres(p)) moved_fibre = true;
    }
    CHECK(moved_fibre);
  }
}

TEST_CASE("a2d of K4 is not dart-transitive") {
  CHECK_FALSE(is_dart_transitive(a2d(named::complete(4))));
  CHECK(is_dart_transitive(a2g(named::complete_bipartite(3, 3))));
}

TEST_CASE("dart action") {
  const auto k4 = named::complete(4);
  const auto p = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto d = dart_action(k4, p);
  for (std::size_t i = 0; i < k4.size(); ++i) {
    const auto dart = k4.darts()[i];
    CHECK(k4.darts()[d[static_cast<Vertex>(i)]] == Dart{p[dart.tail], p[dart.head]});
  }
  CHECK_THROWS_AS(dart_action(directed_cycle(3), Permutation::from_cycles(3, {{0, 1}})), Error);
}
