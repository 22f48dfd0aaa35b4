#include <doctest.h>

#include <map>
#include <set>
#include <random>

#include "oracles.hpp"
#include "sepbox/alter.hpp"
#include "sepbox/error.hpp"
#include "sepbox/named.hpp"
#include "sepbox/products.hpp"
#include "test_util.hpp"

using namespace sepbox;

namespace {

void check_labeling(const Digraph& g) {
  const auto lab = alter_labeling(g);
  for (const auto& d : g.darts()) {
    const auto diff = lab.class_of[d.head] - lab.class_of[d.tail] - 1;
    if (lab.modulus == 0)
      CHECK(diff == 0);
    else
      CHECK(diff % lab.modulus == 0);
  }
  CHECK(lab.class_of[0] == 0);
  std::set<std::int64_t> distinct(lab.class_of.begin(), lab.class_of.end());
  CHECK(distinct.size() == lab.perimeter);
}

bool same_partition(const std::vector<std::int64_t>& a, const std::vector<std::size_t>& b) {
  std::map<std::int64_t, std::size_t> fwd;
  std::map<std::size_t, std::int64_t> back;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (fwd.emplace(a[i], b[i]).first->second != b[i]) return false;
    if (back.emplace(b[i], a[i]).first->second != a[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("perimeters of small digraphs") {
  CHECK(alter_perimeter(dcyc(3)) == 1);
  CHECK(alter_perimeter(dcyc(4)) == 2);
  for (std::size_t n = 2; n < 10; ++n) CHECK(alter_perimeter(directed_cycle(n)) == n);
  CensusFixture census;
  CHECK(alter_perimeter(census.get("ATD[6,1]")) == 3);
  CHECK(alter_perimeter(hash_product(census.get("ATD[6,1]"), dcyc(3)).oriented) == 6);
  CHECK_THROWS_AS(alter_labeling(disjoint_union(dcyc(3), dcyc(3))), Error);
}

TEST_CASE("graphs have perimeter one or two") {
  for (const auto& g : {named::petersen(), named::complete(4), dcyc(7), named::complete(5)})
    CHECK(alter_perimeter(g) == 1);
  for (const auto& g : {named::cube(), named::complete_bipartite(3, 3), dcyc(8), named::tutte_8_cage()})
    CHECK(alter_perimeter(g) == 2);
}

TEST_CASE("labeling matches brute force on small digraphs") {
  std::mt19937 rng(77);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 400; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto g = testutil::random_digraph(rng, n, 0.3);
    if (g.size() > 10 || !is_connected(g)) continue;
    ++tested;
    check_labeling(g);
    const auto lab = alter_labeling(g);
    CHECK(same_partition(lab.class_of, oracle::alter_classes(g)));
    CHECK(alter_perimeter(reverse(g)) == lab.perimeter);
  }
  CHECK(tested >= 200);
}

TEST_CASE("modulus is positive without sources or sinks") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testutil::random_orientation(rng, 3 + trial % 10);
    check_labeling(g);
    CHECK(alter_labeling(g).modulus >= 1);
  }
  const auto path = Digraph(3, {{0, 1}, {1, 2}});
  CHECK(alter_labeling(path).modulus == 0);
  CHECK(alter_perimeter(path) == 3);
}

TEST_CASE("sum-zero walks") {
  const auto w = sum_zero_walk(dcyc(5), 2, 2);
  REQUIRE(w);
  CHECK(w->length() == 0);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) {
      const auto walk = sum_zero_walk(dcyc(3), u, v);
      REQUIRE(walk);
      CHECK(walk->sum() == 0);
      CHECK(walk->vertices.front() == u);
      CHECK(walk->vertices.back() == v);
      CHECK(is_valid_walk(dcyc(3), *walk));
    }
  CHECK_FALSE(sum_zero_walk(directed_cycle(3), 0, 1));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testutil::random_orientation(rng, 3 + trial % 12);
    const auto lab = alter_labeling(g);
    for (Vertex u = 0; u < g.order(); u += 2)
      for (Vertex v = 0; v < g.order(); v += 3) {
        const auto walk = sum_zero_walk(g, u, v);
        CHECK(walk.has_value() == (lab.class_of[u] == lab.class_of[v]));
        if (walk) {
          CHECK(walk->sum() == 0);
          CHECK(is_valid_walk(g, *walk));
          CHECK(walk->vertices.front() == u);
          CHECK(walk->vertices.back() == v);
        }
      }
  }
}
