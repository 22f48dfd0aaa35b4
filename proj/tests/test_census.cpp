#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "sepbox/census.hpp"
#include "sepbox/error.hpp"
#include "sepbox/io.hpp"
#include "sepbox/symmetry.hpp"

using namespace sepbox;

namespace {

std::vector<std::size_t> perimeters(const std::vector<CensusEntry>& entries) {
  std::vector<std::size_t> out;
  for (const auto& e : entries) out.push_back(e.alter_perimeter);
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sepbox_census_" + name);
}

}  // namespace

TEST_CASE("generated census sizes") {
  CHECK(generate_atd(4).empty());
  CHECK(generate_atd(5).empty());
  CHECK(perimeters(generate_atd(6)) == std::vector<std::size_t>{3});
  CHECK(perimeters(generate_atd(7)).empty());
  CHECK(perimeters(generate_atd(8)) == std::vector<std::size_t>{2, 4});
  CHECK(perimeters(generate_atd(9)) == std::vector<std::size_t>{3});
  CHECK(perimeters(generate_atd(10)) == std::vector<std::size_t>{2, 5});
  CHECK_THROWS_AS(generate_atd(13), Error);
  CHECK_NOTHROW(generate_atd(7, 7));
  CHECK_THROWS_AS(generate_atd(8, 7), Error);
}

TEST_CASE("generated entries are valid and named") {
  for (std::size_t n : {6u, 8u, 9u, 10u}) {
    std::set<CanonicalForm> forms;
    for (const auto& e : generate_atd(n)) {
      CHECK(validate_entry(e.digraph).ok());
      CHECK_FALSE(e.is_graph);
      CHECK(is_orientation(e.digraph));
      CHECK(e.provenance == Provenance::Generated);
      CHECK(e.name.rfind("ATD[" + std::to_string(n) + ",", 0) == 0);
      CHECK(published_name(n, e.alter_perimeter) == e.name);
      forms.insert(canonical_form(e.digraph));
    }
    CHECK(forms.size() == generate_atd(n).size());
  }
  const auto a = generate_atd(8), b = generate_atd(8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].digraph == b[i].digraph);
  }
}

TEST_CASE("round trip through a file") {
  for (const auto& e : generate_atd(8)) {
    const auto path = temp_file(e.local_name + ".dg");
    io::save(e.digraph, path, e.name);
    const auto back = ingest(path);
    CHECK(back.provenance == Provenance::Ingested);
    CHECK(canonical_form(back.digraph) == canonical_form(e.digraph));
    std::filesystem::remove(path);
  }
}

TEST_CASE("ingest validation") {
  const auto cyc = temp_file("cyc.dg");
  io::save(dcyc(5), cyc);
  const auto e = ingest(cyc);
  CHECK(e.is_graph);
  CHECK(e.reversible);

  const auto tri = temp_file("tri.dg");
  io::save(directed_cycle(3), tri);
  CHECK(is_dart_transitive(directed_cycle(3)));
  try {
    ingest(tri);
    FAIL("accepted a 1-valent digraph");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::HypothesisNotMet);
    CHECK(std::string(err.what()).find("2-valent") != std::string::npos);
  }
  CHECK(ingest(tri, true).digraph == directed_cycle(3));

  const auto bad = temp_file("bad.dg");
  std::ofstream(bad) << "not a digraph\n";
  CHECK_THROWS_AS(ingest(bad), Error);
  for (const auto& p : {cyc, tri, bad}) std::filesystem::remove(p);
}

TEST_CASE("catalogue lookup") {
  CensusCatalog catalog(10);
  CHECK(catalog.get("ATD[6,1]").alter_perimeter == 3);
  CHECK(catalog.get("ATD[8,2]").alter_perimeter == 4);
  CHECK(catalog.get("ATD[ 8, 1 ]").alter_perimeter == 2);
  CHECK(catalog.get("DCyc[7]").digraph == dcyc(7));
  CHECK(catalog.get("K33").is_graph);
  CHECK_THROWS_AS(catalog.get("ATD[8,9]"), Error);
  CHECK_THROWS_AS(catalog.get("ATD[12,1]"), Error);
  auto extra = make_entry("ATD[21,1]", directed_cycle(5), Provenance::Ingested);
  catalog.add(extra);
  CHECK(catalog.get("ATD[21,1]").digraph == directed_cycle(5));
  CHECK(resolve_entry("DCyc[4]").alter_perimeter == 2);
}
