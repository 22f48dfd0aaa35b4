#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sepbox/error.hpp"
#include "sepbox/table.hpp"
#include "test_util.hpp"

using namespace sepbox;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("single rows") {
  CensusFixture census;
  const auto r = table_row(census.entry("ATD[6,1]"), census.entry("DCyc[3]"));
  CHECK(r.V == 36);
  CHECK(r.AP == 6);
  CHECK(r.vs == 8);
  CHECK(r.girth == 4);
  CHECK(r.diam == 5);
  CHECK(r.symtype == SymmetryTag::LR);

  const auto d = table_row(census.entry("ATD[8,2]"), census.entry("ATD[8,2]"));
  CHECK(d.V == 32);
  CHECK(d.AP == 8);
  CHECK(d.vs == 128);
  CHECK(d.symtype == SymmetryTag::DT);

  const auto c = table_row(census.entry("DCyc[3]"), census.entry("DCyc[3]"));
  CHECK(c.V == 18);
  CHECK(c.V1 == 3);
  CHECK(c.AP1 == 1);
}

TEST_CASE("order formatting") {
  CHECK(format_order(64, true) == "64");
  CHECK(format_order(128, true) == "2^7");
  CHECK(format_order(GroupOrder(1) << 23, true) == "2^23");
  CHECK(format_order(128, false) == "128");
  CHECK(format_order(384, true) == "384");
}

TEST_CASE("empty table") {
  CHECK(to_csv({}) == "name1,V1,AP1,name2,V2,AP2,V,AP,vs,girth,diam,symtype\n");
  CHECK(run_table({}, TableMode::T1).empty());
}

TEST_CASE("mode hypotheses") {
  CensusFixture census;
  const auto& a = census.entry("ATD[6,1]");
  const auto& c = census.entry("DCyc[3]");
  CHECK_THROWS_AS(run_table({{a, a}}, TableMode::T1), Error);
  CHECK_THROWS_AS(run_table({{a, a}}, TableMode::T3), Error);
  CHECK_THROWS_AS(run_table({{a, a}}, TableMode::T4), Error);
  CHECK(mode_pairs({{a, c}}, TableMode::T2).front().second.name == "ATD[6,1]");
  const Digraph tailed(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  auto directed = make_entry("tailed", tailed, Provenance::Ingested);
  REQUIRE_FALSE(directed.reversible);
  const auto pairs = mode_pairs({{directed, directed}}, TableMode::T4);
  CHECK(pairs.front().second.digraph == reverse(tailed));
  CHECK(pairs.front().second.name == "tailed^-1");
  CHECK_THROWS_AS(mode_pairs({{c, c}}, TableMode::T4), Error);
  CHECK(parse_table_mode("t3") == TableMode::T3);
  CHECK_THROWS_AS(parse_table_mode("t5"), Error);
}

TEST_CASE("csv comparison") {
  const std::string header = "name1,V1,AP1,name2,V2,AP2,V,AP,vs,girth,diam,symtype\n";
  const std::string a = header + "\"ATD[8,2]\",8,4,DCyc[4],4,2,32,8,128,4,4,DT\n";
  const std::string b = header + "\"ATD[8,2]\",8,4,\"DCyc[4]\",4,2,32,8,2^7,4,4,DT\n";
  CHECK(compare_csv(a, b).empty());
  const std::string c = header + "\"ATD[8,2]\",8,4,DCyc[4],4,2,32,8,2^7,4,5,DT\n";
  CHECK(compare_csv(a, c).size() == 1);
  const std::string missing = header + "\"ATD[8,1]\",8,2,DCyc[4],4,2,32,4,4,4,4,LR\n";
  CHECK(compare_csv(a, missing).size() == 1);
  CHECK(compare_csv(a, missing, false).size() == 1);
  CHECK(compare_csv(a, header + missing.substr(header.size()) + b.substr(header.size()), false).empty());
}

TEST_CASE("stored reference tables") {
  CensusFixture census;
  for (const auto& [file, mode] : {std::pair{"table1_small.csv", TableMode::T1}, std::pair{"table2_small.csv", TableMode::T2}}) {
    const auto expected = read_file(std::string(SEPBOX_TEST_DATA) + "/" + file);
    std::vector<std::pair<CensusEntry, CensusEntry>> spec;
    std::istringstream lines(expected);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      const auto q1 = line.find('"', 1);
      const auto name1 = line.substr(1, q1 - 1);
      const auto start2 = line.find('"', q1 + 1);
      const auto name2 = line.substr(start2 + 1, line.find('"', start2 + 1) - start2 - 1);
      spec.emplace_back(census.entry(name1), census.entry(name2));
    }
    const auto rows = run_table(spec, mode);
    const auto csv = to_csv(rows, true);
    const auto diffs = compare_csv(csv, expected);
    for (const auto& d : diffs) INFO(d);
    CHECK(diffs.empty());
    CHECK(to_csv(run_table(spec, mode, 3), true) == csv);
    for (const auto& r : rows) {
      CHECK(r.V == 2 * r.V1 * r.V2 / std::gcd(r.AP1, r.AP2));
      if (mode == TableMode::T2) CHECK(r.symtype == SymmetryTag::DT);
    }
  }
}
