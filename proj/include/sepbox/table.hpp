#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sepbox/census.hpp"
#include "sepbox/classify.hpp"
#include "sepbox/permgroup.hpp"

namespace sepbox {

struct TableRow {
  std::string name1;
  std::size_t V1 = 0;
  std::size_t AP1 = 0;
  std::string name2;
  std::size_t V2 = 0;
  std::size_t AP2 = 0;
  std::size_t V = 0;
  std::size_t AP = 0;
  GroupOrder vs = 1;
  std::size_t girth = 0;
  std::size_t diam = 0;
  SymmetryTag symtype = SymmetryTag::Other;
};

/// Metrics of the component of sbp(e1, e2) containing (0,0,0). Throws
/// Error(InternalConsistency) when the measured order differs from
/// 2*V1*V2/gcd(AP1, AP2).
TableRow table_row(const CensusEntry& e1, const CensusEntry& e2);

enum class TableMode { T1, T2, T3, T4 };
TableMode parse_table_mode(const std::string& text);

/// Factor pairs for a mode: t1 takes (e1, e2) as given, t2 and t3 pair each
/// first entry with itself, t4 with its reverse. Mode hypotheses are checked
/// (t1: non-isomorphic reversible factors; t2: reversible; t3, t4:
/// non-reversible) and violations raise Error(HypothesisNotMet).
std::vector<std::pair<CensusEntry, CensusEntry>> mode_pairs(
    const std::vector<std::pair<CensusEntry, CensusEntry>>& spec, TableMode mode);

/// Rows in spec order; `threads` == 0 uses the hardware concurrency.
std::vector<TableRow> run_table(const std::vector<std::pair<CensusEntry, CensusEntry>>& spec, TableMode mode,
                                unsigned threads = 0);

/// Powers of two from 2^7 up print as "2^k" when `pow2` is set.
std::string format_order(const GroupOrder& order, bool pow2);
std::string to_csv(const std::vector<TableRow>& rows, bool pow2 = false);

/// Differences between two CSV tables, matching rows on (name1, name2).
/// "2^k" and decimal spellings of vs compare equal. Empty when they agree.
/// With `require_all` every expected row must be present in `actual`;
/// without it every actual row must be present in `expected`, so a partial
/// run can be checked against a full reference.
std::vector<std::string> compare_csv(const std::string& actual, const std::string& expected, bool require_all = true);

}  // namespace sepbox
