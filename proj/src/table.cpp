#include "sepbox/table.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "sepbox/alter.hpp"
#include "sepbox/error.hpp"
#include "sepbox/products.hpp"
#include "sepbox/symmetry.hpp"

namespace sepbox {

namespace {

const char* kHeader = "name1,V1,AP1,name2,V2,AP2,V,AP,vs,girth,diam,symtype";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string normalise_order(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    GroupOrder value = 1;
    value <<= std::stoul(text.substr(2));
    return to_string(value);
  }
  return text;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

}  // namespace

TableRow table_row(const CensusEntry& e1, const CensusEntry& e2) {
  const auto& g1 = e1.digraph;
  const auto& g2 = e2.digraph;
  TableRow row;
  row.name1 = e1.name;
  row.V1 = g1.order();
  row.AP1 = alter_perimeter(g1);
  row.name2 = e2.name;
  row.V2 = g2.order();
  row.AP2 = alter_perimeter(g2);

  const auto h = hash_product(g1, g2);
  row.V = h.graph.order();
  const auto predicted = 2 * row.V1 * row.V2 / std::gcd(row.AP1, row.AP2);
  if (row.V != predicted)
    throw Error(ErrorKind::InternalConsistency, "component order " + std::to_string(row.V) +
                                                    " differs from predicted " + std::to_string(predicted));
  row.AP = alter_perimeter(h.oriented);
  row.girth = girth(h.graph);
  row.diam = diameter(h.graph);
  const auto type = symmetry_type(h.graph);
  row.vs = type.evidence.vs;
  row.symtype = type.tag;
  return row;
}

TableMode parse_table_mode(const std::string& text) {
  if (text == "t1") return TableMode::T1;
  if (text == "t2") return TableMode::T2;
  if (text == "t3") return TableMode::T3;
  if (text == "t4") return TableMode::T4;
  throw Error(ErrorKind::InvalidInput, "unknown table mode '" + text + "'");
}

std::vector<std::pair<CensusEntry, CensusEntry>> mode_pairs(
    const std::vector<std::pair<CensusEntry, CensusEntry>>& spec, TableMode mode) {
  std::vector<std::pair<CensusEntry, CensusEntry>> out;
  for (const auto& [a, b] : spec) {
    switch (mode) {
      case TableMode::T1:
        if (!a.reversible || !b.reversible)
          throw Error(ErrorKind::HypothesisNotMet, a.name + " x " + b.name + ": factors must be reversible");
        if (are_isomorphic(a.digraph, b.digraph))
          throw Error(ErrorKind::HypothesisNotMet, a.name + " x " + b.name + ": factors must be non-isomorphic");
        out.emplace_back(a, b);
        break;
      case TableMode::T2:
        if (!a.reversible) throw Error(ErrorKind::HypothesisNotMet, a.name + " must be reversible");
        out.emplace_back(a, a);
        break;
      case TableMode::T3:
        if (a.reversible) throw Error(ErrorKind::HypothesisNotMet, a.name + " must be non-reversible");
        out.emplace_back(a, a);
        break;
      case TableMode::T4: {
        if (a.reversible) throw Error(ErrorKind::HypothesisNotMet, a.name + " must be non-reversible");
        auto r = make_entry(a.name + "^-1", reverse(a.digraph), a.provenance);
        out.emplace_back(a, std::move(r));
        break;
      }
    }
  }
  return out;
}

std::vector<TableRow> run_table(const std::vector<std::pair<CensusEntry, CensusEntry>>& spec, TableMode mode,
                                unsigned threads) {
  const auto pairs = mode_pairs(spec, mode);
  std::vector<TableRow> rows(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, pairs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        rows[i] = table_row(pairs[i].first, pairs[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_order(const GroupOrder& order, bool pow2) {
  if (pow2 && order >= 128 && (order & (order - 1)) == 0) {
    std::size_t k = 0;
    for (GroupOrder v = order; v > 1; v >>= 1) ++k;
    return "2^" + std::to_string(k);
  }
  return to_string(order);
}

std::string to_csv(const std::vector<TableRow>& rows, bool pow2) {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << quote(r.name1) << ',' << r.V1 << ',' << r.AP1 << ',' << quote(r.name2) << ',' << r.V2 << ',' << r.AP2
        << ',' << r.V << ',' << r.AP << ',' << format_order(r.vs, pow2) << ',' << r.girth << ',' << r.diam << ','
        << to_string(r.symtype) << '\n';
  }
  return out.str();
}

std::vector<std::string> compare_csv(const std::string& actual, const std::string& expected, bool require_all) {
  auto load = [](const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      if (header) {
        header = false;
        continue;
      }
      auto fields = parse_csv_line(line);
      if (fields.size() == 12) fields[8] = normalise_order(fields[8]);
      rows.push_back(std::move(fields));
    }
    return rows;
  };
  const auto got = load(actual);
  const auto want = load(expected);
  const auto columns = split(kHeader, ',');
  std::vector<std::string> diffs;
  auto index = [&](const std::vector<std::vector<std::string>>& rows) {
    std::map<std::pair<std::string, std::string>, const std::vector<std::string>*> out;
    for (const auto& r : rows)
      if (r.size() == 12) out[{r[0], r[3]}] = &r;
      else diffs.push_back("malformed row");
    return out;
  };
  const auto got_index = index(got);
  const auto want_index = index(want);
  const auto& driving = require_all ? want_index : got_index;
  const auto& other = require_all ? got_index : want_index;
  for (const auto& [key, row] : driving) {
    const auto it = other.find(key);
    const auto label = key.first + " x " + key.second;
    if (it == other.end()) {
      diffs.push_back(label + (require_all ? ": missing" : ": no reference row"));
      continue;
    }
    const auto& g = require_all ? *it->second : *row;
    const auto& w = require_all ? *row : *it->second;
    for (std::size_t c = 0; c < 12; ++c)
      if (g[c] != w[c]) diffs.push_back(label + ": " + columns[c] + " is " + g[c] + ", expected " + w[c]);
  }
  return diffs;
}

}  // namespace sepbox
