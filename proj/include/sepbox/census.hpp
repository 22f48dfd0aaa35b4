#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepbox/digraph.hpp"

namespace sepbox {

enum class Provenance { Generated, Ingested };

struct CensusEntry {
  /// Published name when it can be identified, otherwise the local name.
  std::string name;
  /// "ATD[n,i]" in the generator's own order (or the file stem when
  /// ingested).
  std::string local_name;
  Digraph digraph;
  Provenance provenance = Provenance::Generated;
  std::size_t alter_perimeter = 0;
  bool reversible = false;
  bool is_graph = false;
};

inline constexpr std::size_t kDefaultGenerationBound = 12;

/// Every connected 2-in/2-out orientation on n vertices whose automorphism
/// group is dart-transitive, one per isomorphism class, sorted by canonical
/// form. Throws Error(InvalidInput) when n exceeds `bound`.
std::vector<CensusEntry> generate_atd(std::size_t n, std::size_t bound = kDefaultGenerationBound);

/// The cycle C_n as a 2-valent census entry named "DCyc[n]".
CensusEntry dcyc_entry(std::size_t n);

/// Published name for a generated entry, matched on (order, AP) where that
/// pair is unique among the published digraphs of order at most 12.
std::optional<std::string> published_name(std::size_t order, std::size_t alter_perimeter);

struct ValidationReport {
  bool connected = false;
  bool two_valent = false;
  bool dart_transitive = false;
  bool ok() const { return connected && two_valent && dart_transitive; }
  std::string problems() const;
};

ValidationReport validate_entry(const Digraph& g);

/// Loads and validates a census file. Throws Error(HypothesisNotMet) with
/// the list of failed checks unless `force` is set.
CensusEntry ingest(const std::filesystem::path& path, bool force = false);
CensusEntry make_entry(std::string name, Digraph g, Provenance provenance);

/// Looks up "DCyc[n]", "ATD[n,i]" (generated or published name), a named
/// graph or a file path.
CensusEntry resolve_entry(const std::string& name);

/// resolve_entry with the generated orders cached.
class CensusCatalog {
 public:
  explicit CensusCatalog(std::size_t bound = kDefaultGenerationBound) : bound_(bound) {}
  const CensusEntry& get(const std::string& name);
  /// Makes an ingested entry available under its name.
  void add(CensusEntry entry);
  const std::vector<CensusEntry>& generated(std::size_t n);

 private:
  std::size_t bound_;
  std::map<std::size_t, std::vector<CensusEntry>> by_order_;
  std::map<std::string, CensusEntry> others_;
};

}  // namespace sepbox
