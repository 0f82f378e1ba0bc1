#ifndef CGT_CATALOG_HPP
#define CGT_CATALOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgt/bigint.hpp"
#include "cgt/invariants.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/theorem.hpp"

namespace cgt {

// One named group in a catalog file: degree, cycle-notation generators, and
// optional expected values (order, exponent, E, d).
struct CatalogEntry {
  std::string name;
  Perm::point degree = 1;
  std::vector<std::string> generators;
  std::map<std::string, BigUint> expect;
};

// Parses and validates a catalog document:
//   {"groups":[{"name":..., "degree":..., "generators":[...], "expect":{...}?}]}
// Every generator string must parse against the entry degree; duplicate names
// are rejected. Errors carry position diagnostics where available.
std::vector<CatalogEntry> parse_catalog_text(const std::string& json_text);
std::vector<CatalogEntry> parse_catalog(const std::string& path);

PermGroup realize(const CatalogEntry& entry);

std::string catalog_to_json(const std::vector<CatalogEntry>& entries);

// Which checks a run executes. d-maximality is opt-in: it needs the full
// subgroup lattice, which the default lattice cap reserves for small groups.
struct CheckSelection {
  bool theorem = true;
  bool lemma = true;
  bool star = true;
  bool star3 = true;
  bool sections = true;
  bool gl = true;
  bool proposition = true;
  bool dmax = false;

  // comma-separated list: "theorem,lemma,star,star3,sections,gl,proposition,dmax"
  static CheckSelection parse(const std::string& csv);
  static CheckSelection defaults() { return CheckSelection{}; }
};

struct EntryReport {
  std::string name;
  bool analyzed = false;  // false when caps blocked the analysis entirely
  std::optional<GroupInvariants> inv;
  std::optional<TheoremVerdict> verdict;
  std::optional<bool> lemma;  // only for nilpotent entries
  std::optional<bool> star;
  std::optional<bool> star3;
  std::optional<bool> gl;
  std::optional<bool> proposition;
  std::optional<bool> dmax;
  std::optional<SectionSampleReport> sections;
  std::vector<std::string> failures;  // exact integers included in the text
  std::vector<std::string> skips;

  bool failed() const { return !failures.empty(); }
  bool skipped() const { return !skips.empty(); }
};

struct RunReport {
  std::uint64_t seed = 0;
  Caps caps;
  CheckSelection checks;
  std::size_t section_samples = 20;
  std::vector<EntryReport> entries;

  std::size_t failure_count() const;
  std::size_t skip_count() const;
};

// Runs the selected checks on every entry. Deterministic given
// (entries, selection, seed, caps, section_samples) regardless of threads:
// per-entry seeds are derived from the run seed and the entry name.
RunReport run_suite(const std::vector<CatalogEntry>& entries,
                    const CheckSelection& selection, std::uint64_t seed,
                    const Caps& caps, std::size_t section_samples = 20,
                    unsigned threads = 1);

std::string report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

// Invariants-only view of a catalog (the `invariants` subcommand).
std::string invariants_to_json(const std::vector<CatalogEntry>& entries,
                               const Caps& caps);
std::string invariants_to_csv(const std::vector<CatalogEntry>& entries,
                              const Caps& caps);

}  // namespace cgt

#endif
