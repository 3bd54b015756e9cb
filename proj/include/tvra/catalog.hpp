#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tvra/diagnostics.hpp"
#include "tvra/model.hpp"

namespace tvra {

// Result of parsing a catalog source. `catalog` is present unless an
// error-severity diagnostic was produced; warnings accompany either way.
struct ParseResult {
  std::optional<Catalog> catalog;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return catalog.has_value(); }
};

// Parses `.tvra` source text. Never aborts on the first problem: the parser
// resynchronizes at block boundaries, so a source with k malformed blocks
// yields at least k diagnostics.
ParseResult parse_catalog(const std::string& source);

// Canonical form: header, assumptions, factors/bands overrides, then blocks
// ordered interfaces -> entities -> links -> assets -> threats, each sorted by
// id; 2-space indentation, one field per line, LF endings.
// parse(serialize(c)) is structurally equal to c, and serialization is
// idempotent (serialize . parse . serialize == serialize).
std::string serialize_catalog(const Catalog& c);

// The embedded autonomous-vehicle catalog; identical to parsing the shipped
// data/av-fullauto.tvra.
Catalog load_builtin_catalog();
const std::string& builtin_catalog_source();

// --- Catalog diffing -----------------------------------------------------------

struct FieldDelta {
  std::string field;
  std::string before;
  std::string after;
  bool operator==(const FieldDelta&) const = default;
};

struct ModifiedEntry {
  std::string id;
  std::vector<FieldDelta> deltas;
  bool operator==(const ModifiedEntry&) const = default;
};

struct ChangeSet {
  std::vector<std::string> added_threats;
  std::vector<std::string> removed_threats;
  std::vector<ModifiedEntry> modified_threats;
  std::vector<std::string> added_interfaces;    // designations
  std::vector<std::string> removed_interfaces;
  std::vector<ModifiedEntry> modified_interfaces;
  // Countermeasure text changes, keyed "threat-id: text".
  std::vector<std::string> added_countermeasures;
  std::vector<std::string> removed_countermeasures;

  bool empty() const {
    return added_threats.empty() && removed_threats.empty() && modified_threats.empty() &&
           added_interfaces.empty() && removed_interfaces.empty() &&
           modified_interfaces.empty() && added_countermeasures.empty() &&
           removed_countermeasures.empty();
  }
};

// Added/removed/modified threats and interfaces between two valid catalogs,
// with field-level deltas for modified threats; deterministic ordering by id.
ChangeSet diff_catalogs(const Catalog& a, const Catalog& b);

std::string render_changeset(const ChangeSet& cs);

}  // namespace tvra
