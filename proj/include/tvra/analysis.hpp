#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvra/catalog.hpp"

namespace tvra {

// Computed result for one assessable threat. `points` is empty when the
// worksheet marks the attack infeasible (opportunity = None); such threats
// still score as (BeyondHigh, Unlikely) so every threat stays in the reports.
struct Assessment {
  std::string threat_id;
  std::optional<int> points;
  VulnerabilityRating rating = VulnerabilityRating::NoRating;
  Likelihood likelihood = Likelihood::Likely;
  Impact impact = Impact::Low;
  int risk_value = 1;
  RiskClass risk_class = RiskClass::Minor;
  std::optional<RiskClass> declared_risk;
  bool discrepancy = false;

  bool operator==(const Assessment&) const = default;
};

// One Assessment per threat carrying a worksheet, ordered by threat id.
// Threats without a worksheet are skipped with a warning; infeasible
// worksheets add a warning but are still assessed.
// Runs the per-threat pipeline in parallel (OpenMP) when available; output is
// identical to assess_catalog_serial on every input.
std::vector<Assessment> assess_catalog(const Catalog& c,
                                       std::vector<std::string>* warnings = nullptr);

// Reference implementation: same contract, plain sequential loop.
std::vector<Assessment> assess_catalog_serial(const Catalog& c,
                                              std::vector<std::string>* warnings = nullptr);

// --- Aggregate queries ---------------------------------------------------------

struct InterfaceExposure {
  std::string interface_key;  // designation: "A", "A[*]", "B", ...
  int critical = 0;
  int major = 0;
  int minor = 0;
  int unassessed = 0;
  std::set<std::string> threat_ids;

  int total() const { return critical + major + minor + unassessed; }
  bool operator==(const InterfaceExposure&) const = default;
};

// Per-interface threat census. Every declared interface appears (zero counts
// when untouched); interfaces are counted once per threat that mentions them
// as via or on_behalf_of.
struct ExposureReport {
  std::vector<InterfaceExposure> entries;  // sorted by interface_key

  const InterfaceExposure* find(const std::string& key) const;
};

ExposureReport exposure_by_interface(const Catalog& c, const std::vector<Assessment>& a);

// Threat ids with computed class Critical.
std::set<std::string> critical_set(const std::vector<Assessment>& a);

struct ClassDiscrepancy {
  std::string threat_id;
  RiskClass declared = RiskClass::Minor;
  RiskClass computed = RiskClass::Minor;
  bool operator==(const ClassDiscrepancy&) const = default;
};

// Assessments whose computed class differs from the declared one. An empty
// list means the catalog's worksheets reproduce its declared classes.
std::vector<ClassDiscrepancy> consistency_check(const std::vector<Assessment>& a);

struct PlanEntry {
  std::string threat_id;
  RiskClass risk_class = RiskClass::Minor;
  std::vector<std::string> countermeasures;
  bool operator==(const PlanEntry&) const = default;
};

// Countermeasures ordered Critical -> Major -> Minor, alphabetical by threat
// id within a class. Threats without countermeasures are omitted with a
// warning; assessed threats only (unassessed ones have no class to sort by).
struct CountermeasurePlan {
  std::vector<PlanEntry> entries;
};

CountermeasurePlan countermeasure_plan(const Catalog& c, const std::vector<Assessment>& a,
                                       std::vector<std::string>* warnings = nullptr);

}  // namespace tvra
