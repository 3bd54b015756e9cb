#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace tvra {

// --- Attack-potential factor levels -----------------------------------------
//
// Level order within each factor is the grammar order; factor tables must
// assign strictly increasing points along it.

enum class TimeLevel { OneDay, OneWeek, OneMonth, ThreeMonths, SixMonths, Beyond };
enum class ExpertiseLevel { Layman, Proficient, Expert, Multiple };
enum class KnowledgeLevel { Public, Restricted, Sensitive, Critical };
enum class OpportunityLevel { Unnecessary, Easy, Moderate, Difficult, None };
enum class EquipmentLevel { Standard, Specialized, Bespoke, Multiple };

inline constexpr int kTimeLevels = 6;
inline constexpr int kExpertiseLevels = 4;
inline constexpr int kKnowledgeLevels = 4;
inline constexpr int kOpportunityLevels = 5;  // includes None
inline constexpr int kEquipmentLevels = 4;

// One attack-potential worksheet: a level per factor.
struct AttackPotential {
  TimeLevel time = TimeLevel::OneDay;
  ExpertiseLevel expertise = ExpertiseLevel::Layman;
  KnowledgeLevel knowledge = KnowledgeLevel::Public;
  OpportunityLevel opportunity = OpportunityLevel::Unnecessary;
  EquipmentLevel equipment = EquipmentLevel::Standard;

  bool operator==(const AttackPotential&) const = default;
};

// Level -> points for the five factors. Opportunity None is a sentinel
// (the attack is infeasible) and carries no point value.
struct FactorTable {
  std::array<int, kTimeLevels> time{};
  std::array<int, kExpertiseLevels> expertise{};
  std::array<int, kKnowledgeLevels> knowledge{};
  std::array<int, kOpportunityLevels - 1> opportunity{};  // Unnecessary..Difficult
  std::array<int, kEquipmentLevels> equipment{};

  bool operator==(const FactorTable&) const = default;
};

// Defaults follow the ETSI/Common-Criteria style scales; catalogs may
// override them with a `factors { ... }` block.
const FactorTable& default_factor_table();

// --- Ratings, likelihood, impact, risk ---------------------------------------

enum class VulnerabilityRating { NoRating, Basic, Moderate, High, BeyondHigh };

// Ordered (inclusive lower point bound -> rating); lowest bound is 0 so every
// non-negative point sum lands in a band.
struct BandTable {
  struct Band {
    int lower_bound = 0;
    VulnerabilityRating rating = VulnerabilityRating::NoRating;
    bool operator==(const Band&) const = default;
  };
  std::array<Band, 5> bands{};

  bool operator==(const BandTable&) const = default;
};

const BandTable& default_band_table();

enum class Likelihood { Unlikely = 1, Possible = 2, Likely = 3 };
enum class Impact { Low = 1, Medium = 2, High = 3 };
enum class RiskClass { Minor, Major, Critical };

inline int value_of(Likelihood l) { return static_cast<int>(l); }
inline int value_of(Impact i) { return static_cast<int>(i); }

// --- Operations ---------------------------------------------------------------

// Sum of the five factor point values; empty when opportunity = None
// (the worksheet marks the attack infeasible).
std::optional<int> potential_points(const AttackPotential& p, const FactorTable& t);

// Rating of the highest band whose bound <= points. Total and monotone
// non-decreasing in points.
VulnerabilityRating vulnerability_rating(int points, const BandTable& b);

// The five-row rating -> likelihood mapping (BeyondHigh and High share
// Unlikely, Basic and NoRating share Likely).
Likelihood likelihood_of(VulnerabilityRating r);

// Likelihood * Impact; always one of {1,2,3,4,6,9}.
int risk_value(Likelihood l, Impact i);

// {1,2,3} -> Minor, {4} -> Major, {6,9} -> Critical.
// Throws Error(INVALID_RISK_VALUE) for any other integer.
RiskClass classify(int risk_value);

// --- Names used by the catalog grammar and reports ----------------------------

std::string to_string(TimeLevel);
std::string to_string(ExpertiseLevel);
std::string to_string(KnowledgeLevel);
std::string to_string(OpportunityLevel);
std::string to_string(EquipmentLevel);
std::string to_string(VulnerabilityRating);
std::string to_string(Likelihood);
std::string to_string(Impact);
std::string to_string(RiskClass);

std::optional<TimeLevel> parse_time_level(const std::string&);
std::optional<ExpertiseLevel> parse_expertise_level(const std::string&);
std::optional<KnowledgeLevel> parse_knowledge_level(const std::string&);
std::optional<OpportunityLevel> parse_opportunity_level(const std::string&);
std::optional<EquipmentLevel> parse_equipment_level(const std::string&);
std::optional<VulnerabilityRating> parse_rating(const std::string&);

}  // namespace tvra
