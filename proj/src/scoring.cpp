#include "tvra/scoring.hpp"

#include <cassert>

#include "tvra/error.hpp"

namespace tvra {

const FactorTable& default_factor_table() {
  static const FactorTable table{
      .time = {0, 1, 4, 10, 17, 19},
      .expertise = {0, 3, 6, 8},
      .knowledge = {0, 3, 7, 11},
      .opportunity = {0, 1, 4, 10},
      .equipment = {0, 4, 7, 9},
  };
  return table;
}

const BandTable& default_band_table() {
  static const BandTable table{.bands = {{
      {0, VulnerabilityRating::NoRating},
      {10, VulnerabilityRating::Basic},
      {14, VulnerabilityRating::Moderate},
      {20, VulnerabilityRating::High},
      {25, VulnerabilityRating::BeyondHigh},
  }}};
  return table;
}

std::optional<int> potential_points(const AttackPotential& p, const FactorTable& t) {
  if (p.opportunity == OpportunityLevel::None) return std::nullopt;
  return t.time[static_cast<int>(p.time)] +
         t.expertise[static_cast<int>(p.expertise)] +
         t.knowledge[static_cast<int>(p.knowledge)] +
         t.opportunity[static_cast<int>(p.opportunity)] +
         t.equipment[static_cast<int>(p.equipment)];
}

VulnerabilityRating vulnerability_rating(int points, const BandTable& b) {
  assert(points >= 0);
  VulnerabilityRating rating = b.bands.front().rating;
  for (const auto& band : b.bands) {
    if (points >= band.lower_bound) rating = band.rating;
  }
  return rating;
}

Likelihood likelihood_of(VulnerabilityRating r) {
  switch (r) {
    case VulnerabilityRating::BeyondHigh:
    case VulnerabilityRating::High:
      return Likelihood::Unlikely;
    case VulnerabilityRating::Moderate:
      return Likelihood::Possible;
    case VulnerabilityRating::Basic:
    case VulnerabilityRating::NoRating:
      return Likelihood::Likely;
  }
  return Likelihood::Likely;
}

int risk_value(Likelihood l, Impact i) { return value_of(l) * value_of(i); }

RiskClass classify(int risk_value) {
  switch (risk_value) {
    case 1:
    case 2:
    case 3:
      return RiskClass::Minor;
    case 4:
      return RiskClass::Major;
    case 6:
    case 9:
      return RiskClass::Critical;
    default:
      throw Error("INVALID_RISK_VALUE",
                  "risk value " + std::to_string(risk_value) +
                      " is not a product of likelihood and impact");
  }
}

std::string to_string(TimeLevel l) {
  switch (l) {
    case TimeLevel::OneDay: return "t1d";
    case TimeLevel::OneWeek: return "t1w";
    case TimeLevel::OneMonth: return "t1m";
    case TimeLevel::ThreeMonths: return "t3m";
    case TimeLevel::SixMonths: return "t6m";
    case TimeLevel::Beyond: return "more";
  }
  return {};
}

std::string to_string(ExpertiseLevel l) {
  switch (l) {
    case ExpertiseLevel::Layman: return "layman";
    case ExpertiseLevel::Proficient: return "proficient";
    case ExpertiseLevel::Expert: return "expert";
    case ExpertiseLevel::Multiple: return "multiple";
  }
  return {};
}

std::string to_string(KnowledgeLevel l) {
  switch (l) {
    case KnowledgeLevel::Public: return "public";
    case KnowledgeLevel::Restricted: return "restricted";
    case KnowledgeLevel::Sensitive: return "sensitive";
    case KnowledgeLevel::Critical: return "critical";
  }
  return {};
}

std::string to_string(OpportunityLevel l) {
  switch (l) {
    case OpportunityLevel::Unnecessary: return "unnecessary";
    case OpportunityLevel::Easy: return "easy";
    case OpportunityLevel::Moderate: return "moderate";
    case OpportunityLevel::Difficult: return "difficult";
    case OpportunityLevel::None: return "none";
  }
  return {};
}

std::string to_string(EquipmentLevel l) {
  switch (l) {
    case EquipmentLevel::Standard: return "standard";
    case EquipmentLevel::Specialized: return "specialized";
    case EquipmentLevel::Bespoke: return "bespoke";
    case EquipmentLevel::Multiple: return "multiple";
  }
  return {};
}

std::string to_string(VulnerabilityRating r) {
  switch (r) {
    case VulnerabilityRating::NoRating: return "no-rating";
    case VulnerabilityRating::Basic: return "basic";
    case VulnerabilityRating::Moderate: return "moderate";
    case VulnerabilityRating::High: return "high";
    case VulnerabilityRating::BeyondHigh: return "beyond-high";
  }
  return {};
}

std::string to_string(Likelihood l) {
  switch (l) {
    case Likelihood::Unlikely: return "unlikely";
    case Likelihood::Possible: return "possible";
    case Likelihood::Likely: return "likely";
  }
  return {};
}

std::string to_string(Impact i) {
  switch (i) {
    case Impact::Low: return "low";
    case Impact::Medium: return "medium";
    case Impact::High: return "high";
  }
  return {};
}

std::string to_string(RiskClass c) {
  switch (c) {
    case RiskClass::Minor: return "minor";
    case RiskClass::Major: return "major";
    case RiskClass::Critical: return "critical";
  }
  return {};
}

std::optional<TimeLevel> parse_time_level(const std::string& s) {
  if (s == "t1d") return TimeLevel::OneDay;
  if (s == "t1w") return TimeLevel::OneWeek;
  if (s == "t1m") return TimeLevel::OneMonth;
  if (s == "t3m") return TimeLevel::ThreeMonths;
  if (s == "t6m") return TimeLevel::SixMonths;
  if (s == "more") return TimeLevel::Beyond;
  return std::nullopt;
}

std::optional<ExpertiseLevel> parse_expertise_level(const std::string& s) {
  if (s == "layman") return ExpertiseLevel::Layman;
  if (s == "proficient") return ExpertiseLevel::Proficient;
  if (s == "expert") return ExpertiseLevel::Expert;
  if (s == "multiple") return ExpertiseLevel::Multiple;
  return std::nullopt;
}

std::optional<KnowledgeLevel> parse_knowledge_level(const std::string& s) {
  if (s == "public") return KnowledgeLevel::Public;
  if (s == "restricted") return KnowledgeLevel::Restricted;
  if (s == "sensitive") return KnowledgeLevel::Sensitive;
  if (s == "critical") return KnowledgeLevel::Critical;
  return std::nullopt;
}

std::optional<OpportunityLevel> parse_opportunity_level(const std::string& s) {
  if (s == "unnecessary") return OpportunityLevel::Unnecessary;
  if (s == "easy") return OpportunityLevel::Easy;
  if (s == "moderate") return OpportunityLevel::Moderate;
  if (s == "difficult") return OpportunityLevel::Difficult;
  if (s == "none") return OpportunityLevel::None;
  return std::nullopt;
}

std::optional<EquipmentLevel> parse_equipment_level(const std::string& s) {
  if (s == "standard") return EquipmentLevel::Standard;
  if (s == "specialized") return EquipmentLevel::Specialized;
  if (s == "bespoke") return EquipmentLevel::Bespoke;
  if (s == "multiple") return EquipmentLevel::Multiple;
  return std::nullopt;
}

std::optional<VulnerabilityRating> parse_rating(const std::string& s) {
  if (s == "no-rating") return VulnerabilityRating::NoRating;
  if (s == "basic") return VulnerabilityRating::Basic;
  if (s == "moderate") return VulnerabilityRating::Moderate;
  if (s == "high") return VulnerabilityRating::High;
  if (s == "beyond-high") return VulnerabilityRating::BeyondHigh;
  return std::nullopt;
}

}  // namespace tvra
