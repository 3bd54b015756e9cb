#include "tvra/analysis.hpp"

#include <algorithm>
#include <map>

namespace tvra {
namespace {

Assessment assess_threat(const Threat& t, const FactorTable& factors, const BandTable& bands) {
  Assessment a;
  a.threat_id = t.id;
  a.points = potential_points(*t.potential, factors);
  // An infeasible worksheet (opportunity = None) pins the attack to the
  // hardest band instead of dropping the threat from the reports.
  a.rating = a.points ? vulnerability_rating(*a.points, bands)
                      : VulnerabilityRating::BeyondHigh;
  a.likelihood = likelihood_of(a.rating);
  a.impact = t.impact;
  a.risk_value = risk_value(a.likelihood, a.impact);
  a.risk_class = classify(a.risk_value);
  a.declared_risk = t.declared_risk;
  a.discrepancy = t.declared_risk && *t.declared_risk != a.risk_class;
  return a;
}

// Assessable threats in id order, so both execution paths emit identical,
// deterministic output.
std::vector<const Threat*> worklist(const Catalog& c, std::vector<std::string>* warnings) {
  std::vector<const Threat*> work;
  work.reserve(c.threats.size());
  for (const auto& t : c.threats) {
    if (t.potential) {
      work.push_back(&t);
    } else if (warnings) {
      warnings->push_back("threat '" + t.id + "' has no attack-potential worksheet; skipped");
    }
  }
  std::sort(work.begin(), work.end(),
            [](const Threat* a, const Threat* b) { return a->id < b->id; });
  return work;
}

void warn_infeasible(const std::vector<Assessment>& out, std::vector<std::string>* warnings) {
  if (!warnings) return;
  for (const auto& a : out) {
    if (!a.points) {
      warnings->push_back("threat '" + a.threat_id +
                          "' has no exploitable opportunity; scored as unlikely");
    }
  }
}

}  // namespace

std::vector<Assessment> assess_catalog_serial(const Catalog& c,
                                              std::vector<std::string>* warnings) {
  auto work = worklist(c, warnings);
  const FactorTable& factors = c.factor_table();
  const BandTable& bands = c.band_table();

  std::vector<Assessment> out(work.size());
  for (size_t i = 0; i < work.size(); ++i) {
    out[i] = assess_threat(*work[i], factors, bands);
  }
  warn_infeasible(out, warnings);
  return out;
}

std::vector<Assessment> assess_catalog(const Catalog& c, std::vector<std::string>* warnings) {
  auto work = worklist(c, warnings);
  const FactorTable& factors = c.factor_table();
  const BandTable& bands = c.band_table();

  std::vector<Assessment> out(work.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = assess_threat(*work[i], factors, bands);
  }
  warn_infeasible(out, warnings);
  return out;
}

const InterfaceExposure* ExposureReport::find(const std::string& key) const {
  for (const auto& e : entries) {
    if (e.interface_key == key) return &e;
  }
  return nullptr;
}

ExposureReport exposure_by_interface(const Catalog& c, const std::vector<Assessment>& a) {
  std::map<std::string, InterfaceExposure> by_key;
  for (const auto& iface : c.interfaces) {
    auto& entry = by_key[iface.designation()];
    entry.interface_key = iface.designation();
  }

  std::map<std::string, const Assessment*> assessed;
  for (const auto& as : a) assessed[as.threat_id] = &as;

  for (const auto& t : c.threats) {
    // Count each threat once per distinct interface it mentions.
    std::set<std::string> keys;
    for (const auto& e : t.interfaces) {
      keys.insert(e.via_indexed ? e.via + "[*]" : e.via);
      if (e.on_behalf_of) keys.insert(*e.on_behalf_of);
    }
    for (const auto& key : keys) {
      auto& entry = by_key[key];
      entry.interface_key = key;
      entry.threat_ids.insert(t.id);
      auto it = assessed.find(t.id);
      if (it == assessed.end()) {
        ++entry.unassessed;
      } else {
        switch (it->second->risk_class) {
          case RiskClass::Critical: ++entry.critical; break;
          case RiskClass::Major: ++entry.major; break;
          case RiskClass::Minor: ++entry.minor; break;
        }
      }
    }
  }

  ExposureReport report;
  report.entries.reserve(by_key.size());
  for (auto& [key, entry] : by_key) report.entries.push_back(std::move(entry));
  return report;
}

std::set<std::string> critical_set(const std::vector<Assessment>& a) {
  std::set<std::string> out;
  for (const auto& as : a) {
    if (as.risk_class == RiskClass::Critical) out.insert(as.threat_id);
  }
  return out;
}

std::vector<ClassDiscrepancy> consistency_check(const std::vector<Assessment>& a) {
  std::vector<ClassDiscrepancy> out;
  for (const auto& as : a) {
    if (as.discrepancy) out.push_back({as.threat_id, *as.declared_risk, as.risk_class});
  }
  return out;
}

CountermeasurePlan countermeasure_plan(const Catalog& c, const std::vector<Assessment>& a,
                                       std::vector<std::string>* warnings) {
  CountermeasurePlan plan;
  for (const auto& as : a) {
    const Threat* t = c.find_threat(as.threat_id);
    if (!t) continue;
    if (t->countermeasures.empty()) {
      if (warnings)
        warnings->push_back("threat '" + t->id + "' has no countermeasures; omitted from plan");
      continue;
    }
    plan.entries.push_back({t->id, as.risk_class, t->countermeasures});
  }
  std::sort(plan.entries.begin(), plan.entries.end(), [](const PlanEntry& x, const PlanEntry& y) {
    // Critical first, then Major, then Minor; alphabetical within a class.
    auto rank = [](RiskClass rc) {
      switch (rc) {
        case RiskClass::Critical: return 0;
        case RiskClass::Major: return 1;
        case RiskClass::Minor: return 2;
      }
      return 3;
    };
    if (rank(x.risk_class) != rank(y.risk_class)) return rank(x.risk_class) < rank(y.risk_class);
    return x.threat_id < y.threat_id;
  });
  return plan;
}

}  // namespace tvra
