#include "tvra/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tvra/error.hpp"

namespace tvra {

RiskMatrix build_matrix(const std::vector<Assessment>& a) {
  RiskMatrix m;
  for (int l = 1; l <= 3; ++l) {
    for (int i = 1; i <= 3; ++i) {
      auto& cell = m.cells[l - 1][i - 1];
      cell.risk_value = l * i;
      cell.risk_class = classify(cell.risk_value);
    }
  }
  for (const auto& as : a) {
    m.cells[value_of(as.likelihood) - 1][value_of(as.impact) - 1].threat_ids.push_back(
        as.threat_id);
  }
  for (auto& row : m.cells) {
    for (auto& cell : row) std::sort(cell.threat_ids.begin(), cell.threat_ids.end());
  }
  return m;
}

namespace {

char class_letter(RiskClass c) {
  switch (c) {
    case RiskClass::Minor: return 'm';
    case RiskClass::Major: return 'M';
    case RiskClass::Critical: return 'C';
  }
  return '?';
}

std::string pad(const std::string& s, size_t width) {
  std::string out = " " + s;
  if (out.size() < width) out += std::string(width - out.size(), ' ');
  return out.substr(0, width);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_text(const RiskMatrix& m) {
  // 79 columns: 14-wide row label plus three 20-wide impact cells.
  const std::string rule =
      "+" + std::string(14, '-') + ("+" + std::string(20, '-')) + ("+" + std::string(20, '-')) +
      ("+" + std::string(20, '-')) + "+\n";
  std::ostringstream os;
  os << rule;
  os << "|" << pad("lhd \\ impact", 14) << "|" << pad("low (1)", 20) << "|"
     << pad("medium (2)", 20) << "|" << pad("high (3)", 20) << "|\n";
  os << rule;
  const char* row_labels[3] = {"likely (3)", "possible (2)", "unlikely (1)"};
  for (int r = 0; r < 3; ++r) {
    int l = 3 - r;  // Likely on top
    os << "|" << pad(row_labels[r], 14);
    for (int i = 1; i <= 3; ++i) {
      const auto& cell = m.at(l, i);
      std::string text(1, class_letter(cell.risk_class));
      text += " " + std::to_string(cell.threat_ids.size());
      os << "|" << pad(text, 20);
    }
    os << "|\n" << rule;
  }
  os << "  m = minor   M = major   C = critical   (cells show class and threat count)\n";
  return os.str();
}

std::string render_assessment_table(const Catalog& c, const std::vector<Assessment>& a) {
  std::map<std::string, const Assessment*> by_id;
  for (const auto& as : a) by_id[as.threat_id] = &as;

  std::vector<const Threat*> threats;
  threats.reserve(c.threats.size());
  for (const auto& t : c.threats) threats.push_back(&t);
  std::sort(threats.begin(), threats.end(),
            [](const Threat* x, const Threat* y) { return x->id < y->id; });

  std::ostringstream os;
  os << std::left << std::setw(20) << "threat" << std::setw(9) << "category" << std::right
     << std::setw(7) << "points" << "  " << std::left << std::setw(12) << "rating"
     << std::right << std::setw(2) << "L" << std::setw(3) << "I" << std::setw(5) << "risk"
     << "  " << std::left << std::setw(11) << "class" << std::setw(9) << "declared"
     << "\n";
  os << std::string(78, '-') << "\n";
  for (const Threat* t : threats) {
    os << std::left << std::setw(20) << t->id << std::setw(9) << to_string(t->category);
    auto it = by_id.find(t->id);
    if (it == by_id.end()) {
      os << std::right << std::setw(7) << "-" << "  " << std::left << std::setw(12) << "-"
         << std::right << std::setw(2) << "-" << std::setw(3) << "-" << std::setw(5) << "-"
         << "  " << std::left << std::setw(11) << "unassessed" << std::setw(9) << "-"
         << "\n";
      continue;
    }
    const Assessment& as = *it->second;
    os << std::right << std::setw(7) << (as.points ? std::to_string(*as.points) : "inf")
       << "  " << std::left << std::setw(12) << to_string(as.rating) << std::right
       << std::setw(2) << value_of(as.likelihood) << std::setw(3) << value_of(as.impact)
       << std::setw(5) << as.risk_value << "  " << std::left << std::setw(11)
       << to_string(as.risk_class) << std::setw(9)
       << (as.declared_risk ? to_string(*as.declared_risk) : "-")
       << (as.discrepancy ? " !" : "") << "\n";
  }
  return os.str();
}

std::string emit_structured(const Catalog& c, const std::vector<Assessment>& a,
                            const RiskMatrix& m, const CountermeasurePlan& plan,
                            ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::map<std::string, const Assessment*> by_id;
    for (const auto& as : a) by_id[as.threat_id] = &as;

    std::vector<const Threat*> threats;
    threats.reserve(c.threats.size());
    for (const auto& t : c.threats) threats.push_back(&t);
    std::sort(threats.begin(), threats.end(),
              [](const Threat* x, const Threat* y) { return x->id < y->id; });

    std::ostringstream os;
    os << "threat_id,category,points,rating,likelihood,impact,risk_value,risk_class,"
          "declared_risk,discrepancy\n";
    for (const Threat* t : threats) {
      os << csv_field(t->id) << "," << to_string(t->category) << ",";
      auto it = by_id.find(t->id);
      if (it == by_id.end()) {
        os << ",,,,,unassessed,"
           << (t->declared_risk ? to_string(*t->declared_risk) : "") << ",\n";
        continue;
      }
      const Assessment& as = *it->second;
      os << (as.points ? std::to_string(*as.points) : "") << "," << to_string(as.rating)
         << "," << value_of(as.likelihood) << "," << value_of(as.impact) << ","
         << as.risk_value << "," << to_string(as.risk_class) << ","
         << (as.declared_risk ? to_string(*as.declared_risk) : "") << ","
         << (as.discrepancy ? "true" : "false") << "\n";
    }
    return os.str();
  }

  if (format == ReportFormat::Json) {
    nlohmann::json doc;
    doc["assessments"] = nlohmann::json::array();
    doc["matrix"] = nlohmann::json::array();
    doc["plan"] = nlohmann::json::array();

    std::map<std::string, const Assessment*> by_id;
    for (const auto& as : a) by_id[as.threat_id] = &as;
    std::vector<const Threat*> threats;
    threats.reserve(c.threats.size());
    for (const auto& t : c.threats) threats.push_back(&t);
    std::sort(threats.begin(), threats.end(),
              [](const Threat* x, const Threat* y) { return x->id < y->id; });

    for (const Threat* t : threats) {
      nlohmann::json row;
      row["threat_id"] = t->id;
      row["category"] = to_string(t->category);
      auto it = by_id.find(t->id);
      if (it == by_id.end()) {
        row["points"] = nullptr;
        row["rating"] = nullptr;
        row["likelihood"] = nullptr;
        row["impact"] = nullptr;
        row["risk_value"] = nullptr;
        row["risk_class"] = "unassessed";
        row["declared_risk"] =
            t->declared_risk ? nlohmann::json(to_string(*t->declared_risk)) : nullptr;
        row["discrepancy"] = nullptr;
      } else {
        const Assessment& as = *it->second;
        row["points"] = as.points ? nlohmann::json(*as.points) : nullptr;
        row["rating"] = to_string(as.rating);
        row["likelihood"] = value_of(as.likelihood);
        row["impact"] = value_of(as.impact);
        row["risk_value"] = as.risk_value;
        row["risk_class"] = to_string(as.risk_class);
        row["declared_risk"] =
            as.declared_risk ? nlohmann::json(to_string(*as.declared_risk)) : nullptr;
        row["discrepancy"] = as.discrepancy;
      }
      doc["assessments"].push_back(std::move(row));
    }

    // only occupied cells; an empty assessment set gives an empty array
    for (int l = 1; l <= 3; ++l) {
      for (int i = 1; i <= 3; ++i) {
        const auto& cell = m.at(l, i);
        if (cell.threat_ids.empty()) continue;
        nlohmann::json jcell;
        jcell["likelihood"] = l;
        jcell["impact"] = i;
        jcell["risk_value"] = cell.risk_value;
        jcell["risk_class"] = to_string(cell.risk_class);
        jcell["threats"] = cell.threat_ids;
        doc["matrix"].push_back(std::move(jcell));
      }
    }

    for (const auto& entry : plan.entries) {
      nlohmann::json jentry;
      jentry["threat_id"] = entry.threat_id;
      jentry["risk_class"] = to_string(entry.risk_class);
      jentry["countermeasures"] = entry.countermeasures;
      doc["plan"].push_back(std::move(jentry));
    }

    return doc.dump(2) + "\n";
  }

  throw Error("UNSUPPORTED_FORMAT", "unsupported report format");
}

std::string render_exposure(const ExposureReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "interface" << std::right << std::setw(9) << "critical"
     << std::setw(7) << "major" << std::setw(7) << "minor" << std::setw(12) << "unassessed"
     << std::setw(7) << "total" << "\n";
  os << std::string(54, '-') << "\n";
  for (const auto& e : report.entries) {
    os << std::left << std::setw(12) << e.interface_key << std::right << std::setw(9)
       << e.critical << std::setw(7) << e.major << std::setw(7) << e.minor << std::setw(12)
       << e.unassessed << std::setw(7) << e.total() << "\n";
    if (!e.threat_ids.empty()) {
      os << "    ";
      bool first = true;
      for (const auto& id : e.threat_ids) {
        if (!first) os << ", ";
        os << id;
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string render_plan(const CountermeasurePlan& plan) {
  std::ostringstream os;
  for (const auto& entry : plan.entries) {
    os << "[" << to_string(entry.risk_class) << "] " << entry.threat_id << "\n";
    for (const auto& c : entry.countermeasures) {
      os << "  - " << c << "\n";
    }
  }
  return os.str();
}

}  // namespace tvra
