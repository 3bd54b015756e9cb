#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tvra/catalog.hpp"

namespace tvra {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string factors_block(const FactorTable& t) {
  std::ostringstream os;
  os << "factors {\n";
  os << "  time t1d " << t.time[0] << ", t1w " << t.time[1] << ", t1m " << t.time[2]
     << ", t3m " << t.time[3] << ", t6m " << t.time[4] << ", more " << t.time[5] << "\n";
  os << "  expertise layman " << t.expertise[0] << ", proficient " << t.expertise[1]
     << ", expert " << t.expertise[2] << ", multiple " << t.expertise[3] << "\n";
  os << "  knowledge public " << t.knowledge[0] << ", restricted " << t.knowledge[1]
     << ", sensitive " << t.knowledge[2] << ", critical " << t.knowledge[3] << "\n";
  os << "  opportunity unnecessary " << t.opportunity[0] << ", easy " << t.opportunity[1]
     << ", moderate " << t.opportunity[2] << ", difficult " << t.opportunity[3]
     << ", none infeasible\n";
  os << "  equipment standard " << t.equipment[0] << ", specialized " << t.equipment[1]
     << ", bespoke " << t.equipment[2] << ", multiple " << t.equipment[3] << "\n";
  os << "}";
  return os.str();
}

std::string bands_block(const BandTable& b) {
  std::ostringstream os;
  os << "bands {\n";
  for (const auto& band : b.bands) {
    os << "  " << band.lower_bound << " " << to_string(band.rating) << "\n";
  }
  os << "}";
  return os.str();
}

std::string interface_block(const AccessInterface& i) {
  std::ostringstream os;
  os << "interface " << i.id << " {\n";
  os << "  description " << quote(i.description) << "\n";
  os << "  indexed " << (i.indexed ? "true" : "false") << "\n";
  if (!i.binds.empty()) os << "  binds " << join(i.binds, ", ") << "\n";
  os << "}";
  return os.str();
}

std::string entity_block(const Entity& e) {
  std::ostringstream os;
  os << "entity " << e.id << " {\n";
  os << "  kind " << to_string(e.kind) << "\n";
  os << "  label " << quote(e.label) << "\n";
  os << "}";
  return os.str();
}

std::string asset_block(const Asset& a) {
  std::ostringstream os;
  os << "asset " << a.id << " {\n";
  os << "  class " << to_string(a.asset_class) << "\n";
  os << "  entity " << a.entity << "\n";
  os << "  description " << quote(a.description) << "\n";
  os << "}";
  return os.str();
}

std::string threat_block(const Threat& t) {
  std::ostringstream os;
  os << "threat " << t.id << " {\n";
  os << "  name " << quote(t.name) << "\n";
  os << "  category " << to_string(t.category) << "\n";
  if (t.group) os << "  group " << *t.group << "\n";
  for (const auto& a : t.actions) os << "  action " << quote(a) << "\n";
  std::vector<std::string> exprs;
  exprs.reserve(t.interfaces.size());
  for (const auto& e : t.interfaces) exprs.push_back(e.display());
  os << "  interfaces " << join(exprs, ", ") << "\n";
  os << "  objective " << quote(t.objective) << "\n";
  if (!t.violates.empty()) {
    std::vector<std::string> names;
    names.reserve(t.violates.size());
    for (auto s : t.violates) names.push_back(to_string(s));
    os << "  violates " << join(names, ", ") << "\n";
  }
  os << "  impact " << to_string(t.impact) << "\n";
  if (t.potential) {
    os << "  potential {\n";
    os << "    time " << to_string(t.potential->time) << "\n";
    os << "    expertise " << to_string(t.potential->expertise) << "\n";
    os << "    knowledge " << to_string(t.potential->knowledge) << "\n";
    os << "    opportunity " << to_string(t.potential->opportunity) << "\n";
    os << "    equipment " << to_string(t.potential->equipment) << "\n";
    os << "  }\n";
  }
  if (t.declared_risk) os << "  declared_risk " << to_string(*t.declared_risk) << "\n";
  for (const auto& c : t.countermeasures) os << "  countermeasure " << quote(c) << "\n";
  os << "}";
  return os.str();
}

}  // namespace

std::string serialize_catalog(const Catalog& c) {
  std::vector<std::string> paragraphs;
  paragraphs.push_back("catalog " + quote(c.name) + " version " + std::to_string(c.version));

  if (!c.assumptions.empty()) {
    std::vector<std::string> lines;
    lines.reserve(c.assumptions.size());
    for (const auto& a : c.assumptions) lines.push_back("assumption " + quote(a));
    paragraphs.push_back(join(lines, "\n"));
  }

  if (c.factor_table_override) paragraphs.push_back(factors_block(*c.factor_table_override));
  if (c.band_table_override) paragraphs.push_back(bands_block(*c.band_table_override));

  auto interfaces = c.interfaces;
  std::sort(interfaces.begin(), interfaces.end(),
            [](const AccessInterface& a, const AccessInterface& b) {
              return std::pair(a.id, a.indexed) < std::pair(b.id, b.indexed);
            });
  for (const auto& i : interfaces) paragraphs.push_back(interface_block(i));

  auto entities = c.entities;
  std::sort(entities.begin(), entities.end(),
            [](const Entity& a, const Entity& b) { return a.id < b.id; });
  for (const auto& e : entities) paragraphs.push_back(entity_block(e));

  auto links = c.links;
  std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
    return std::tuple(a.from, a.to, a.kind) < std::tuple(b.from, b.to, b.kind);
  });
  if (!links.empty()) {
    std::vector<std::string> lines;
    lines.reserve(links.size());
    for (const auto& l : links) {
      lines.push_back("link " + l.from + " -> " + l.to + " kind " + to_string(l.kind));
    }
    paragraphs.push_back(join(lines, "\n"));
  }

  auto assets = c.assets;
  std::sort(assets.begin(), assets.end(),
            [](const Asset& a, const Asset& b) { return a.id < b.id; });
  for (const auto& a : assets) paragraphs.push_back(asset_block(a));

  auto threats = c.threats;
  std::sort(threats.begin(), threats.end(),
            [](const Threat& a, const Threat& b) { return a.id < b.id; });
  for (const auto& t : threats) paragraphs.push_back(threat_block(t));

  return join(paragraphs, "\n\n") + "\n";
}

}  // namespace tvra
