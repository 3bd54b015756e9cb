#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tvra/catalog.hpp"

namespace tvra {
namespace {

std::string list_text(const std::vector<std::string>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += "; ";
    out += v[i];
  }
  return out;
}

std::string services_text(const std::vector<SecurityService>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

std::string exprs_text(const std::vector<InterfaceExpr>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].display();
  }
  return out;
}

std::string potential_text(const std::optional<AttackPotential>& p) {
  if (!p) return "";
  return to_string(p->time) + " " + to_string(p->expertise) + " " + to_string(p->knowledge) +
         " " + to_string(p->opportunity) + " " + to_string(p->equipment);
}

void delta(std::vector<FieldDelta>& out, const char* field, const std::string& before,
           const std::string& after) {
  if (before != after) out.push_back({field, before, after});
}

std::vector<FieldDelta> threat_deltas(const Threat& a, const Threat& b) {
  std::vector<FieldDelta> out;
  delta(out, "name", a.name, b.name);
  delta(out, "category", to_string(a.category), to_string(b.category));
  delta(out, "group", a.group.value_or(""), b.group.value_or(""));
  delta(out, "actions", list_text(a.actions), list_text(b.actions));
  delta(out, "interfaces", exprs_text(a.interfaces), exprs_text(b.interfaces));
  delta(out, "objective", a.objective, b.objective);
  delta(out, "violates", services_text(a.violates), services_text(b.violates));
  delta(out, "impact", to_string(a.impact), to_string(b.impact));
  delta(out, "potential", potential_text(a.potential), potential_text(b.potential));
  delta(out, "declared_risk", a.declared_risk ? to_string(*a.declared_risk) : "",
        b.declared_risk ? to_string(*b.declared_risk) : "");
  return out;
}

std::vector<FieldDelta> interface_deltas(const AccessInterface& a, const AccessInterface& b) {
  std::vector<FieldDelta> out;
  delta(out, "description", a.description, b.description);
  delta(out, "binds", list_text(a.binds), list_text(b.binds));
  return out;
}

}  // namespace

ChangeSet diff_catalogs(const Catalog& a, const Catalog& b) {
  ChangeSet cs;

  std::map<std::string, const Threat*> ta, tb;
  for (const auto& t : a.threats) ta[t.id] = &t;
  for (const auto& t : b.threats) tb[t.id] = &t;
  for (const auto& [id, t] : tb) {
    if (!ta.count(id)) cs.added_threats.push_back(id);
  }
  for (const auto& [id, old_threat] : ta) {
    auto it = tb.find(id);
    if (it == tb.end()) {
      cs.removed_threats.push_back(id);
      continue;
    }
    auto deltas = threat_deltas(*old_threat, *it->second);
    if (!deltas.empty()) cs.modified_threats.push_back({id, std::move(deltas)});

    std::set<std::string> before(old_threat->countermeasures.begin(),
                                 old_threat->countermeasures.end());
    std::set<std::string> after(it->second->countermeasures.begin(),
                                it->second->countermeasures.end());
    for (const auto& c : after) {
      if (!before.count(c)) cs.added_countermeasures.push_back(id + ": " + c);
    }
    for (const auto& c : before) {
      if (!after.count(c)) cs.removed_countermeasures.push_back(id + ": " + c);
    }
  }

  std::map<std::string, const AccessInterface*> ia, ib;
  for (const auto& i : a.interfaces) ia[i.designation()] = &i;
  for (const auto& i : b.interfaces) ib[i.designation()] = &i;
  for (const auto& [key, iface] : ib) {
    if (!ia.count(key)) cs.added_interfaces.push_back(key);
  }
  for (const auto& [key, iface] : ia) {
    auto it = ib.find(key);
    if (it == ib.end()) {
      cs.removed_interfaces.push_back(key);
      continue;
    }
    auto deltas = interface_deltas(*iface, *it->second);
    if (!deltas.empty()) cs.modified_interfaces.push_back({key, std::move(deltas)});
  }

  // std::map iteration already yields ids in sorted order.
  return cs;
}

std::string render_changeset(const ChangeSet& cs) {
  std::ostringstream os;
  if (cs.empty()) {
    os << "no differences\n";
    return os.str();
  }
  for (const auto& id : cs.added_threats) os << "+ threat " << id << "\n";
  for (const auto& id : cs.removed_threats) os << "- threat " << id << "\n";
  for (const auto& m : cs.modified_threats) {
    os << "~ threat " << m.id << "\n";
    for (const auto& d : m.deltas) {
      os << "    " << d.field << ": " << (d.before.empty() ? "(none)" : d.before) << " -> "
         << (d.after.empty() ? "(none)" : d.after) << "\n";
    }
  }
  for (const auto& id : cs.added_interfaces) os << "+ interface " << id << "\n";
  for (const auto& id : cs.removed_interfaces) os << "- interface " << id << "\n";
  for (const auto& m : cs.modified_interfaces) {
    os << "~ interface " << m.id << "\n";
    for (const auto& d : m.deltas) {
      os << "    " << d.field << ": " << (d.before.empty() ? "(none)" : d.before) << " -> "
         << (d.after.empty() ? "(none)" : d.after) << "\n";
    }
  }
  for (const auto& c : cs.added_countermeasures) os << "+ countermeasure " << c << "\n";
  for (const auto& c : cs.removed_countermeasures) os << "- countermeasure " << c << "\n";
  return os.str();
}

}  // namespace tvra
