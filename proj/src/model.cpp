#include "tvra/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "tvra/error.hpp"

namespace tvra {

std::string format_diagnostic(const Diagnostic& d) {
  std::string sev = d.severity == Severity::Error ? "error" : "warning";
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + sev + " [" +
         d.code + "] " + d.message;
}

std::string to_string(SecurityService s) {
  switch (s) {
    case SecurityService::Confidentiality: return "confidentiality";
    case SecurityService::Integrity: return "integrity";
    case SecurityService::Availability: return "availability";
    case SecurityService::Privacy: return "privacy";
    case SecurityService::Authentication: return "authentication";
    case SecurityService::Authorization: return "authorization";
    case SecurityService::Plausibility: return "plausibility";
    case SecurityService::NonRepudiation: return "non-repudiation";
  }
  return {};
}

std::string to_string(AssetClass c) {
  switch (c) {
    case AssetClass::Physical: return "physical";
    case AssetClass::Logical: return "logical";
    case AssetClass::Human: return "human";
  }
  return {};
}

std::string to_string(EntityKind k) {
  switch (k) {
    case EntityKind::Vehicle: return "vehicle";
    case EntityKind::Rsu: return "rsu";
    case EntityKind::Hmi: return "hmi";
    case EntityKind::PassengerDevice: return "device";
    case EntityKind::NetworkDomain: return "network";
    case EntityKind::Service: return "service";
    case EntityKind::Human: return "human";
  }
  return {};
}

std::string to_string(LinkKind k) {
  switch (k) {
    case LinkKind::V2V: return "v2v";
    case LinkKind::V2I: return "v2i";
    case LinkKind::V2X: return "v2x";
    case LinkKind::Managed: return "managed";
  }
  return {};
}

std::string to_string(ThreatCategory c) {
  switch (c) {
    case ThreatCategory::Data: return "data";
    case ThreatCategory::Logical: return "logical";
    case ThreatCategory::Human: return "human";
  }
  return {};
}

std::optional<SecurityService> parse_security_service(const std::string& s) {
  if (s == "confidentiality") return SecurityService::Confidentiality;
  if (s == "integrity") return SecurityService::Integrity;
  if (s == "availability") return SecurityService::Availability;
  if (s == "privacy") return SecurityService::Privacy;
  if (s == "authentication") return SecurityService::Authentication;
  if (s == "authorization") return SecurityService::Authorization;
  if (s == "plausibility") return SecurityService::Plausibility;
  if (s == "non-repudiation") return SecurityService::NonRepudiation;
  return std::nullopt;
}

std::optional<AssetClass> parse_asset_class(const std::string& s) {
  if (s == "physical") return AssetClass::Physical;
  if (s == "logical") return AssetClass::Logical;
  if (s == "human") return AssetClass::Human;
  return std::nullopt;
}

std::optional<EntityKind> parse_entity_kind(const std::string& s) {
  if (s == "vehicle") return EntityKind::Vehicle;
  if (s == "rsu") return EntityKind::Rsu;
  if (s == "hmi") return EntityKind::Hmi;
  if (s == "device") return EntityKind::PassengerDevice;
  if (s == "network") return EntityKind::NetworkDomain;
  if (s == "service") return EntityKind::Service;
  if (s == "human") return EntityKind::Human;
  return std::nullopt;
}

std::optional<LinkKind> parse_link_kind(const std::string& s) {
  if (s == "v2v") return LinkKind::V2V;
  if (s == "v2i") return LinkKind::V2I;
  if (s == "v2x") return LinkKind::V2X;
  if (s == "managed") return LinkKind::Managed;
  return std::nullopt;
}

std::optional<ThreatCategory> parse_threat_category(const std::string& s) {
  if (s == "data") return ThreatCategory::Data;
  if (s == "logical") return ThreatCategory::Logical;
  if (s == "human") return ThreatCategory::Human;
  return std::nullopt;
}

// --- InterfaceExpr ---------------------------------------------------------------

std::string InterfaceExpr::display() const {
  std::string out = via;
  if (via_indexed) out += "[*]";
  if (on_behalf_of) out += "@" + *on_behalf_of;
  return out;
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

}  // namespace

std::optional<InterfaceExpr> parse_interface_expr(const std::string& text) {
  InterfaceExpr expr;
  std::string rest = text;
  if (auto at = rest.find('@'); at != std::string::npos) {
    std::string obo = rest.substr(at + 1);
    if (!is_identifier(obo)) return std::nullopt;
    expr.on_behalf_of = obo;
    rest = rest.substr(0, at);
  }
  if (rest.size() > 3 && rest.compare(rest.size() - 3, 3, "[*]") == 0) {
    expr.via_indexed = true;
    rest = rest.substr(0, rest.size() - 3);
  }
  if (!is_identifier(rest)) return std::nullopt;
  if (expr.via_indexed && expr.on_behalf_of) return std::nullopt;  // not in the grammar
  expr.via = rest;
  return expr;
}

bool Threat::mentions(const std::string& designation) const {
  for (const auto& e : interfaces) {
    std::string via = e.via_indexed ? e.via + "[*]" : e.via;
    if (via == designation) return true;
    if (e.on_behalf_of && *e.on_behalf_of == designation) return true;
  }
  return false;
}

// --- Catalog lookups and equality ---------------------------------------------------

const AccessInterface* Catalog::find_interface(const std::string& id, bool indexed) const {
  for (const auto& i : interfaces) {
    if (i.id == id && i.indexed == indexed) return &i;
  }
  return nullptr;
}

const Entity* Catalog::find_entity(const std::string& id) const {
  for (const auto& e : entities) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const Threat* Catalog::find_threat(const std::string& id) const {
  for (const auto& t : threats) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

namespace {

template <typename T, typename Key>
std::vector<T> sorted_by(std::vector<T> v, Key key) {
  std::stable_sort(v.begin(), v.end(),
                   [&](const T& a, const T& b) { return key(a) < key(b); });
  return v;
}

}  // namespace

bool Catalog::operator==(const Catalog& o) const {
  if (name != o.name || version != o.version || assumptions != o.assumptions ||
      factor_table_override != o.factor_table_override ||
      band_table_override != o.band_table_override) {
    return false;
  }
  auto iface_key = [](const AccessInterface& i) { return std::pair(i.id, i.indexed); };
  auto link_key = [](const Link& l) { return std::tuple(l.from, l.to, l.kind); };
  return sorted_by(interfaces, iface_key) == sorted_by(o.interfaces, iface_key) &&
         sorted_by(entities, [](const Entity& e) { return e.id; }) ==
             sorted_by(o.entities, [](const Entity& e) { return e.id; }) &&
         sorted_by(links, link_key) == sorted_by(o.links, link_key) &&
         sorted_by(assets, [](const Asset& a) { return a.id; }) ==
             sorted_by(o.assets, [](const Asset& a) { return a.id; }) &&
         sorted_by(threats, [](const Threat& t) { return t.id; }) ==
             sorted_by(o.threats, [](const Threat& t) { return t.id; });
}

// --- Validation ------------------------------------------------------------------------

namespace {

void add(std::vector<Diagnostic>& out, Severity sev, std::string code, std::string message,
         SourcePos pos) {
  out.push_back({sev, std::move(code), std::move(message), pos.line, pos.column});
}

bool human_origin(const AccessInterface& iface) {
  // Heuristic marker for human-origin entry points: the description names the
  // passenger or a human actor.
  std::string lower;
  lower.reserve(iface.description.size());
  for (char c : iface.description) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lower.find("passenger") != std::string::npos ||
         lower.find("human") != std::string::npos;
}

}  // namespace

std::vector<Diagnostic> validate_model(const Catalog& catalog) {
  std::vector<Diagnostic> diags;

  if (catalog.name.empty()) {
    add(diags, Severity::Error, "EMPTY_NAME", "catalog name must be non-empty", {1, 1});
  }
  if (catalog.version < 1) {
    add(diags, Severity::Error, "INVALID_VERSION", "catalog version must be >= 1", {1, 1});
  }

  std::map<std::pair<std::string, bool>, const AccessInterface*> ifaces;
  for (const auto& i : catalog.interfaces) {
    if (i.id.empty()) {
      add(diags, Severity::Error, "EMPTY_ID", "interface id must be non-empty", i.pos);
      continue;
    }
    auto [it, inserted] = ifaces.emplace(std::pair(i.id, i.indexed), &i);
    if (!inserted) {
      add(diags, Severity::Error, "DUPLICATE_INTERFACE",
          "interface '" + i.designation() + "' declared more than once", i.pos);
    }
  }

  std::map<std::string, const Entity*> entities;
  for (const auto& e : catalog.entities) {
    if (e.id.empty()) {
      add(diags, Severity::Error, "EMPTY_ID", "entity id must be non-empty", e.pos);
      continue;
    }
    if (!entities.emplace(e.id, &e).second) {
      add(diags, Severity::Error, "DUPLICATE_ENTITY",
          "entity '" + e.id + "' declared more than once", e.pos);
    }
  }

  for (const auto& i : catalog.interfaces) {
    for (const auto& bound : i.binds) {
      if (!entities.count(bound)) {
        add(diags, Severity::Error, "UNRESOLVED_ENTITY",
            "interface '" + i.designation() + "' binds unknown entity '" + bound + "'",
            i.pos);
      }
    }
  }

  for (const auto& l : catalog.links) {
    if (!entities.count(l.from)) {
      add(diags, Severity::Error, "UNRESOLVED_ENTITY",
          "link references unknown entity '" + l.from + "'", l.pos);
    }
    if (!entities.count(l.to)) {
      add(diags, Severity::Error, "UNRESOLVED_ENTITY",
          "link references unknown entity '" + l.to + "'", l.pos);
    }
    if (l.from == l.to) {
      add(diags, Severity::Error, "SELF_LINK",
          "entity '" + l.from + "' must not link to itself", l.pos);
    }
  }

  std::map<std::string, const Asset*> assets;
  for (const auto& a : catalog.assets) {
    if (!assets.emplace(a.id, &a).second) {
      add(diags, Severity::Error, "DUPLICATE_ASSET",
          "asset '" + a.id + "' declared more than once", a.pos);
    }
    if (!entities.count(a.entity)) {
      add(diags, Severity::Error, "UNRESOLVED_ENTITY",
          "asset '" + a.id + "' references unknown entity '" + a.entity + "'", a.pos);
    }
  }

  std::map<std::string, const Threat*> threats;
  for (const auto& t : catalog.threats) {
    if (!threats.emplace(t.id, &t).second) {
      add(diags, Severity::Error, "DUPLICATE_THREAT",
          "threat '" + t.id + "' declared more than once", t.pos);
    }
    if (t.actions.empty()) {
      add(diags, Severity::Error, "EMPTY_ACTIONS",
          "threat '" + t.id + "' must declare at least one action", t.pos);
    }
    if (t.interfaces.empty()) {
      add(diags, Severity::Error, "EMPTY_INTERFACES",
          "threat '" + t.id + "' must declare at least one attack interface", t.pos);
    }
    bool human_reachable = false;
    for (const auto& e : t.interfaces) {
      auto via = ifaces.find(std::pair(e.via, e.via_indexed));
      if (via == ifaces.end()) {
        add(diags, Severity::Error, "UNRESOLVED_INTERFACE",
            "threat '" + t.id + "' references undeclared interface '" +
                (e.via_indexed ? e.via + "[*]" : e.via) + "'",
            t.pos);
      } else if (e.via_indexed || human_origin(*via->second)) {
        human_reachable = true;
      }
      if (e.on_behalf_of) {
        if (*e.on_behalf_of == e.via && !e.via_indexed) {
          add(diags, Severity::Error, "SELF_DELEGATION",
              "threat '" + t.id + "' uses interface '" + e.via + "' on behalf of itself",
              t.pos);
        }
        if (!ifaces.count(std::pair(*e.on_behalf_of, false))) {
          add(diags, Severity::Error, "UNRESOLVED_INTERFACE",
              "threat '" + t.id + "' references undeclared interface '" + *e.on_behalf_of +
                  "'",
              t.pos);
        }
      }
    }
    if (t.category == ThreatCategory::Human && !t.interfaces.empty() && !human_reachable) {
      add(diags, Severity::Warning, "HUMAN_INTERFACE_ORIGIN",
          "human threat '" + t.id +
              "' uses no indexed or human-origin interface; check the attack interfaces",
          t.pos);
    }
  }

  if (catalog.threats.empty()) {
    add(diags, Severity::Warning, "EMPTY_CATALOG", "catalog declares no threats", {1, 1});
  }

  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.line, a.column, a.code) < std::tie(b.line, b.column, b.code);
  });
  return diags;
}

std::set<std::string> entities_reachable_via(const Catalog& catalog, const std::string& id,
                                             bool indexed) {
  const AccessInterface* iface = catalog.find_interface(id, indexed);
  if (!iface) {
    throw Error("UNKNOWN_INTERFACE", "interface '" + (indexed ? id + "[*]" : id) +
                                         "' is not declared in the catalog");
  }
  return {iface->binds.begin(), iface->binds.end()};
}

}  // namespace tvra
