#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvra/diagnostics.hpp"
#include "tvra/scoring.hpp"

namespace tvra {

// --- Domain enumerations -------------------------------------------------------

enum class SecurityService {
  Confidentiality,
  Integrity,
  Availability,
  Privacy,
  Authentication,
  Authorization,
  Plausibility,
  NonRepudiation,
};

enum class AssetClass { Physical, Logical, Human };

enum class EntityKind { Vehicle, Rsu, Hmi, PassengerDevice, NetworkDomain, Service, Human };

enum class LinkKind { V2V, V2I, V2X, Managed };

enum class ThreatCategory { Data, Logical, Human };

std::string to_string(SecurityService);
std::string to_string(AssetClass);
std::string to_string(EntityKind);
std::string to_string(LinkKind);
std::string to_string(ThreatCategory);

std::optional<SecurityService> parse_security_service(const std::string&);
std::optional<AssetClass> parse_asset_class(const std::string&);
std::optional<EntityKind> parse_entity_kind(const std::string&);
std::optional<LinkKind> parse_link_kind(const std::string&);
std::optional<ThreatCategory> parse_threat_category(const std::string&);

// --- Infrastructure and assets ---------------------------------------------------

struct Entity {
  std::string id;
  EntityKind kind = EntityKind::Vehicle;
  std::string label;
  SourcePos pos;

  bool operator==(const Entity& o) const {
    return id == o.id && kind == o.kind && label == o.label;
  }
};

struct Link {
  std::string from;
  std::string to;
  LinkKind kind = LinkKind::V2V;
  SourcePos pos;

  bool operator==(const Link& o) const {
    return from == o.from && to == o.to && kind == o.kind;
  }
};

struct Asset {
  std::string id;
  AssetClass asset_class = AssetClass::Physical;
  std::string entity;
  std::string description;
  SourcePos pos;

  bool operator==(const Asset& o) const {
    return id == o.id && asset_class == o.asset_class && entity == o.entity &&
           o.description == description;
  }
};

// An access interface (reference point). `indexed` models a family of entry
// points sharing one letter (the in-vehicle device family A_i, i = 1..n).
// Interface identity is the designation (id, indexed): the same letter may be
// declared once plain and once indexed.
struct AccessInterface {
  std::string id;
  bool indexed = false;
  std::string description;
  std::vector<std::string> binds;  // entity ids reachable through this interface
  SourcePos pos;

  // "A" or "A[*]"
  std::string designation() const { return indexed ? id + "[*]" : id; }

  bool operator==(const AccessInterface& o) const {
    return id == o.id && indexed == o.indexed && description == o.description &&
           binds == o.binds;
  }
};

// One attack-interface expression from a threat row: `A`, `A[*]`, or `B@E`
// (read "B on behalf of E"). References are by designation and resolved
// against the catalog's declared interfaces during validation.
struct InterfaceExpr {
  std::string via;
  bool via_indexed = false;
  std::optional<std::string> on_behalf_of;

  std::string display() const;

  bool operator==(const InterfaceExpr&) const = default;
};

// Parses the canonical rendering back into an expression.
std::optional<InterfaceExpr> parse_interface_expr(const std::string& text);

// --- Threats -----------------------------------------------------------------------

struct Threat {
  std::string id;
  std::string name;
  ThreatCategory category = ThreatCategory::Data;
  std::optional<std::string> group;
  std::vector<std::string> actions;
  std::vector<InterfaceExpr> interfaces;
  std::string objective;
  std::vector<SecurityService> violates;
  Impact impact = Impact::Low;
  std::optional<AttackPotential> potential;
  std::optional<RiskClass> declared_risk;
  std::vector<std::string> countermeasures;
  SourcePos pos;

  bool mentions(const std::string& designation) const;

  bool operator==(const Threat& o) const {
    return id == o.id && name == o.name && category == o.category && group == o.group &&
           actions == o.actions && interfaces == o.interfaces && objective == o.objective &&
           violates == o.violates && impact == o.impact && potential == o.potential &&
           declared_risk == o.declared_risk && countermeasures == o.countermeasures;
  }
};

// --- Catalog ----------------------------------------------------------------------

struct Catalog {
  std::string name;
  int version = 1;
  std::vector<std::string> assumptions;
  std::vector<AccessInterface> interfaces;
  std::vector<Entity> entities;
  std::vector<Link> links;
  std::vector<Asset> assets;
  std::vector<Threat> threats;
  std::optional<FactorTable> factor_table_override;
  std::optional<BandTable> band_table_override;

  const FactorTable& factor_table() const {
    return factor_table_override ? *factor_table_override : default_factor_table();
  }
  const BandTable& band_table() const {
    return band_table_override ? *band_table_override : default_band_table();
  }

  const AccessInterface* find_interface(const std::string& id, bool indexed) const;
  const Entity* find_entity(const std::string& id) const;
  const Threat* find_threat(const std::string& id) const;

  // Structural equality: top-level declarations compare as id-keyed sets
  // (serialization reorders blocks), lists inside declarations keep order.
  bool operator==(const Catalog& o) const;
};

// --- Operations ---------------------------------------------------------------------

// All referential-integrity and invariant violations, ordered by
// (source position, code). Empty means valid; warnings never block assessment.
std::vector<Diagnostic> validate_model(const Catalog& catalog);

// Entities whose declared bindings include the interface.
// Throws Error(UNKNOWN_INTERFACE) if the designation is not declared.
std::set<std::string> entities_reachable_via(const Catalog& catalog,
                                             const std::string& id, bool indexed);

}  // namespace tvra
