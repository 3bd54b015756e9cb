#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tvra/catalog.hpp"

namespace tvra {
namespace {

// --- Lexer --------------------------------------------------------------------

enum class TokKind { Ident, String, Int, LBrace, RBrace, Comma, Arrow, At, IndexMark, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;   // identifier name or decoded string value
  long long number = 0;
  SourcePos pos;
};

class Lexer {
 public:
  Lexer(const std::string& source, std::vector<Diagnostic>& diags)
      : src_(source), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t;
      t.pos = pos();
      if (at_end()) {
        t.kind = TokKind::End;
        out.push_back(t);
        return out;
      }
      char c = peek();
      if (c == '{') {
        advance();
        t.kind = TokKind::LBrace;
      } else if (c == '}') {
        advance();
        t.kind = TokKind::RBrace;
      } else if (c == ',') {
        advance();
        t.kind = TokKind::Comma;
      } else if (c == '@') {
        advance();
        t.kind = TokKind::At;
      } else if (c == '[') {
        if (src_.compare(offset_, 3, "[*]") == 0) {
          advance();
          advance();
          advance();
          t.kind = TokKind::IndexMark;
        } else {
          error("EXPECTED_TOKEN", "expected '[*]'", t.pos);
          advance();
          continue;
        }
      } else if (c == '-' && offset_ + 1 < src_.size() && src_[offset_ + 1] == '>') {
        advance();
        advance();
        t.kind = TokKind::Arrow;
      } else if (c == '"') {
        if (!lex_string(t)) continue;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = TokKind::Int;
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          digits += peek();
          advance();
        }
        if (digits.size() > 9) {  // keeps the value comfortably inside int range
          error("INVALID_NUMBER", "number '" + digits + "' is out of range", t.pos);
          continue;
        }
        t.number = std::stoll(digits);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = TokKind::Ident;
        while (!at_end()) {
          char k = peek();
          if (std::isalnum(static_cast<unsigned char>(k)) || k == '_' || k == '-') {
            // keep `->` available after an identifier
            if (k == '-' && offset_ + 1 < src_.size() && src_[offset_ + 1] == '>') break;
            t.text += k;
            advance();
          } else {
            break;
          }
        }
      } else {
        error("UNEXPECTED_CHARACTER", std::string("unexpected character '") + c + "'",
              t.pos);
        advance();
        continue;
      }
      out.push_back(t);
    }
  }

 private:
  bool at_end() const { return offset_ >= src_.size(); }
  char peek() const { return src_[offset_]; }
  SourcePos pos() const { return {line_, column_}; }

  void advance() {
    if (src_[offset_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++offset_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool lex_string(Token& t) {
    t.kind = TokKind::String;
    advance();  // opening quote
    while (!at_end()) {
      char c = peek();
      if (c == '"') {
        advance();
        return true;
      }
      if (c == '\n') break;
      if (c == '\\') {
        advance();
        if (at_end()) break;
        char esc = peek();
        if (esc == '"' || esc == '\\') {
          t.text += esc;
          advance();
        } else {
          error("INVALID_ESCAPE", std::string("invalid escape '\\") + esc + "'", pos());
          advance();
        }
      } else {
        t.text += c;
        advance();
      }
    }
    error("UNTERMINATED_STRING", "string literal is not terminated", t.pos);
    return false;
  }

  void error(std::string code, std::string message, SourcePos p) {
    diags_.push_back({Severity::Error, std::move(code), std::move(message), p.line, p.column});
  }

  const std::string& src_;
  std::vector<Diagnostic>& diags_;
  size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// --- Parser --------------------------------------------------------------------

const std::set<std::string> kTopLevelKeywords = {
    "catalog", "assumption", "interface", "entity", "link", "asset", "threat",
    "factors",  "bands"};

class Parser {
 public:
  explicit Parser(const std::string& source) {
    tokens_ = Lexer(source, diags_).run();
  }

  ParseResult run() {
    if (tokens_.size() == 1 && diags_.empty()) {
      error("EMPTY_SOURCE", "source contains no declarations", {1, 1});
      return finish();
    }

    parse_header();
    while (!at(TokKind::End)) {
      if (!at(TokKind::Ident)) {
        error("EXPECTED_TOKEN", "expected a declaration keyword", cur().pos);
        resync();
        continue;
      }
      const std::string kw = cur().text;
      if (kw == "assumption") {
        parse_assumption();
      } else if (kw == "interface") {
        parse_interface();
      } else if (kw == "entity") {
        parse_entity();
      } else if (kw == "link") {
        parse_link();
      } else if (kw == "asset") {
        parse_asset();
      } else if (kw == "threat") {
        parse_threat();
      } else if (kw == "factors") {
        parse_factors();
      } else if (kw == "bands") {
        parse_bands();
      } else if (kw == "catalog") {
        error("DUPLICATE_FIELD", "catalog header declared more than once", cur().pos);
        resync();
      } else {
        error("UNKNOWN_KEYWORD", "unknown declaration '" + kw + "'", cur().pos);
        resync();
      }
    }
    return finish();
  }

 private:
  // -- token access --

  const Token& cur() const { return tokens_[index_]; }
  bool at(TokKind k) const { return cur().kind == k; }
  bool at_keyword(const char* kw) const { return at(TokKind::Ident) && cur().text == kw; }
  void next() {
    if (!at(TokKind::End)) ++index_;
  }

  bool expect(TokKind k, const char* what) {
    if (at(k)) return true;
    error("EXPECTED_TOKEN", std::string("expected ") + what, cur().pos);
    return false;
  }

  std::optional<std::string> take_ident(const char* what) {
    if (!expect(TokKind::Ident, what)) return std::nullopt;
    std::string s = cur().text;
    next();
    return s;
  }

  std::optional<std::string> take_string(const char* what) {
    if (!expect(TokKind::String, what)) return std::nullopt;
    std::string s = cur().text;
    next();
    return s;
  }

  std::optional<long long> take_int(const char* what) {
    if (!expect(TokKind::Int, what)) return std::nullopt;
    long long v = cur().number;
    next();
    return v;
  }

  void error(std::string code, std::string message, SourcePos pos) {
    diags_.push_back(
        {Severity::Error, std::move(code), std::move(message), pos.line, pos.column});
  }

  void warning(std::string code, std::string message, SourcePos pos) {
    diags_.push_back(
        {Severity::Warning, std::move(code), std::move(message), pos.line, pos.column});
  }

  // Skip to the next top-level declaration keyword, balancing braces so a
  // keyword-looking identifier inside a block does not stop the skip.
  void resync() {
    next();
    int depth = 0;
    while (!at(TokKind::End)) {
      if (at(TokKind::LBrace)) {
        ++depth;
      } else if (at(TokKind::RBrace)) {
        if (depth > 0) --depth;
      } else if (depth == 0 && at(TokKind::Ident) && kTopLevelKeywords.count(cur().text)) {
        return;
      }
      next();
    }
  }

  ParseResult finish() {
    std::stable_sort(diags_.begin(), diags_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return std::tie(a.line, a.column) < std::tie(b.line, b.column);
                     });
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.catalog = std::move(catalog_);
    return result;
  }

  // -- declarations --

  void parse_header() {
    if (!at_keyword("catalog")) {
      error("EXPECTED_TOKEN", "catalog source must start with a 'catalog' header",
            cur().pos);
      return;
    }
    SourcePos pos = cur().pos;
    next();
    if (auto name = take_string("the catalog name string")) {
      if (name->empty()) error("EMPTY_NAME", "catalog name must be non-empty", pos);
      catalog_.name = *name;
    }
    if (at_keyword("version")) {
      next();
      if (auto v = take_int("an integer version")) {
        if (*v < 1) error("INVALID_VERSION", "catalog version must be >= 1", pos);
        catalog_.version = static_cast<int>(*v);
      }
    } else {
      error("MISSING_FIELD", "catalog header requires 'version <int>'", pos);
    }
  }

  void parse_assumption() {
    next();
    if (auto text = take_string("an assumption string")) {
      catalog_.assumptions.push_back(*text);
    }
  }

  void parse_interface() {
    SourcePos pos = cur().pos;
    next();
    AccessInterface iface;
    iface.pos = pos;
    auto id = take_ident("an interface id");
    if (!id) return resync();
    iface.id = *id;
    if (!expect(TokKind::LBrace, "'{'")) return resync();
    next();

    bool saw_description = false;
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      if (at_keyword("description")) {
        if (saw_description)
          error("DUPLICATE_FIELD", "duplicate 'description' field", cur().pos);
        next();
        if (auto d = take_string("a description string")) {
          iface.description = *d;
          saw_description = true;
        } else {
          return resync();
        }
      } else if (at_keyword("indexed")) {
        next();
        auto b = take_ident("'true' or 'false'");
        if (!b) return resync();
        if (*b == "true") {
          iface.indexed = true;
        } else if (*b == "false") {
          iface.indexed = false;
        } else {
          error("UNKNOWN_ENUM_VALUE", "'indexed' must be true or false", pos);
        }
      } else if (at_keyword("binds")) {
        next();
        for (;;) {
          auto e = take_ident("an entity id");
          if (!e) return resync();
          iface.binds.push_back(*e);
          if (!at(TokKind::Comma)) break;
          next();
        }
      } else {
        error("UNKNOWN_FIELD",
              "unknown interface field '" + (at(TokKind::Ident) ? cur().text : "?") + "'",
              cur().pos);
        return resync();
      }
    }
    if (!saw_description)
      error("MISSING_FIELD", "interface '" + iface.id + "' requires 'description'", pos);
    if (expect(TokKind::RBrace, "'}'")) next();
    catalog_.interfaces.push_back(std::move(iface));
  }

  void parse_entity() {
    SourcePos pos = cur().pos;
    next();
    Entity entity;
    entity.pos = pos;
    auto id = take_ident("an entity id");
    if (!id) return resync();
    entity.id = *id;
    if (!expect(TokKind::LBrace, "'{'")) return resync();
    next();

    bool saw_kind = false, saw_label = false;
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      if (at_keyword("kind")) {
        next();
        auto k = take_ident("an entity kind");
        if (!k) return resync();
        if (auto kind = parse_entity_kind(*k)) {
          entity.kind = *kind;
          saw_kind = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown entity kind '" + *k + "'", pos);
        }
      } else if (at_keyword("label")) {
        next();
        if (auto l = take_string("a label string")) {
          entity.label = *l;
          saw_label = true;
        } else {
          return resync();
        }
      } else {
        error("UNKNOWN_FIELD",
              "unknown entity field '" + (at(TokKind::Ident) ? cur().text : "?") + "'",
              cur().pos);
        return resync();
      }
    }
    if (!saw_kind) error("MISSING_FIELD", "entity '" + entity.id + "' requires 'kind'", pos);
    if (!saw_label)
      error("MISSING_FIELD", "entity '" + entity.id + "' requires 'label'", pos);
    if (expect(TokKind::RBrace, "'}'")) next();
    catalog_.entities.push_back(std::move(entity));
  }

  void parse_link() {
    SourcePos pos = cur().pos;
    next();
    Link link;
    link.pos = pos;
    auto from = take_ident("a source entity id");
    if (!from) return resync();
    link.from = *from;
    if (!expect(TokKind::Arrow, "'->'")) return resync();
    next();
    auto to = take_ident("a target entity id");
    if (!to) return resync();
    link.to = *to;
    if (!at_keyword("kind")) {
      error("MISSING_FIELD", "link requires 'kind <v2v|v2i|v2x|managed>'", pos);
      return resync();
    }
    next();
    auto k = take_ident("a link kind");
    if (!k) return resync();
    if (auto kind = parse_link_kind(*k)) {
      link.kind = *kind;
    } else {
      error("UNKNOWN_ENUM_VALUE", "unknown link kind '" + *k + "'", pos);
    }
    catalog_.links.push_back(std::move(link));
  }

  void parse_asset() {
    SourcePos pos = cur().pos;
    next();
    Asset asset;
    asset.pos = pos;
    auto id = take_ident("an asset id");
    if (!id) return resync();
    asset.id = *id;
    if (!expect(TokKind::LBrace, "'{'")) return resync();
    next();

    bool saw_class = false, saw_entity = false;
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      if (at_keyword("class")) {
        next();
        auto c = take_ident("an asset class");
        if (!c) return resync();
        if (auto cls = parse_asset_class(*c)) {
          asset.asset_class = *cls;
          saw_class = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown asset class '" + *c + "'", pos);
        }
      } else if (at_keyword("entity")) {
        next();
        auto e = take_ident("an entity id");
        if (!e) return resync();
        asset.entity = *e;
        saw_entity = true;
      } else if (at_keyword("description")) {
        next();
        if (auto d = take_string("a description string")) {
          asset.description = *d;
        } else {
          return resync();
        }
      } else {
        error("UNKNOWN_FIELD",
              "unknown asset field '" + (at(TokKind::Ident) ? cur().text : "?") + "'",
              cur().pos);
        return resync();
      }
    }
    if (!saw_class) error("MISSING_FIELD", "asset '" + asset.id + "' requires 'class'", pos);
    if (!saw_entity)
      error("MISSING_FIELD", "asset '" + asset.id + "' requires 'entity'", pos);
    if (expect(TokKind::RBrace, "'}'")) next();
    catalog_.assets.push_back(std::move(asset));
  }

  std::optional<InterfaceExpr> parse_expr() {
    InterfaceExpr expr;
    auto via = take_ident("an interface id");
    if (!via) return std::nullopt;
    expr.via = *via;
    if (at(TokKind::IndexMark)) {
      expr.via_indexed = true;
      next();
      return expr;  // grammar: no delegation on an indexed family
    }
    if (at(TokKind::At)) {
      next();
      auto obo = take_ident("an interface id after '@'");
      if (!obo) return std::nullopt;
      expr.on_behalf_of = *obo;
    }
    return expr;
  }

  void parse_threat() {
    SourcePos pos = cur().pos;
    next();
    Threat threat;
    threat.pos = pos;
    auto id = take_ident("a threat id");
    if (!id) return resync();
    threat.id = *id;
    if (!expect(TokKind::LBrace, "'{'")) return resync();
    next();

    bool saw_name = false, saw_category = false, saw_interfaces = false;
    bool saw_objective = false, saw_impact = false;
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      if (at_keyword("name")) {
        next();
        if (auto n = take_string("a name string")) {
          threat.name = *n;
          saw_name = true;
        } else {
          return resync();
        }
      } else if (at_keyword("category")) {
        next();
        auto c = take_ident("a threat category");
        if (!c) return resync();
        if (auto cat = parse_threat_category(*c)) {
          threat.category = *cat;
          saw_category = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown threat category '" + *c + "'", pos);
        }
      } else if (at_keyword("group")) {
        next();
        auto g = take_ident("a group id");
        if (!g) return resync();
        threat.group = *g;
      } else if (at_keyword("action")) {
        next();
        if (auto a = take_string("an action string")) {
          threat.actions.push_back(*a);
        } else {
          return resync();
        }
      } else if (at_keyword("interfaces")) {
        next();
        for (;;) {
          auto expr = parse_expr();
          if (!expr) return resync();
          threat.interfaces.push_back(*expr);
          if (!at(TokKind::Comma)) break;
          next();
        }
        saw_interfaces = true;
      } else if (at_keyword("objective")) {
        next();
        if (auto o = take_string("an objective string")) {
          threat.objective = *o;
          saw_objective = true;
        } else {
          return resync();
        }
      } else if (at_keyword("violates")) {
        next();
        for (;;) {
          auto s = take_ident("a security service");
          if (!s) return resync();
          if (auto svc = parse_security_service(*s)) {
            threat.violates.push_back(*svc);
          } else {
            error("UNKNOWN_ENUM_VALUE", "unknown security service '" + *s + "'", pos);
          }
          if (!at(TokKind::Comma)) break;
          next();
        }
      } else if (at_keyword("impact")) {
        next();
        auto i = take_ident("an impact level");
        if (!i) return resync();
        if (*i == "low") {
          threat.impact = Impact::Low;
          saw_impact = true;
        } else if (*i == "medium") {
          threat.impact = Impact::Medium;
          saw_impact = true;
        } else if (*i == "high") {
          threat.impact = Impact::High;
          saw_impact = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown impact level '" + *i + "'", pos);
        }
      } else if (at_keyword("potential")) {
        SourcePos ppos = cur().pos;
        next();
        if (auto p = parse_potential(ppos)) threat.potential = *p;
      } else if (at_keyword("declared_risk")) {
        SourcePos rpos = cur().pos;
        next();
        auto r = take_ident("a risk class");
        if (!r) return resync();
        if (*r == "minor") {
          threat.declared_risk = RiskClass::Minor;
        } else if (*r == "major") {
          threat.declared_risk = RiskClass::Major;
        } else if (*r == "critical") {
          threat.declared_risk = RiskClass::Critical;
        } else if (*r == "low") {
          // Not part of the minor/major/critical scheme; normalize it.
          threat.declared_risk = RiskClass::Minor;
          warning("NORMALIZED_RISK_LABEL",
                  "declared risk 'low' normalized to 'minor' for threat '" + threat.id + "'",
                  rpos);
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown risk class '" + *r + "'", pos);
        }
      } else if (at_keyword("countermeasure")) {
        next();
        if (auto c = take_string("a countermeasure string")) {
          threat.countermeasures.push_back(*c);
        } else {
          return resync();
        }
      } else {
        error("UNKNOWN_FIELD",
              "unknown threat field '" + (at(TokKind::Ident) ? cur().text : "?") + "'",
              cur().pos);
        return resync();
      }
    }
    if (!saw_name) error("MISSING_FIELD", "threat '" + threat.id + "' requires 'name'", pos);
    if (!saw_category)
      error("MISSING_FIELD", "threat '" + threat.id + "' requires 'category'", pos);
    if (threat.actions.empty())
      error("MISSING_FIELD", "threat '" + threat.id + "' requires at least one 'action'",
            pos);
    if (!saw_interfaces || threat.interfaces.empty())
      error("MISSING_FIELD", "threat '" + threat.id + "' requires 'interfaces'", pos);
    if (!saw_objective)
      error("MISSING_FIELD", "threat '" + threat.id + "' requires 'objective'", pos);
    if (!saw_impact)
      error("MISSING_FIELD", "threat '" + threat.id + "' requires 'impact'", pos);
    if (expect(TokKind::RBrace, "'}'")) next();
    catalog_.threats.push_back(std::move(threat));
  }

  std::optional<AttackPotential> parse_potential(SourcePos pos) {
    if (!expect(TokKind::LBrace, "'{'")) {
      resync();
      return std::nullopt;
    }
    next();
    AttackPotential p;
    bool saw[5] = {false, false, false, false, false};
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      if (at_keyword("time")) {
        next();
        auto l = take_ident("a time level");
        if (!l) break;
        if (auto level = parse_time_level(*l)) {
          p.time = *level;
          saw[0] = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown time level '" + *l + "'", pos);
        }
      } else if (at_keyword("expertise")) {
        next();
        auto l = take_ident("an expertise level");
        if (!l) break;
        if (auto level = parse_expertise_level(*l)) {
          p.expertise = *level;
          saw[1] = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown expertise level '" + *l + "'", pos);
        }
      } else if (at_keyword("knowledge")) {
        next();
        auto l = take_ident("a knowledge level");
        if (!l) break;
        if (auto level = parse_knowledge_level(*l)) {
          p.knowledge = *level;
          saw[2] = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown knowledge level '" + *l + "'", pos);
        }
      } else if (at_keyword("opportunity")) {
        next();
        auto l = take_ident("an opportunity level");
        if (!l) break;
        if (auto level = parse_opportunity_level(*l)) {
          p.opportunity = *level;
          saw[3] = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown opportunity level '" + *l + "'", pos);
        }
      } else if (at_keyword("equipment")) {
        next();
        auto l = take_ident("an equipment level");
        if (!l) break;
        if (auto level = parse_equipment_level(*l)) {
          p.equipment = *level;
          saw[4] = true;
        } else {
          error("UNKNOWN_ENUM_VALUE", "unknown equipment level '" + *l + "'", pos);
        }
      } else {
        error("UNKNOWN_FIELD", "unknown potential field", cur().pos);
        next();
      }
    }
    static const char* kNames[5] = {"time", "expertise", "knowledge", "opportunity",
                                    "equipment"};
    for (int i = 0; i < 5; ++i) {
      if (!saw[i])
        error("MISSING_FIELD", std::string("potential requires '") + kNames[i] + "'", pos);
    }
    if (expect(TokKind::RBrace, "'}'")) next();
    return p;
  }

  template <size_t N>
  void parse_factor_levels(const char* factor, SourcePos pos,
                           const std::vector<std::string>& level_names,
                           std::array<int, N>& out, bool last_is_infeasible) {
    const size_t total = level_names.size();
    std::vector<bool> seen(total, false);
    for (;;) {
      auto level = take_ident("a factor level");
      if (!level) return;
      auto it = std::find(level_names.begin(), level_names.end(), *level);
      if (it == level_names.end()) {
        error("UNKNOWN_ENUM_VALUE",
              std::string("unknown ") + factor + " level '" + *level + "'", pos);
        return;
      }
      size_t idx = static_cast<size_t>(it - level_names.begin());
      if (seen[idx])
        error("DUPLICATE_FIELD",
              std::string("duplicate ") + factor + " level '" + *level + "'", pos);
      seen[idx] = true;
      if (last_is_infeasible && idx == total - 1) {
        auto word = take_ident("'infeasible'");
        if (!word) return;
        if (*word != "infeasible")
          error("INVALID_FACTOR_VALUE",
                std::string("level '") + *level + "' must map to 'infeasible'", pos);
      } else {
        auto v = take_int("a point value");
        if (!v) return;
        out[idx] = static_cast<int>(*v);
      }
      if (!at(TokKind::Comma)) break;
      next();
    }
    for (size_t i = 0; i < total; ++i) {
      if (!seen[i])
        error("MISSING_FIELD",
              std::string(factor) + " is missing level '" + level_names[i] + "'", pos);
    }
    size_t scored = last_is_infeasible ? total - 1 : total;
    for (size_t i = 0; i + 1 < scored; ++i) {
      if (out[i] >= out[i + 1]) {
        error("NONMONOTONE_FACTOR_POINTS",
              std::string(factor) + " points must strictly increase with level order", pos);
        break;
      }
    }
    if (out[0] < 0)
      error("INVALID_FACTOR_VALUE", std::string(factor) + " points must be non-negative",
            pos);
  }

  void parse_factors() {
    SourcePos pos = cur().pos;
    next();
    if (!expect(TokKind::LBrace, "'{'")) return resync();
    next();
    FactorTable table = default_factor_table();
    bool saw[5] = {false, false, false, false, false};
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      if (at_keyword("time")) {
        SourcePos fpos = cur().pos;
        next();
        parse_factor_levels("time", fpos, {"t1d", "t1w", "t1m", "t3m", "t6m", "more"},
                            table.time, false);
        saw[0] = true;
      } else if (at_keyword("expertise")) {
        SourcePos fpos = cur().pos;
        next();
        parse_factor_levels("expertise", fpos, {"layman", "proficient", "expert", "multiple"},
                            table.expertise, false);
        saw[1] = true;
      } else if (at_keyword("knowledge")) {
        SourcePos fpos = cur().pos;
        next();
        parse_factor_levels("knowledge", fpos,
                            {"public", "restricted", "sensitive", "critical"},
                            table.knowledge, false);
        saw[2] = true;
      } else if (at_keyword("opportunity")) {
        SourcePos fpos = cur().pos;
        next();
        std::array<int, 5> levels{};
        std::copy(table.opportunity.begin(), table.opportunity.end(), levels.begin());
        parse_factor_levels("opportunity", fpos,
                            {"unnecessary", "easy", "moderate", "difficult", "none"}, levels,
                            true);
        std::copy_n(levels.begin(), 4, table.opportunity.begin());
        saw[3] = true;
      } else if (at_keyword("equipment")) {
        SourcePos fpos = cur().pos;
        next();
        parse_factor_levels("equipment", fpos,
                            {"standard", "specialized", "bespoke", "multiple"},
                            table.equipment, false);
        saw[4] = true;
      } else {
        error("UNKNOWN_FIELD", "unknown factor name", cur().pos);
        next();
      }
    }
    static const char* kNames[5] = {"time", "expertise", "knowledge", "opportunity",
                                    "equipment"};
    for (int i = 0; i < 5; ++i) {
      if (!saw[i])
        error("MISSING_FIELD", std::string("factors block requires '") + kNames[i] + "'",
              pos);
    }
    if (expect(TokKind::RBrace, "'}'")) next();
    if (catalog_.factor_table_override)
      error("DUPLICATE_FIELD", "factors block declared more than once", pos);
    catalog_.factor_table_override = table;
  }

  void parse_bands() {
    SourcePos pos = cur().pos;
    next();
    if (!expect(TokKind::LBrace, "'{'")) return resync();
    next();
    std::vector<BandTable::Band> bands;
    while (!at(TokKind::RBrace) && !at(TokKind::End)) {
      auto bound = take_int("a lower point bound");
      if (!bound) return resync();
      auto name = take_ident("a vulnerability rating");
      if (!name) return resync();
      auto rating = parse_rating(*name);
      if (!rating) {
        error("UNKNOWN_ENUM_VALUE", "unknown vulnerability rating '" + *name + "'", pos);
        continue;
      }
      bands.push_back({static_cast<int>(*bound), *rating});
      if (at(TokKind::Comma)) next();
    }
    if (expect(TokKind::RBrace, "'}'")) next();

    if (bands.size() != 5) {
      error("BAND_TABLE_INVALID", "bands block must declare exactly 5 bands", pos);
      return;
    }
    if (bands.front().lower_bound != 0) {
      error("BAND_TABLE_INVALID", "lowest band bound must be 0", pos);
      return;
    }
    for (size_t i = 0; i + 1 < bands.size(); ++i) {
      if (bands[i].lower_bound >= bands[i + 1].lower_bound ||
          static_cast<int>(bands[i].rating) >= static_cast<int>(bands[i + 1].rating)) {
        error("BAND_TABLE_INVALID",
              "band bounds and ratings must strictly increase together", pos);
        return;
      }
    }
    if (catalog_.band_table_override)
      error("DUPLICATE_FIELD", "bands block declared more than once", pos);
    BandTable table;
    std::copy_n(bands.begin(), 5, table.bands.begin());
    catalog_.band_table_override = table;
  }

  std::vector<Token> tokens_;
  size_t index_ = 0;
  std::vector<Diagnostic> diags_;
  Catalog catalog_;
};

}  // namespace

ParseResult parse_catalog(const std::string& source) { return Parser(source).run(); }

}  // namespace tvra
