#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "support/generators.hpp"
#include "tvra/catalog.hpp"

using namespace tvra;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int count_code(const std::vector<Diagnostic>& diags, const std::string& code) {
  return static_cast<int>(std::count_if(
      diags.begin(), diags.end(), [&](const Diagnostic& d) { return d.code == code; }));
}

}  // namespace

TEST_CASE("shipped catalog parses with the expected shape") {
  ParseResult result = parse_catalog(read_file(TVRA_DATA_FILE));
  REQUIRE(result.ok());
  const Catalog& c = *result.catalog;

  CHECK(c.threats.size() == 20);  // 18 with declared risk + 2 without
  CHECK(c.interfaces.size() == 4);
  CHECK(c.find_interface("A", false) != nullptr);
  CHECK(c.find_interface("A", true) != nullptr);
  CHECK(c.find_interface("B", false) != nullptr);
  CHECK(c.find_interface("E", false) != nullptr);
  CHECK(c.assumptions.size() == 4);

  int declared = 0;
  bool data = false, logical = false, human = false;
  for (const auto& t : c.threats) {
    if (t.declared_risk) ++declared;
    data |= t.category == ThreatCategory::Data;
    logical |= t.category == ThreatCategory::Logical;
    human |= t.category == ThreatCategory::Human;
  }
  CHECK(declared == 18);
  CHECK(data);
  CHECK(logical);
  CHECK(human);

  // repudiation ships the out-of-scheme "low" label; it normalizes with a warning
  CHECK(count_code(result.diagnostics, "NORMALIZED_RISK_LABEL") == 1);
  CHECK(c.find_threat("repudiation")->declared_risk == RiskClass::Minor);
}

TEST_CASE("builtin catalog equals the shipped file") {
  CHECK(builtin_catalog_source() == read_file(TVRA_DATA_FILE));
  Catalog embedded = load_builtin_catalog();
  ParseResult from_file = parse_catalog(read_file(TVRA_DATA_FILE));
  REQUIRE(from_file.ok());
  CHECK(embedded == *from_file.catalog);
}

TEST_CASE("builtin catalog carries the table rows") {
  Catalog c = load_builtin_catalog();

  const Threat* replay = c.find_threat("replay");
  REQUIRE(replay != nullptr);
  REQUIRE(replay->interfaces.size() == 2);
  CHECK(replay->interfaces[0].display() == "A");
  CHECK(replay->interfaces[1].display() == "B");
  bool session_token = std::any_of(
      replay->countermeasures.begin(), replay->countermeasures.end(),
      [](const std::string& s) { return s.find("session token") != std::string::npos; });
  CHECK(session_token);

  const Threat* timing = c.find_threat("timing");
  REQUIRE(timing != nullptr);
  REQUIRE(timing->interfaces.size() == 3);
  CHECK(timing->interfaces[0].display() == "A");
  CHECK(timing->interfaces[1].display() == "B");
  CHECK(timing->interfaces[2].display() == "B@E");

  const Threat* phishing = c.find_threat("phishing");
  REQUIRE(phishing != nullptr);
  CHECK(phishing->category == ThreatCategory::Human);
  CHECK(phishing->mentions("A[*]"));

  // the four denial-of-service threats keep their table grouping
  for (const char* id : {"dos-flooding", "dos-spamming", "dos-blackhole", "dos-jamming"}) {
    const Threat* t = c.find_threat(id);
    REQUIRE(t != nullptr);
    CHECK(t->group == "dos");
  }

  // threats without a countermeasure-table row ship without a declared class
  CHECK_FALSE(c.find_threat("location-tracking")->declared_risk.has_value());
  CHECK_FALSE(c.find_threat("rf-fingerprinting")->declared_risk.has_value());
  CHECK_FALSE(c.find_threat("location-tracking")->potential.has_value());
}

TEST_CASE("empty source yields EMPTY_SOURCE") {
  ParseResult result = parse_catalog("");
  CHECK_FALSE(result.ok());
  REQUIRE(result.diagnostics.size() == 1);
  CHECK(result.diagnostics[0].code == "EMPTY_SOURCE");

  ParseResult comment_only = parse_catalog("# nothing here\n");
  CHECK_FALSE(comment_only.ok());
  CHECK(count_code(comment_only.diagnostics, "EMPTY_SOURCE") == 1);
}

TEST_CASE("missing category is reported at the block's line") {
  std::string source =
      "catalog \"t\" version 1\n"
      "interface A { description \"a\" }\n"
      "\n"
      "threat nameless {\n"
      "  name \"x\"\n"
      "  action \"y\"\n"
      "  interfaces A\n"
      "  objective \"z\"\n"
      "  impact low\n"
      "}\n";
  ParseResult result = parse_catalog(source);
  CHECK_FALSE(result.ok());
  REQUIRE(count_code(result.diagnostics, "MISSING_FIELD") == 1);
  for (const auto& d : result.diagnostics) {
    if (d.code == "MISSING_FIELD") CHECK(d.line == 4);
  }
}

TEST_CASE("parser recovers at block boundaries") {
  std::string source =
      "catalog \"t\" version 1\n"
      "interface A { description \"a\" }\n"
      "entity car { kind wheelbarrow label \"x\" }\n"   // bad enum
      "entity cart { kind vehicle }\n"                  // missing label
      "threat b { name \"n\" }\n"                       // missing most fields
      "entity hub { kind rsu label \"ok\" }\n";
  ParseResult result = parse_catalog(source);
  CHECK_FALSE(result.ok());
  CHECK(result.diagnostics.size() >= 3);
  // the parser kept going: the last entity is fine and produced no diagnostic
  for (const auto& d : result.diagnostics) CHECK(d.line != 6);
}

TEST_CASE("version and name are checked") {
  CHECK(count_code(parse_catalog("catalog \"x\" version 0\n").diagnostics,
                   "INVALID_VERSION") == 1);
  CHECK(count_code(parse_catalog("catalog \"\" version 1\n").diagnostics, "EMPTY_NAME") == 1);
  CHECK(count_code(parse_catalog("catalog \"x\"\n").diagnostics, "MISSING_FIELD") == 1);
  CHECK(count_code(parse_catalog("catalog \"x\" version 99999999999999999999\n").diagnostics,
                   "INVALID_NUMBER") == 1);
}

TEST_CASE("string escapes survive a round trip") {
  Catalog c;
  c.name = "quote \" and backslash \\ here";
  c.version = 1;
  std::string text = serialize_catalog(c);
  ParseResult result = parse_catalog(text);
  REQUIRE(result.ok());
  CHECK(result.catalog->name == c.name);

  CHECK(count_code(parse_catalog("catalog \"bad \\q escape\" version 1\n").diagnostics,
                   "INVALID_ESCAPE") == 1);
  CHECK(count_code(parse_catalog("catalog \"no end\n").diagnostics,
                   "UNTERMINATED_STRING") == 1);
}

TEST_CASE("serialization is canonical and idempotent on the shipped catalog") {
  ParseResult first = parse_catalog(read_file(TVRA_DATA_FILE));
  REQUIRE(first.ok());
  std::string once = serialize_catalog(*first.catalog);
  ParseResult second = parse_catalog(once);
  REQUIRE(second.ok());
  CHECK(*second.catalog == *first.catalog);
  std::string twice = serialize_catalog(*second.catalog);
  CHECK(once == twice);

  // canonical block order: interfaces sorted by designation
  size_t a_plain = once.find("interface A {");
  size_t b_pos = once.find("interface B {");
  size_t e_pos = once.find("interface E {");
  CHECK(a_plain != std::string::npos);
  CHECK(a_plain < b_pos);
  CHECK(b_pos < e_pos);
}

TEST_CASE("round trip holds for generated catalogs") {
  testing::Rng rng(2024);
  for (int i = 0; i < 150; ++i) {
    Catalog c = testing::random_catalog(rng);
    std::string text = serialize_catalog(c);
    ParseResult result = parse_catalog(text);
    REQUIRE(result.ok());
    CHECK(*result.catalog == c);
  }
}

TEST_CASE("parsing the same bytes twice is deterministic") {
  std::string text = builtin_catalog_source();
  ParseResult a = parse_catalog(text);
  ParseResult b = parse_catalog(text);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(*a.catalog == *b.catalog);
  CHECK(a.diagnostics.size() == b.diagnostics.size());
}

TEST_CASE("factor and band overrides parse and validate") {
  std::string source =
      "catalog \"o\" version 1\n"
      "factors {\n"
      "  time t1d 0, t1w 2, t1m 5, t3m 11, t6m 18, more 20\n"
      "  expertise layman 0, proficient 2, expert 5, multiple 7\n"
      "  knowledge public 0, restricted 2, sensitive 6, critical 10\n"
      "  opportunity unnecessary 0, easy 2, moderate 5, difficult 11, none infeasible\n"
      "  equipment standard 0, specialized 3, bespoke 6, multiple 8\n"
      "}\n"
      "bands {\n"
      "  0 no-rating\n"
      "  9 basic\n"
      "  13 moderate\n"
      "  19 high\n"
      "  24 beyond-high\n"
      "}\n";
  ParseResult result = parse_catalog(source);
  REQUIRE(result.ok());
  REQUIRE(result.catalog->factor_table_override.has_value());
  CHECK(result.catalog->factor_table_override->time[1] == 2);
  REQUIRE(result.catalog->band_table_override.has_value());
  CHECK(result.catalog->band_table_override->bands[1].lower_bound == 9);

  std::string bad_factor = source;
  bad_factor.replace(bad_factor.find("t1w 2"), 5, "t1w 0");
  CHECK(count_code(parse_catalog(bad_factor).diagnostics, "NONMONOTONE_FACTOR_POINTS") == 1);

  std::string bad_band = source;
  bad_band.replace(bad_band.find("9 basic"), 7, "0 basic");
  CHECK(count_code(parse_catalog(bad_band).diagnostics, "BAND_TABLE_INVALID") == 1);
}

TEST_CASE("parser survives mutated and garbage input") {
  testing::Rng rng(9001);
  const std::string base = builtin_catalog_source();

  for (int iter = 0; iter < 200; ++iter) {
    std::string mutated = base;
    int edits = testing::pick(rng, 1, 6);
    for (int e = 0; e < edits; ++e) {
      if (mutated.empty()) break;
      size_t at = static_cast<size_t>(testing::pick(rng, 0, static_cast<int>(mutated.size()) - 1));
      switch (testing::pick(rng, 0, 3)) {
        case 0: mutated[at] = static_cast<char>(testing::pick(rng, 32, 126)); break;
        case 1: mutated.erase(at, testing::pick(rng, 1, 40)); break;
        case 2: mutated.insert(at, "{"); break;
        case 3: mutated.resize(at); break;
      }
    }
    ParseResult result = parse_catalog(mutated);  // must terminate, never throw
    if (!result.ok()) CHECK_FALSE(result.diagnostics.empty());
  }

  for (int iter = 0; iter < 100; ++iter) {
    std::string garbage;
    int len = testing::pick(rng, 0, 200);
    for (int i = 0; i < len; ++i) garbage += static_cast<char>(testing::pick(rng, 1, 255));
    ParseResult result = parse_catalog(garbage);
    CHECK_FALSE(result.ok());
  }
}

TEST_CASE("diff reports removals, modifications and countermeasure changes") {
  Catalog a = load_builtin_catalog();
  CHECK(diff_catalogs(a, a).empty());

  Catalog b = a;
  b.threats.erase(std::remove_if(b.threats.begin(), b.threats.end(),
                                 [](const Threat& t) { return t.id == "sybil"; }),
                  b.threats.end());
  ChangeSet removed = diff_catalogs(a, b);
  REQUIRE(removed.removed_threats.size() == 1);
  CHECK(removed.removed_threats[0] == "sybil");
  CHECK(removed.added_threats.empty());

  Catalog m = a;
  for (auto& t : m.threats) {
    if (t.id == "replay") t.impact = Impact::Medium;
  }
  ChangeSet modified = diff_catalogs(a, m);
  REQUIRE(modified.modified_threats.size() == 1);
  CHECK(modified.modified_threats[0].id == "replay");
  REQUIRE(modified.modified_threats[0].deltas.size() == 1);
  CHECK(modified.modified_threats[0].deltas[0].field == "impact");
  CHECK(modified.modified_threats[0].deltas[0].before == "high");
  CHECK(modified.modified_threats[0].deltas[0].after == "medium");

  Catalog cm = a;
  for (auto& t : cm.threats) {
    if (t.id == "replay") t.countermeasures.push_back("Rotate session tokens hourly.");
  }
  ChangeSet cs = diff_catalogs(a, cm);
  REQUIRE(cs.added_countermeasures.size() == 1);
  CHECK(cs.added_countermeasures[0] == "replay: Rotate session tokens hourly.");
}
