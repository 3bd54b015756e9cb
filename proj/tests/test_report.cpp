#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "support/csv_reader.hpp"
#include "support/generators.hpp"
#include "tvra/report.hpp"

using namespace tvra;

TEST_CASE("matrix places the shipped threats by likelihood and impact") {
  Catalog c = load_builtin_catalog();
  auto assessments = assess_catalog(c);
  RiskMatrix m = build_matrix(assessments);

  CHECK(m.at(2, 2).threat_ids ==
        std::vector<std::string>{"dos-flooding", "dos-spamming", "eavesdropping",
                                 "masquerade", "message-injection", "message-suppression"});
  CHECK(m.at(3, 3).threat_ids ==
        std::vector<std::string>{"dos-jamming", "intrusion", "phishing", "replay",
                                 "spoofing"});
  CHECK(m.at(2, 3).threat_ids ==
        std::vector<std::string>{"backdoor", "dos-blackhole", "illusion", "malware", "sybil",
                                 "timing"});
  CHECK(m.at(3, 1).threat_ids == std::vector<std::string>{"repudiation"});
  CHECK(m.at(1, 1).threat_ids.empty());
  CHECK(m.at(2, 2).risk_class == RiskClass::Major);
  CHECK(m.at(2, 3).risk_class == RiskClass::Critical);
}

TEST_CASE("matrix of no assessments is empty, one assessment fills one cell") {
  RiskMatrix empty = build_matrix({});
  for (int l = 1; l <= 3; ++l) {
    for (int i = 1; i <= 3; ++i) {
      CHECK(empty.at(l, i).threat_ids.empty());
      CHECK(empty.at(l, i).risk_value == l * i);
    }
  }

  Assessment a;
  a.threat_id = "solo";
  a.likelihood = Likelihood::Likely;
  a.impact = Impact::High;
  a.risk_value = 9;
  a.risk_class = RiskClass::Critical;
  RiskMatrix one = build_matrix({a});
  CHECK(one.at(3, 3).threat_ids == std::vector<std::string>{"solo"});
  CHECK(one.at(3, 3).risk_class == RiskClass::Critical);
  int filled = 0;
  for (int l = 1; l <= 3; ++l) {
    for (int i = 1; i <= 3; ++i) filled += !one.at(l, i).threat_ids.empty();
  }
  CHECK(filled == 1);
}

TEST_CASE("matrix cells partition random assessment sets") {
  testing::Rng rng(77);
  for (int iter = 0; iter < 120; ++iter) {
    auto assessments = testing::random_assessments(rng, testing::pick(rng, 0, 100));
    RiskMatrix m = build_matrix(assessments);

    std::set<std::string> seen;
    size_t total = 0;
    for (int l = 1; l <= 3; ++l) {
      for (int i = 1; i <= 3; ++i) {
        const auto& cell = m.at(l, i);
        CHECK(cell.risk_value == l * i);
        total += cell.threat_ids.size();
        for (const auto& id : cell.threat_ids) {
          CHECK(seen.insert(id).second);  // disjoint cells
        }
      }
    }
    CHECK(total == assessments.size());
    for (const auto& as : assessments) CHECK(seen.count(as.threat_id) == 1);
  }
}

TEST_CASE("matrix text rendering is stable and fits the page") {
  Catalog c = load_builtin_catalog();
  RiskMatrix m = build_matrix(assess_catalog(c));
  std::string text = render_text(m);
  CHECK(text == render_text(m));

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(line.size() <= 80);
  }
  // the critical census: 5 + 6 threats sit in the high-impact column cells
  CHECK(text.find("C 5") != std::string::npos);
  CHECK(text.find("C 6") != std::string::npos);

  RiskMatrix empty = build_matrix({});
  std::string zero = render_text(empty);
  CHECK(zero.find("m 0") != std::string::npos);
  CHECK(zero.find("C 0") != std::string::npos);
}

TEST_CASE("csv carries every catalog threat with rfc quoting") {
  Catalog c = load_builtin_catalog();
  auto assessments = assess_catalog(c);
  auto matrix = build_matrix(assessments);
  auto plan = countermeasure_plan(c, assessments);
  std::string csv = emit_structured(c, assessments, matrix, plan, ReportFormat::Csv);

  auto rows = testing::read_csv(csv);
  REQUIRE(rows.size() == 21);  // header + 20 threats
  CHECK(rows[0] == std::vector<std::string>{"threat_id", "category", "points", "rating",
                                            "likelihood", "impact", "risk_value",
                                            "risk_class", "declared_risk", "discrepancy"});

  // rows sorted by threat id
  for (size_t i = 2; i < rows.size(); ++i) CHECK(rows[i - 1][0] < rows[i][0]);

  // unassessed threats keep their identity but carry empty numeric fields
  int unassessed = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    REQUIRE(row.size() == 10);
    if (row[7] == "unassessed") {
      ++unassessed;
      CHECK(row[2].empty());
      CHECK(row[4].empty());
      CHECK(row[5].empty());
      CHECK(row[6].empty());
    }
  }
  CHECK(unassessed == 2);

  // re-parse recovers the assessed triples exactly
  std::map<std::string, std::pair<int, std::string>> from_csv;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][6].empty()) continue;
    from_csv[rows[i][0]] = {std::stoi(rows[i][6]), rows[i][7]};
  }
  CHECK(from_csv.size() == assessments.size());
  for (const auto& as : assessments) {
    auto it = from_csv.find(as.threat_id);
    REQUIRE(it != from_csv.end());
    CHECK(it->second.first == as.risk_value);
    CHECK(it->second.second == to_string(as.risk_class));
  }
}

TEST_CASE("quoted csv fields round-trip through the reader") {
  auto rows = testing::read_csv("a,\"b,with comma\",\"double\"\"quote\"\nplain,2,3\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == "b,with comma");
  CHECK(rows[0][2] == "double\"quote");
  CHECK(rows[1][0] == "plain");
}

TEST_CASE("json document carries three arrays with sorted keys") {
  Catalog c = load_builtin_catalog();
  auto assessments = assess_catalog(c);
  auto matrix = build_matrix(assessments);
  auto plan = countermeasure_plan(c, assessments);

  std::string once = emit_structured(c, assessments, matrix, plan, ReportFormat::Json);
  std::string twice = emit_structured(c, assessments, matrix, plan, ReportFormat::Json);
  CHECK(once == twice);

  auto doc = nlohmann::json::parse(once);
  CHECK(doc["assessments"].size() == 20);
  CHECK(doc["matrix"].size() == 4);  // the four occupied cells
  CHECK(doc["plan"].size() == 18);
  CHECK(doc["assessments"][0]["threat_id"] == "backdoor");

  Catalog empty;
  empty.name = "empty";
  auto empty_doc = nlohmann::json::parse(
      emit_structured(empty, {}, build_matrix({}), {}, ReportFormat::Json));
  CHECK(empty_doc["assessments"].empty());
  CHECK(empty_doc["matrix"].empty());
  CHECK(empty_doc["plan"].empty());
  CHECK(empty_doc.size() == 3);
}
