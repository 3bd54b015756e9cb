#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "tvra/catalog.hpp"
#include "tvra/cli.hpp"

using namespace tvra;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult result;
  result.status = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("tvra-cli-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) {
    fs::path file = path_ / name;
    std::ofstream(file, std::ios::binary) << content;
    return file.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("validate reports diagnostics on stderr and nothing on stdout") {
  TempDir dir;
  std::string good = dir.write("good.tvra", builtin_catalog_source());

  RunResult ok = run_cli({"validate", good});
  CHECK(ok.status == cli::kExitOk);
  CHECK(ok.out.empty());
  // the shipped catalog normalizes repudiation's label with a warning
  CHECK(ok.err.find("NORMALIZED_RISK_LABEL") != std::string::npos);

  RunResult missing = run_cli({"validate", "nonexistent.tvra"});
  CHECK(missing.status == cli::kExitValidation);
  CHECK(missing.err.find("FILE_NOT_FOUND") != std::string::npos);

  std::string dangling = dir.write("dangling.tvra",
                                   "catalog \"bad\" version 1\n"
                                   "interface A { description \"a\" }\n"
                                   "threat t {\n"
                                   "  name \"t\"\n  category data\n  action \"x\"\n"
                                   "  interfaces Q\n  objective \"o\"\n  impact low\n}\n");
  RunResult bad = run_cli({"validate", dangling});
  CHECK(bad.status == cli::kExitValidation);
  CHECK(bad.err.find("UNRESOLVED_INTERFACE") != std::string::npos);
}

TEST_CASE("assess emits csv with one row per threat") {
  TempDir dir;
  std::string file = dir.write("catalog.tvra", builtin_catalog_source());
  RunResult result = run_cli({"assess", file, "--format", "csv"});
  CHECK(result.status == cli::kExitOk);
  int lines = 0;
  for (char c : result.out) lines += c == '\n';
  CHECK(lines == 21);  // header + 20 threats
  CHECK(result.out.rfind("threat_id,", 0) == 0);
  // warnings about the two unassessed threats go to stderr, not stdout
  CHECK(result.err.find("location-tracking") != std::string::npos);
  CHECK(result.out.find("warning") == std::string::npos);
}

TEST_CASE("strict mode pins the declared classes") {
  TempDir dir;
  std::string file = dir.write("catalog.tvra", builtin_catalog_source());
  CHECK(run_cli({"assess", file, "--strict"}).status == cli::kExitOk);

  // flip one declared class: strict now exits 3
  std::string source = builtin_catalog_source();
  size_t at = source.find("declared_risk critical");
  REQUIRE(at != std::string::npos);
  std::string broken = source.substr(0, at) + "declared_risk major" + source.substr(at + 22);
  std::string broken_file = dir.write("broken.tvra", broken);
  RunResult strict = run_cli({"assess", broken_file, "--strict"});
  CHECK(strict.status == cli::kExitStrict);
  CHECK(strict.err.find("discrepancy") != std::string::npos);

  // without --strict the same catalog still assesses fine
  CHECK(run_cli({"assess", broken_file}).status == cli::kExitOk);
}

TEST_CASE("usage problems exit 2") {
  CHECK(run_cli({}).status == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).status == cli::kExitUsage);
  CHECK(run_cli({"assess"}).status == cli::kExitUsage);
  CHECK(run_cli({"assess", "a.tvra", "--format", "yaml"}).status == cli::kExitUsage);
  CHECK(run_cli({"assess", "a.tvra", "--unknown"}).status == cli::kExitUsage);
  CHECK(run_cli({"diff", "only-one.tvra"}).status == cli::kExitUsage);
  RunResult usage = run_cli({"frobnicate"});
  CHECK(usage.err.find("usage:") != std::string::npos);
  CHECK(usage.out.empty());
}

TEST_CASE("read-only subcommands are byte idempotent") {
  TempDir dir;
  std::string file = dir.write("catalog.tvra", builtin_catalog_source());
  for (const char* format : {"text", "json", "csv"}) {
    RunResult first = run_cli({"assess", file, "--format", format});
    RunResult second = run_cli({"assess", file, "--format", format});
    CHECK(first.status == cli::kExitOk);
    CHECK(first.out == second.out);
  }
  CHECK(run_cli({"matrix", file}).out == run_cli({"matrix", file}).out);
  CHECK(run_cli({"plan", file}).out == run_cli({"plan", file}).out);
  CHECK(run_cli({"exposure", file}).out == run_cli({"exposure", file}).out);
}

TEST_CASE("builtin writes the embedded catalog to stdout") {
  RunResult result = run_cli({"builtin"});
  CHECK(result.status == cli::kExitOk);
  CHECK(result.out == builtin_catalog_source());
  CHECK(result.err.empty());
}

TEST_CASE("matrix, plan and exposure render reports") {
  TempDir dir;
  std::string file = dir.write("catalog.tvra", builtin_catalog_source());

  RunResult matrix = run_cli({"matrix", file});
  CHECK(matrix.status == cli::kExitOk);
  CHECK(matrix.out.find("lhd \\ impact") != std::string::npos);

  RunResult plan = run_cli({"plan", file});
  CHECK(plan.status == cli::kExitOk);
  CHECK(plan.out.find("[critical] backdoor") != std::string::npos);
  CHECK(plan.out.find("Auditing and Logging.") != std::string::npos);

  RunResult exposure = run_cli({"exposure", file});
  CHECK(exposure.status == cli::kExitOk);
  CHECK(exposure.out.find("A[*]") != std::string::npos);

  RunResult family = run_cli({"exposure", file, "--interface", "A[*]"});
  CHECK(family.status == cli::kExitOk);
  CHECK(family.out.find("phishing") != std::string::npos);
  CHECK(family.out.find("eavesdropping") == std::string::npos);

  RunResult unknown = run_cli({"exposure", file, "--interface", "Z"});
  CHECK(unknown.status == cli::kExitValidation);
  CHECK(unknown.err.find("UNKNOWN_INTERFACE") != std::string::npos);
}

TEST_CASE("diff prints the changeset") {
  TempDir dir;
  std::string a = dir.write("a.tvra", builtin_catalog_source());

  RunResult same = run_cli({"diff", a, a});
  CHECK(same.status == cli::kExitOk);
  CHECK(same.out == "no differences\n");

  Catalog modified = load_builtin_catalog();
  for (auto& t : modified.threats) {
    if (t.id == "replay") t.impact = Impact::Medium;
  }
  std::string b = dir.write("b.tvra", serialize_catalog(modified));
  RunResult changed = run_cli({"diff", a, b});
  CHECK(changed.status == cli::kExitOk);
  CHECK(changed.out.find("~ threat replay") != std::string::npos);
  CHECK(changed.out.find("impact: high -> medium") != std::string::npos);
}
