#include "tvra/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tvra/analysis.hpp"
#include "tvra/catalog.hpp"
#include "tvra/error.hpp"
#include "tvra/report.hpp"

namespace tvra::cli {
namespace {

const char* kUsage =
    "usage: tvra <command> [options]\n"
    "\n"
    "commands:\n"
    "  validate <file>                         check a catalog, print diagnostics\n"
    "  assess <file> [--format text|json|csv] [--strict]\n"
    "                                          run the full risk assessment\n"
    "  matrix <file>                           print the risk matrix\n"
    "  plan <file>                             print the countermeasure plan\n"
    "  exposure <file> [--interface <ID>]      per-interface threat exposure\n"
    "  diff <fileA> <fileB>                    compare two catalogs\n"
    "  builtin                                 print the embedded catalog\n";

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

// Parse + validate; prints diagnostics to err. Empty optional means errors.
std::optional<Catalog> load_catalog(const std::string& path, std::ostream& err) {
  auto source = read_file(path);
  if (!source) {
    err << path << ": error [FILE_NOT_FOUND] cannot read file\n";
    return std::nullopt;
  }
  ParseResult parsed = parse_catalog(*source);
  for (const auto& d : parsed.diagnostics) {
    err << path << ":" << format_diagnostic(d) << "\n";
  }
  if (!parsed.ok()) return std::nullopt;

  auto diags = validate_model(*parsed.catalog);
  for (const auto& d : diags) {
    err << path << ":" << format_diagnostic(d) << "\n";
  }
  if (has_errors(diags)) return std::nullopt;
  return std::move(parsed.catalog);
}

struct Options {
  std::string format = "text";
  bool strict = false;
  std::optional<std::string> interface_id;
  std::vector<std::string> positional;
};

// Returns false on a usage problem (message already printed).
bool parse_options(const std::vector<std::string>& args, size_t start, Options& opts,
                   std::ostream& err) {
  for (size_t i = start; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--strict") {
      opts.strict = true;
    } else if (a == "--format") {
      if (i + 1 >= args.size()) {
        err << "missing value for --format\n";
        return false;
      }
      opts.format = args[++i];
      if (opts.format != "text" && opts.format != "json" && opts.format != "csv") {
        err << "unknown format '" << opts.format << "'\n";
        return false;
      }
    } else if (a == "--interface") {
      if (i + 1 >= args.size()) {
        err << "missing value for --interface\n";
        return false;
      }
      opts.interface_id = args[++i];
    } else if (a.rfind("--", 0) == 0) {
      err << "unknown flag '" << a << "'\n";
      return false;
    } else {
      opts.positional.push_back(a);
    }
  }
  return true;
}

int run_assess(const Catalog& catalog, const Options& opts, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> warnings;
  auto assessments = assess_catalog(catalog, &warnings);
  auto matrix = build_matrix(assessments);
  auto plan = countermeasure_plan(catalog, assessments, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";

  if (opts.format == "json") {
    out << emit_structured(catalog, assessments, matrix, plan, ReportFormat::Json);
  } else if (opts.format == "csv") {
    out << emit_structured(catalog, assessments, matrix, plan, ReportFormat::Csv);
  } else {
    out << render_assessment_table(catalog, assessments) << "\n" << render_text(matrix);
  }

  if (opts.strict) {
    auto discrepancies = consistency_check(assessments);
    if (!discrepancies.empty()) {
      for (const auto& d : discrepancies) {
        err << "discrepancy: " << d.threat_id << " declared " << to_string(d.declared)
            << " but computed " << to_string(d.computed) << "\n";
      }
      return kExitStrict;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  const std::string& command = args[0];

  try {
    if (command == "builtin") {
      if (args.size() != 1) {
        err << kUsage;
        return kExitUsage;
      }
      out << builtin_catalog_source();
      return kExitOk;
    }

    Options opts;
    if (!parse_options(args, 1, opts, err)) return kExitUsage;

    if (command == "validate") {
      if (opts.positional.size() != 1) {
        err << kUsage;
        return kExitUsage;
      }
      return load_catalog(opts.positional[0], err) ? kExitOk : kExitValidation;
    }

    if (command == "assess") {
      if (opts.positional.size() != 1) {
        err << kUsage;
        return kExitUsage;
      }
      auto catalog = load_catalog(opts.positional[0], err);
      if (!catalog) return kExitValidation;
      return run_assess(*catalog, opts, out, err);
    }

    if (command == "matrix") {
      if (opts.positional.size() != 1) {
        err << kUsage;
        return kExitUsage;
      }
      auto catalog = load_catalog(opts.positional[0], err);
      if (!catalog) return kExitValidation;
      std::vector<std::string> warnings;
      auto assessments = assess_catalog(*catalog, &warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      out << render_text(build_matrix(assessments));
      return kExitOk;
    }

    if (command == "plan") {
      if (opts.positional.size() != 1) {
        err << kUsage;
        return kExitUsage;
      }
      auto catalog = load_catalog(opts.positional[0], err);
      if (!catalog) return kExitValidation;
      std::vector<std::string> warnings;
      auto assessments = assess_catalog(*catalog, &warnings);
      auto plan = countermeasure_plan(*catalog, assessments, &warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      out << render_plan(plan);
      return kExitOk;
    }

    if (command == "exposure") {
      if (opts.positional.size() != 1) {
        err << kUsage;
        return kExitUsage;
      }
      auto catalog = load_catalog(opts.positional[0], err);
      if (!catalog) return kExitValidation;
      auto assessments = assess_catalog(*catalog);
      auto report = exposure_by_interface(*catalog, assessments);
      if (opts.interface_id) {
        const InterfaceExposure* entry = report.find(*opts.interface_id);
        if (!entry) {
          err << "error [UNKNOWN_INTERFACE] interface '" << *opts.interface_id
              << "' is not declared in the catalog\n";
          return kExitValidation;
        }
        ExposureReport single;
        single.entries.push_back(*entry);
        out << render_exposure(single);
      } else {
        out << render_exposure(report);
      }
      return kExitOk;
    }

    if (command == "diff") {
      if (opts.positional.size() != 2) {
        err << kUsage;
        return kExitUsage;
      }
      auto a = load_catalog(opts.positional[0], err);
      if (!a) return kExitValidation;
      auto b = load_catalog(opts.positional[1], err);
      if (!b) return kExitValidation;
      out << render_changeset(diff_catalogs(*a, *b));
      return kExitOk;
    }

    err << "unknown command '" << command << "'\n" << kUsage;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace tvra::cli
