#pragma once

#include <string>
#include <vector>

namespace tvra {

enum class Severity { Error, Warning };

// Position inside a catalog source text, 1-based.
struct SourcePos {
  int line = 1;
  int column = 1;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  int line = 1;
  int column = 1;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

std::string format_diagnostic(const Diagnostic& d);

}  // namespace tvra
