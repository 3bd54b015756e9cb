#pragma once

#include <array>
#include <string>
#include <vector>

#include "tvra/analysis.hpp"

namespace tvra {

// 3x3 likelihood x impact grid. Cells partition the assessed threats;
// unassessed threats never enter the matrix.
struct RiskMatrix {
  struct Cell {
    int risk_value = 0;
    RiskClass risk_class = RiskClass::Minor;
    std::vector<std::string> threat_ids;  // sorted
    bool operator==(const Cell&) const = default;
  };

  // cells[l-1][i-1] for likelihood l, impact i in 1..3.
  std::array<std::array<Cell, 3>, 3> cells{};

  const Cell& at(int likelihood, int impact) const {
    return cells[likelihood - 1][impact - 1];
  }
};

RiskMatrix build_matrix(const std::vector<Assessment>& a);

// Fixed-width text grid: impact columns Low..High left to right, likelihood
// rows Likely..Unlikely top to bottom, each cell a class letter and count,
// legend below. Stable byte output.
std::string render_text(const RiskMatrix& m);

enum class ReportFormat { Json, Csv };

// Machine-readable results. JSON: one document with sorted keys and
// `assessments`, `matrix`, `plan` arrays. CSV: assessments only, rows sorted
// by threat id, RFC 4180 quoting; unassessed threats appear with empty
// numeric fields. Throws Error(UNSUPPORTED_FORMAT) for other format values.
std::string emit_structured(const Catalog& c, const std::vector<Assessment>& a,
                            const RiskMatrix& m, const CountermeasurePlan& plan,
                            ReportFormat format);

// The per-threat table printed by `assess` in text mode.
std::string render_assessment_table(const Catalog& c, const std::vector<Assessment>& a);

std::string render_exposure(const ExposureReport& report);
std::string render_plan(const CountermeasurePlan& plan);

}  // namespace tvra
