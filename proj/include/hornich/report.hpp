#pragma once

#include <iosfwd>
#include <string>

#include "hornich/regions.hpp"

namespace hornich {

enum class ReportFormat { Json, Csv, Pgm };

ReportFormat parse_format(std::string_view name);  // throws BadParam

// Full report including per-pair verdicts and witnesses.
std::string to_json(const ScanReport& report);
// Columns alpha,beta,verdict,margin; one row per cell in row-major order.
std::string to_csv(const ScanReport& report);
// P2 grayscale, 0 = Fail, 128 = Indeterminate, 255 = Pass; the top row is beta_max.
std::string to_pgm(const ScanReport& report);
// Grid geometry written next to a heatmap.
std::string pgm_sidecar(const ScanReport& report);

// Writes `report` to `path`; the pgm format also writes `path + ".txt"`.
void write_report(const ScanReport& report, ReportFormat format, const std::string& path);

}  // namespace hornich
