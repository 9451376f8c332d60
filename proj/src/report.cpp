#include "hornich/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hornich/error.hpp"

namespace hornich {
namespace {

using nlohmann::ordered_json;

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["outcome"] = to_string(v.outcome);
  j["margin"] = v.margin;
  if (v.witness) {
    j["witness"] = {{"r", v.witness->r},
                    {"theta", v.witness->theta},
                    {"theta_end", v.witness->theta_end},
                    {"value", v.witness->value}};
  }
  return j;
}

int gray(Outcome o) {
  switch (o) {
    case Outcome::Pass: return 255;
    case Outcome::Indeterminate: return 128;
    case Outcome::Fail: return 0;
  }
  return 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParam, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::BadParam, "write to '" + path + "' failed");
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "pgm") return ReportFormat::Pgm;
  throw Error(ErrorCode::BadParam, "unknown format '" + std::string(name) + "'");
}

std::string to_json(const ScanReport& report) {
  ordered_json j;
  j["kind"] = to_string(report.kind);
  j["theorem"] = report.theorem_id;
  j["statement"] = report.statement;
  j["target"] = to_string(report.target);
  j["lambda"] = report.lambda;
  j["gamma"] = report.gamma;
  j["seed"] = report.seed;
  j["grid"] = {{"alpha_min", report.grid.alpha_min}, {"alpha_max", report.grid.alpha_max},
               {"beta_min", report.grid.beta_min},   {"beta_max", report.grid.beta_max},
               {"step", report.grid.step},           {"n_alpha", report.grid.n_alpha()},
               {"n_beta", report.grid.n_beta()}};
  j["band"] = report.band;
  j["profile"] = {{"radii", report.profile.radii},
                  {"sharp_radii", report.profile.sharp_radii},
                  {"M", report.profile.M},
                  {"eps", report.profile.eps},
                  {"band", report.profile.band}};
  j["pairs"] = report.pair_names;
  j["redundant_constraints"] = report.redundant;
  j["mismatch_count"] = report.mismatches.size();
  ordered_json mismatches = ordered_json::array();
  for (std::size_t k : report.mismatches) {
    mismatches.push_back({report.cells[k].alpha, report.cells[k].beta});
  }
  j["mismatches"] = std::move(mismatches);
  ordered_json cells = ordered_json::array();
  for (const CellResult& c : report.cells) {
    ordered_json cell;
    cell["alpha"] = c.alpha;
    cell["beta"] = c.beta;
    cell["distance"] = c.distance;
    cell["audited"] = c.audited;
    cell["mismatch"] = c.mismatch;
    cell["verdict"] = verdict_json(c.combined);
    ordered_json pairs = ordered_json::array();
    for (const Verdict& v : c.per_pair) pairs.push_back(verdict_json(v));
    cell["per_pair"] = std::move(pairs);
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "alpha,beta,verdict,margin\n";
  for (const CellResult& c : report.cells) {
    out << format_number(c.alpha) << ',' << format_number(c.beta) << ','
        << to_string(c.combined.outcome) << ',' << format_number(c.combined.margin) << '\n';
  }
  return out.str();
}

std::string to_pgm(const ScanReport& report) {
  const std::size_t na = report.grid.n_alpha();
  const std::size_t nb = report.grid.n_beta();
  std::ostringstream out;
  out << "P2\n# " << to_string(report.kind) << ' ' << report.theorem_id << '\n'
      << na << ' ' << nb << "\n255\n";
  for (std::size_t row = 0; row < nb; ++row) {
    const std::size_t j = nb - 1 - row;
    for (std::size_t i = 0; i < na; ++i) {
      if (i) out << ' ';
      out << gray(report.at(i, j).combined.outcome);
    }
    out << '\n';
  }
  return out.str();
}

std::string pgm_sidecar(const ScanReport& report) {
  std::ostringstream out;
  out << "theorem=" << report.theorem_id << '\n'
      << "kind=" << to_string(report.kind) << '\n'
      << "alpha_min=" << format_number(report.grid.alpha_min) << '\n'
      << "alpha_max=" << format_number(report.grid.alpha_max) << '\n'
      << "beta_min=" << format_number(report.grid.beta_min) << '\n'
      << "beta_max=" << format_number(report.grid.beta_max) << '\n'
      << "step=" << format_number(report.grid.step) << '\n'
      << "columns=" << report.grid.n_alpha() << '\n'
      << "rows=" << report.grid.n_beta() << '\n'
      << "top_row_beta=" << format_number(report.grid.beta(report.grid.n_beta() - 1)) << '\n'
      << "seed=" << report.seed << '\n';
  return out.str();
}

void write_report(const ScanReport& report, ReportFormat format, const std::string& path) {
  switch (format) {
    case ReportFormat::Json: write_file(path, to_json(report)); break;
    case ReportFormat::Csv: write_file(path, to_csv(report)); break;
    case ReportFormat::Pgm:
      write_file(path, to_pgm(report));
      write_file(path + ".txt", pgm_sidecar(report));
      break;
  }
}

}  // namespace hornich
