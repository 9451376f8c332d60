#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hornich/catalog.hpp"
#include "hornich/criteria.hpp"

namespace hornich {

// a * alpha + b * beta <= c
struct Constraint {
  double a;
  double b;
  double c;
};

enum class TargetClass { K, KLambda, GGamma, G, C };
std::string to_string(TargetClass t);

// Class a theorem assumes for f or g. Identity marks the corollaries, where
// the other slot is the identity function z.
enum class InputClass { K, KLambda, GGamma, G, Identity };

struct TheoremInfo {
  std::string id;
  std::string statement;  // the inequality list the region transcribes
  InputClass f_class;
  InputClass g_class;
  TargetClass target;
};

const std::vector<TheoremInfo>& theorems();
const TheoremInfo& theorem(std::string_view id);  // throws UnknownTheorem

// Sharp (alpha, beta) region of a theorem. Chained statements such as
// "0 <= alpha, 2 beta, alpha + 2 beta <= 2" expand into two constraints per
// middle term, lower bound first, in the order the statement lists them.
struct Region {
  std::string id;
  double lambda = 0.5;
  double gamma = 1.0;
  std::vector<Constraint> constraints;
};

Region predicted_region(std::string_view id, double lambda, double gamma);

struct Containment {
  bool inside;
  // min over constraints of (c - a alpha - b beta) / |(a, b)|; negative outside.
  double distance;
};
Containment contains(const Region& region, double alpha, double beta);

// One line per constraint: "<a> alpha + <b> beta <= <c>", after a line with
// the theorem id.
std::string pretty(const Region& region);

// Indices of constraints implied by the others (reported, never an error).
std::vector<std::size_t> redundant_constraints(const Region& region);

// Feasible alpha range on the line beta = const (and vice versa);
// nullopt when the line misses the region. Unbounded ends are +-infinity.
std::optional<std::pair<double, double>> alpha_interval(const Region& region, double beta);
std::optional<std::pair<double, double>> beta_interval(const Region& region, double alpha);

using FunctionPair = std::pair<AnalyticFunction, AnalyticFunction>;
using Battery = std::vector<FunctionPair>;

// Extremal pairs used in the sharpness direction of each theorem.
Battery witness_battery(std::string_view id, double lambda, double gamma);
// Witnesses plus further members of the assumed classes.
Battery default_battery(std::string_view id, double lambda, double gamma);

struct Grid {
  double alpha_min = -4.0;
  double alpha_max = 4.0;
  double beta_min = -3.0;
  double beta_max = 3.0;
  double step = 0.25;

  std::size_t n_alpha() const;
  std::size_t n_beta() const;
  double alpha(std::size_t i) const { return alpha_min + step * static_cast<double>(i); }
  double beta(std::size_t j) const { return beta_min + step * static_cast<double>(j); }
};

struct ScanOptions {
  Grid grid;
  // Cells with |distance| <= band are exempt from mismatch accounting;
  // a non-positive value means one grid step.
  double band = 0.0;
  unsigned threads = 1;
  double lambda = 0.5;
  double gamma = 1.0;

  double effective_band() const { return band > 0.0 ? band : grid.step; }
};

enum class ScanKind { Inclusion, Sharpness };
std::string to_string(ScanKind k);

struct CellResult {
  std::size_t i = 0;  // alpha index
  std::size_t j = 0;  // beta index
  double alpha = 0.0;
  double beta = 0.0;
  double distance = 0.0;
  std::vector<Verdict> per_pair;
  Verdict combined;
  bool audited = false;  // outside the exemption band on the relevant side
  bool mismatch = false;
};

struct ScanReport {
  ScanKind kind = ScanKind::Inclusion;
  std::string theorem_id;
  std::string statement;
  TargetClass target = TargetClass::K;
  double lambda = 0.0;
  double gamma = 0.0;
  Grid grid;
  double band = 0.0;
  std::uint64_t seed = 0;
  SamplingProfile profile;
  std::vector<std::string> pair_names;
  std::vector<std::size_t> redundant;
  // Row-major: beta index outer (ascending), alpha index inner.
  std::vector<CellResult> cells;
  std::vector<std::size_t> mismatches;  // indices into cells
  double elapsed_seconds = 0.0;         // not serialized

  const CellResult& at(std::size_t i, std::size_t j) const { return cells[j * grid.n_alpha() + i]; }
};

// Inclusion direction: every battery pair must pass the target criterion in
// every cell strictly inside the region.
ScanReport scan(std::string_view id, const Battery& battery, const ScanOptions& opts,
                const SamplingProfile& prof);
// Sharpness direction: in every cell strictly outside the region at least
// one witness pair must fail.
ScanReport sharpness_check(std::string_view id, const ScanOptions& opts, const SamplingProfile& prof);

// Verdict of one pair at one (alpha, beta) for a theorem's target class.
Verdict classify_pair(TargetClass target, double lambda, double gamma, const AnalyticFunction& f,
                      const AnalyticFunction& g, double alpha, double beta,
                      const SamplingProfile& prof);

struct ConvexityAudit {
  Verdict verdict;
  // (first, second, midpoint) cell indices for each violation.
  std::vector<std::array<std::size_t, 3>> offending;
};

// For every two cells whose combined verdict is Pass, the midpoint cell (when
// it lies on the grid and beyond the band) must pass too.
ConvexityAudit convexity_audit(const ScanReport& report);

}  // namespace hornich
