#ifndef LAPSPEC_REALIZABILITY_HPP
#define LAPSPEC_REALIZABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lapspec/census.hpp"
#include "lapspec/constructors.hpp"
#include "lapspec/spec_target.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {

struct RealizabilityReport {
  SpecTarget target;
  Spectrum expansion;
  Verdict verdict = Verdict::kUnknown;
  std::vector<Obstruction> obstructions;
  std::optional<std::string> witness_graph6;
  std::optional<std::string> witness_expression;
  /// Set when the witness came from a construction.
  std::optional<ConstructionTrace> trace;
  /// How the verdict was reached.
  std::string provenance;
};

struct AssessOptions {
  /// Fall back to exhaustive search for targets the classification leaves
  /// open, when the order is within the search cap.
  bool use_search = true;
  SearchOptions search;
};

/// Classification first, then a construction for realizable targets, then
/// exhaustive search for open ones. Never reports kRealizable without a
/// verified witness, and never kObstructed without a proof or a search
/// certificate.
RealizabilityReport assess_target(const SpecTarget& t, const AssessOptions& options = {});

/// {"target", "expansion", "verdict", "obstructions", "witness_graph6"?,
///  "witness_expression"?, "trace"?, "provenance"}; indent < 0 gives one line.
std::string to_json(const RealizabilityReport& report, int indent = -1);

}  // namespace lapspec

#endif  // LAPSPEC_REALIZABILITY_HPP
