#include "lapspec/realizability.hpp"

#include "json.hpp"
#include "lapspec/graph6.hpp"

namespace lapspec {

RealizabilityReport assess_target(const SpecTarget& t, const AssessOptions& options) {
  RealizabilityReport r{t, expand(t), Verdict::kUnknown, all_obstructions(t), {}, {}, {}, {}};
  const TheoremVerdict theorem = theorem_realizable(t);

  if (theorem.verdict == Verdict::kObstructed) {
    r.verdict = Verdict::kObstructed;
    r.provenance = theorem.reason;
    return r;
  }
  if (theorem.verdict == Verdict::kRealizable) {
    Witness w = construct(t);
    r.verdict = Verdict::kRealizable;
    r.witness_graph6 = to_graph6(w.graph);
    r.witness_expression = w.expression.to_ascii();
    r.trace = std::move(w.trace);
    r.provenance = theorem.reason + "; witness built by construction and verified";
    return r;
  }

  const int cap = options.search.allow_long_runs ? kLongRunMaxOrder : kDefaultMaxOrder;
  if (!options.use_search || t.n > cap) {
    r.provenance = "open: not covered by the classification";
    if (options.use_search) r.provenance += ", and order " + std::to_string(t.n) + " is beyond the search cap";
    return r;
  }
  const std::vector<Graph> found = find_realizations(t, options.search);
  if (found.empty()) {
    r.verdict = Verdict::kObstructed;
    r.obstructions.push_back(Obstruction::kExhaustedSearch);
    r.provenance = "exhaustive search over all connected graphs of order " + std::to_string(t.n) +
                   " found no realizer";
    return r;
  }
  r.verdict = Verdict::kRealizable;
  r.witness_graph6 = to_graph6(found.front());
  r.provenance = "exhaustive search found " + std::to_string(found.size()) + " non-isomorphic realizer" +
                 (found.size() == 1 ? "" : "s");
  return r;
}

std::string to_json(const RealizabilityReport& report, int indent) {
  using nlohmann::json;
  json out;
  out["target"] = report.target.label();
  out["expansion"] = report.expansion.to_string();
  out["verdict"] = std::string(to_string(report.verdict));
  json tags = json::array();
  for (Obstruction o : report.obstructions) tags.push_back(std::string(to_string(o)));
  out["obstructions"] = std::move(tags);
  if (report.witness_graph6) out["witness_graph6"] = *report.witness_graph6;
  if (report.witness_expression) out["witness_expression"] = *report.witness_expression;
  if (report.trace) {
    json steps = json::array();
    for (const auto& s : report.trace->steps) {
      steps.push_back({{"rule", s.rule}, {"target", s.target.label()}, {"expression", s.expression.to_ascii()}});
    }
    out["trace"] = std::move(steps);
  }
  out["provenance"] = report.provenance;
  return out.dump(indent);
}

}  // namespace lapspec
