#include "lapspec/constructors.hpp"

#include <array>

#include "lapspec/canonical.hpp"

namespace lapspec {
namespace {

const std::array<BaseCase, 8> kBaseTable{{
    {SpecTarget::simple(1, 1), "K1", "@"},
    {SpecTarget::simple(1, 2), "K2", "A_"},
    {SpecTarget::simple(2, 3), "P3", "BW"},
    {SpecTarget::simple(2, 4), "K1 v (K1 u K2)", "CN"},
    {SpecTarget::simple(1, 5), "2K1 v (K1 u K2)", "Dr["},
    {SpecTarget::simple(3, 5), "K1 v (K1 u P3)", "DB{"},
    {SpecTarget::doubled(1, 2, 3, 3), "K3", "Bw"},
    {SpecTarget::doubled(1, 3, 4, 4), "K2 v 2K1", "C^"},
}};

Expression k(int order) { return Expression::family(Family::kComplete, order); }
Expression empty(int order) { return Expression::family(Family::kEmpty, order); }
Expression path(int order) { return Expression::family(Family::kPath, order); }

Expression join_union(Expression left, Expression pad, Expression inner) {
  return Expression::join(std::move(left), Expression::disjoint_union(std::move(pad), std::move(inner)));
}

// Checks the built graph against the target and records the step.
Witness finish(const SpecTarget& target, std::string rule, Expression expression, ConstructionTrace trace) {
  Graph graph = expression.evaluate();
  const auto spectrum = integer_spectrum(graph);
  const Spectrum expected = expand(target);
  if (!spectrum || *spectrum != expected || !is_connected(graph)) {
    throw VerificationError("construction for " + target.label() + " via " + expression.to_ascii() +
                            " gave spectrum " + (spectrum ? spectrum->to_string() : "NOT_INTEGRAL") +
                            ", expected " + expected.to_string());
  }
  trace.steps.push_back({std::move(rule), target, expression});
  return Witness{target, std::move(expression), std::move(graph), *spectrum, std::move(trace)};
}

Witness from_base(const SpecTarget& target) {
  for (const BaseCase& b : kBaseTable) {
    if (b.target != target) continue;
    Expression e = Expression::parse(b.expression);
    if (canonical_form(e.evaluate()).edge_code != b.graph6) {
      throw VerificationError("base table entry for " + target.label() + " does not match its graph6");
    }
    return finish(target, "base", std::move(e), {});
  }
  throw NotRealizableError("no base table entry for " + target.label());
}

void reject_unrealizable(const SpecTarget& t) {
  const TheoremVerdict v = theorem_realizable(t);
  if (v.verdict == Verdict::kRealizable) return;
  if (v.verdict == Verdict::kObstructed) throw NotRealizableError(t.label() + " is not realizable: " + v.reason);
  throw ConjectureDependentError(t.label() + " has open status; no unconditional construction exists");
}

}  // namespace

std::span<const BaseCase> base_table() { return kBaseTable; }

Graph lift_join_union(const Graph& g) { return join(Graph(1), disjoint_union(Graph(1), g)); }
Expression lift_join_union(const Expression& e) { return join_union(k(1), k(1), e); }
Graph cone(const Graph& g) { return join(Graph(1), g); }
Expression cone(const Expression& e) { return Expression::join(k(1), e); }

Witness construct_sin(int i, int n) {
  const SpecTarget t = SpecTarget::simple(i, n);
  reject_unrealizable(t);
  if (n <= 5) return from_base(t);

  if (i == 1) {
    Witness g = construct_sin(n - 4, n - 3);
    return finish(t, "sin_pair_join", join_union(empty(2), k(1), g.expression), std::move(g.trace));
  }
  if (i <= n - 2) {
    Witness h = construct_sin(i - 1, n - 2);
    return finish(t, "sin_lift", lift_join_union(h.expression), std::move(h.trace));
  }
  Witness g = construct_sin(2, n - 3);
  return finish(t, "sin_edge_join", join_union(k(1), k(2), g.expression), std::move(g.trace));
}

Witness construct_sijm_m_eq_n(int j, int n) {
  const SpecTarget t = SpecTarget::doubled(1, j, n, n);
  reject_unrealizable(t);
  if (n <= 4) return from_base(t);

  if (j == 2) {
    Witness h = construct_sin(n - 5, n - 4);
    return finish(t, "double_top_path_join", join_union(path(3), k(1), h.expression), std::move(h.trace));
  }
  if (j <= n - 2) {
    Witness h = construct_sin(j - 2, n - 3);
    return finish(t, "double_top_edge_join", join_union(k(2), k(1), h.expression), std::move(h.trace));
  }
  Witness h = construct_sin(2, n - 4);
  return finish(t, "double_top_edge_pair_join", join_union(k(2), k(2), h.expression), std::move(h.trace));
}

Witness construct_sijm_m_eq_n_minus_1_i2(int j, int n) {
  if (j >= n) throw ConjectureDependentError("S_{{2,n}_n^{n-1}} has open status; no construction exists");
  const SpecTarget t = SpecTarget::doubled(2, j, n, n - 1);
  reject_unrealizable(t);
  Witness h = construct_sijm_m_eq_n(j - 1, n - 2);
  return finish(t, "double_sub_lift", lift_join_union(h.expression), std::move(h.trace));
}

Witness construct_sijm_m_eq_n_minus_1_i1(int n) {
  if (n < 6) throw NotRealizableError("the i = 1, m = n-1 construction needs n >= 6");
  if (n % 4 == 0 || n % 4 == 1) {
    const SpecTarget t = SpecTarget::doubled(1, 2, n, n - 1);
    Witness h = construct_sin(n - 6, n - 4);
    Expression left = Expression::disjoint_union(k(1), k(2));
    return finish(t, "double_sub_path_free_join", join_union(std::move(left), k(1), h.expression),
                  std::move(h.trace));
  }
  const SpecTarget t = SpecTarget::doubled(1, 3, n, n - 1);
  Witness h = construct_sijm_m_eq_n(n - 4, n - 3);
  return finish(t, "double_sub_pair_join", join_union(empty(2), k(1), h.expression), std::move(h.trace));
}

Witness construct(const SpecTarget& t) {
  reject_unrealizable(t);
  if (t.is_simple()) return construct_sin(t.i, t.n);
  if (t.m == t.n) return construct_sijm_m_eq_n(t.j, t.n);
  if (t.m == t.n - 1 && t.i == 2) return construct_sijm_m_eq_n_minus_1_i2(t.j, t.n);
  if (t.m == t.n - 1 && t.i == 1) {
    Witness w = construct_sijm_m_eq_n_minus_1_i1(t.n);
    if (w.target != t) throw VerificationError("classification and construction disagree on " + t.label());
    return w;
  }
  throw ConjectureDependentError("no construction is known for " + t.label());
}

Witness construct_via_open_set(const SpecTarget& t) {
  const auto needs = [&t](const std::string& open) -> Witness {
    throw ConjectureDependentError("the alternative route for " + t.label() + " needs a realizer of " + open +
                                   ", whose existence is open");
  };
  const auto sin_label = [](int k) { return SpecTarget::simple(k, k).label(); };
  if (t.is_simple() && t.n >= 6) {
    // K1 v H and K1 v (K1 u H) with H realizing S_{k,k}.
    if (t.i == 1) return needs(sin_label(t.n - 1));
    if (t.i == t.n - 1) return needs(sin_label(t.n - 2));
  }
  if (t.is_doubled() && t.i == 1 && t.m == t.n && t.n >= 5) {
    if (t.j == 2) return needs(sin_label(t.n - 2));
    if (t.j == t.n - 1) return needs(sin_label(t.n - 3));
  }
  if (t.is_doubled() && t.i == 1 && t.m == t.n - 1 && t.j == 3 && t.n >= 6) {
    return needs(SpecTarget::doubled(2, t.n - 1, t.n - 1, t.n - 2).label());
  }
  throw NotRealizableError("no alternative route through an open set is defined for " + t.label());
}

}  // namespace lapspec
