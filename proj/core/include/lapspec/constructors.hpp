#ifndef LAPSPEC_CONSTRUCTORS_HPP
#define LAPSPEC_CONSTRUCTORS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapspec/expression.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/spec_target.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The target is ruled out (obstructed) or outside the constructor's domain.
class NotRealizableError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// The only available route needs a witness whose existence is open
/// (a realizer of S_{k,k}, or a target with unknown status).
class ConjectureDependentError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// A built graph failed its own spectrum check. Indicates a bug.
class VerificationError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

struct TraceStep {
  std::string rule;
  SpecTarget target;
  Expression expression;
};

/// Steps from the innermost sub-witness outwards; the last step's expression
/// evaluates to the witness graph.
struct ConstructionTrace {
  std::vector<TraceStep> steps;
};

struct Witness {
  SpecTarget target;
  Expression expression;
  Graph graph;
  Spectrum spectrum;
  ConstructionTrace trace;
};

struct BaseCase {
  SpecTarget target;
  std::string_view expression;
  /// Canonical graph6 of the expression's graph.
  std::string_view graph6;
};

/// Small realizers the recursions bottom out on.
std::span<const BaseCase> base_table();

/// Realizer of S_{i,n} for every i < n with an even expansion sum, and of
/// S_{1,1}. Throws NotRealizableError for obstructed (i, n) and
/// ConjectureDependentError for S_{n,n} with n >= 12 not otherwise excluded.
Witness construct_sin(int i, int n);

/// Realizer of S_{{1,j}_n^n}.
Witness construct_sijm_m_eq_n(int j, int n);

/// Realizer of S_{{2,j}_n^{n-1}}: K1 v (K1 u H), H realizing S_{{1,j-1}_{n-2}^{n-2}}.
Witness construct_sijm_m_eq_n_minus_1_i2(int j, int n);

/// For n >= 6: realizer of S_{{1,2}_n^{n-1}} when n = 0,1 mod 4, and of
/// S_{{1,3}_n^{n-1}} when n = 2,3 mod 4.
Witness construct_sijm_m_eq_n_minus_1_i1(int n);

/// Dispatches on the classification verdict. Throws NotRealizableError for
/// obstructed targets and ConjectureDependentError for unknown ones.
Witness construct(const SpecTarget& t);

/// Alternative routes that go through a realizer of an open set: S_{k,k},
/// or S_{{2,n-1}_{n-1}^{n-2}} for the i = 1, m = n-1 family. Always throws
/// ConjectureDependentError naming the missing witness, or NotRealizableError
/// if the target has no such route.
Witness construct_via_open_set(const SpecTarget& t);

/// K1 v (K1 u g): S_{{i,j}_n^m} realizer to S_{{i+1,j+1}_{n+2}^{m+1}} realizer.
Graph lift_join_union(const Graph& g);
Expression lift_join_union(const Expression& e);

/// K1 v g: S_{j,n} realizer to S_{{1,j+1}_{n+1}^{n+1}} realizer.
Graph cone(const Graph& g);
Expression cone(const Expression& e);

}  // namespace lapspec

#endif  // LAPSPEC_CONSTRUCTORS_HPP
