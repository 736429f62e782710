#ifndef LAPSPEC_CONJECTURES_HPP
#define LAPSPEC_CONJECTURES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lapspec/census.hpp"
#include "lapspec/spec_target.hpp"

namespace lapspec {

enum class ConjectureId {
  /// S_{n,n} has no realizer for n >= 2.
  kSnn,
  /// The only realizable S_{{i,n}_n^m} are S_{{4,6}_6^3}, S_{{2,6}_6^3},
  /// S_{{7,8}_8^3} and S_{{1,8}_8^5}.
  kSinm,
  /// S_{{i,j}_n^n} and S_{{i,j}_n^{n-1}} with j < n have at most one realizer (n >= 5).
  kUniqueness,
  /// Below order 9 the doubled sets realized by Cartesian products of two
  /// nontrivial graphs are exactly S_{{1,3}_4^2}, S_{{4,6}_6^3} and
  /// S_{{7,8}_8^3}; from order 9 on there are none.
  kCartesian,
};

std::string_view to_string(ConjectureId id);

struct OrderVerdict {
  int order = 0;
  bool holds = true;
  /// Realizable sets observed at this order that the statement is about.
  std::vector<std::string> observed;
  /// graph6 records of graphs contradicting the statement.
  std::vector<std::string> counterexamples;
  std::string note;
};

struct ConjectureCheck {
  ConjectureId id;
  int min_order = 0;
  int max_order = 0;
  std::vector<OrderVerdict> orders;
  bool holds() const;
};

/// Exhaustive desk checks up to max_n (<= 9, or 10 with allow_long_runs).
std::vector<ConjectureCheck> check_conjectures(int max_n, const SearchOptions& options = {});

/// The four sets named in the S_{{i,n}_n^m} statement that have the given order.
std::vector<SpecTarget> expected_top_sets(int n);

/// Doubled sets realized by a Cartesian product of two connected graphs with
/// at least two vertices each, at order n.
std::vector<SpecTarget> cartesian_realized_sets(int n, const SearchOptions& options = {});

}  // namespace lapspec

#endif  // LAPSPEC_CONJECTURES_HPP
