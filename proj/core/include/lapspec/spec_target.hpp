#ifndef LAPSPEC_SPEC_TARGET_HPP
#define LAPSPEC_SPEC_TARGET_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapspec/spectrum.hpp"

namespace lapspec {

class TargetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Symbolic target spectrum.
///
///   simple(i, n):        {0, 1, ..., n} without i, all eigenvalues simple.
///   doubled(i, j, n, m): {0, 1, ..., n} without i and j, with m repeated once.
///
/// Factory functions validate the parameter domain (1 <= i <= n for simple;
/// 0 < i < j <= n, 1 <= m <= n, m not in {i, j} for doubled).
struct SpecTarget {
  enum class Kind { kSimple, kDoubled };

  Kind kind = Kind::kSimple;
  int i = 0;
  int j = 0;
  int n = 0;
  int m = 0;

  static SpecTarget simple(int i, int n);
  static SpecTarget doubled(int i, int j, int n, int m);

  bool is_simple() const noexcept { return kind == Kind::kSimple; }
  bool is_doubled() const noexcept { return kind == Kind::kDoubled; }

  /// "S_{3,6}" or "S_{{1,4}_6^6}".
  std::string label() const;

  friend auto operator<=>(const SpecTarget&, const SpecTarget&) = default;
};

/// Accepts "S{i,j}_n^m", "S_{{i,j}_n^m}", "S_i,n" and "S_{i,n}"; whitespace is ignored.
SpecTarget parse_target(std::string_view text);

Spectrum expand(const SpecTarget& t);

/// The target whose expansion equals s, if s has one of the two shapes.
std::optional<SpecTarget> classify_spectrum(const Spectrum& s);

enum class Obstruction {
  kParity,
  kPrimeOrder,
  kDivisibility,
  kDoubleNStructure,
  kIGe3AtMEqNMinus1,
  kExhaustedSearch,
};

/// Tag used in reports, e.g. "double_n_structure".
std::string_view to_string(Obstruction o);

/// The expansion sum is odd, so it cannot be a Laplacian trace (twice the
/// edge count). For doubled targets this is the statement that m - (i+j) and
/// n(n+1)/2 must have equal parity; for simple targets the same even-trace test.
bool parity_obstruction(const SpecTarget& t);

/// Doubled target with j = n whose order is a prime >= 7. Throws TargetError
/// for any other kind of target.
bool prime_order_obstruction(const SpecTarget& t);

/// Doubled target with j = n for which n*i does not divide (n-1)!*m, i.e. the
/// spanning tree count (n-1)!*m/(n*i) would not be an integer. Throws
/// TargetError for any other kind of target.
bool divisibility_obstruction(const SpecTarget& t);

/// Structural rules for doubled targets: m = n forces i = 1; m = n-1 forces
/// i <= 2; j = n with n = 0,1 mod 4 (n >= 6) forbids i - m odd.
std::vector<Obstruction> structural_obstructions(const SpecTarget& t);

/// Every applicable obstruction, each evaluated independently.
std::vector<Obstruction> all_obstructions(const SpecTarget& t);

enum class Verdict { kRealizable, kObstructed, kUnknown };
std::string_view to_string(Verdict v);

struct TheoremVerdict {
  Verdict verdict = Verdict::kUnknown;
  /// Which classification result decided the verdict (empty for kUnknown).
  std::string reason;
};

/// Verdict from the proven classification results only. Realizable covers
/// simple targets with i < n and doubled targets with m = n, or m = n-1 with
/// i in {1, 2} and j < n. Anything obstructed by a proven necessary
/// condition is kObstructed. Everything else is kUnknown.
TheoremVerdict theorem_realizable(const SpecTarget& t);

bool is_prime(int n);

}  // namespace lapspec

#endif  // LAPSPEC_SPEC_TARGET_HPP
