#ifndef LAPSPEC_SPECTRUM_HPP
#define LAPSPEC_SPECTRUM_HPP

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapspec/bigint.hpp"
#include "lapspec/graph.hpp"

namespace lapspec {

class SpectrumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Monic integer polynomial c_0 + c_1 x + ... + x^n, stored low degree first.
class CharPoly {
 public:
  explicit CharPoly(std::vector<BigInt> coefficients);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const BigInt& coefficient(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }
  std::span<const BigInt> coefficients() const noexcept { return coefficients_; }

  BigInt evaluate(const BigInt& x) const;
  /// Multiplicity of the integer r as a root, by repeated exact division.
  int root_multiplicity(long r) const;
  /// Human form, e.g. "x^4 - 8x^3 + 20x^2 - 16x".
  std::string to_string() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Sorted multiset of non-negative integer eigenvalues.
class Spectrum {
 public:
  /// Sorts the entries. Rejects an empty list and negative values.
  explicit Spectrum(std::vector<int> entries);
  /// Parses the brace notation "{0,1,1,4}" (whitespace ignored).
  static Spectrum parse(std::string_view text);

  std::span<const int> entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int largest() const noexcept { return entries_.back(); }
  int multiplicity(int value) const;
  long long sum() const;
  /// "{0,1,1,4}"
  std::string to_string() const;

  friend auto operator<=>(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<int> entries_;
};

CharPoly laplacian_char_poly(const Graph& g);

/// The full Laplacian spectrum when det(xI - L) splits into integer linear
/// factors; std::nullopt ("not integral") otherwise. Never partial.
std::optional<Spectrum> integer_spectrum(const Graph& g);
std::optional<Spectrum> integer_roots(const CharPoly& p);

Spectrum spectrum_of_union(const Spectrum& a, const Spectrum& b);
/// {0} plus n - mu for every other entry. Throws SpectrumError unless the
/// input starts with 0 and its largest entry is at most its length.
Spectrum spectrum_of_complement(const Spectrum& s);
/// Laplacian spectrum of the join of graphs with spectra a (order n) and b (order m).
Spectrum spectrum_of_join(const Spectrum& a, const Spectrum& b);
/// All pairwise sums.
Spectrum spectrum_of_cartesian(const Spectrum& a, const Spectrum& b);

/// Number of spanning trees: the determinant of L(G) with row and column 0
/// removed. Zero for disconnected graphs.
BigInt spanning_tree_count(const Graph& g);

}  // namespace lapspec

#endif  // LAPSPEC_SPECTRUM_HPP
