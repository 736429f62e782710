#ifndef LAPSPEC_EXPRESSION_HPP
#define LAPSPEC_EXPRESSION_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lapspec/graph.hpp"

namespace lapspec {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  /// Byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Composition expression over named graph families.
///
/// Grammar (whitespace ignored, left-associative binary operators):
///   union   := join ( ("u" | "∪") join )*
///   join    := product ( ("v" | "∨") product )*
///   product := unary ( ("x" | "×") unary )*
///   unary   := "~" unary | INT unary | primary
///   primary := "(" union ")" | family
///   family  := ("K" | "P" | "C" | "S" | "F") "_"? ( INT | "{" INT ("," INT)* "}" )
/// K{a,b,..} is complete multipartite, S<k> the star on k vertices, F<k> the
/// friendship graph on 2k+1 vertices, and a prefix k means k disjoint copies.
class Expression {
 public:
  enum class Kind { kFamily, kMultipartite, kUnion, kJoin, kProduct, kComplement, kRepeat };

  static Expression family(Family f, int k);
  static Expression multipartite(std::vector<int> parts);
  static Expression disjoint_union(Expression a, Expression b);
  static Expression join(Expression a, Expression b);
  static Expression product(Expression a, Expression b);
  static Expression complement(Expression a);
  static Expression repeat(int copies, Expression a);

  static Expression parse(std::string_view text);

  Kind kind() const noexcept;
  int order() const noexcept;
  Graph evaluate() const;

  /// "K2 v (K1 u P3)"
  std::string to_ascii() const;
  /// "K_2∨(K_1∪P_3)"
  std::string to_unicode() const;

  friend bool operator==(const Expression& a, const Expression& b);

  struct Node;

 private:
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace lapspec

#endif  // LAPSPEC_EXPRESSION_HPP
