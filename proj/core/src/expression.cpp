#include "lapspec/expression.hpp"

#include <cctype>
#include <limits>

namespace lapspec {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

struct Expression::Node {
  Kind kind = Kind::kFamily;
  Family family = Family::kComplete;
  int param = 0;
  std::vector<int> parts;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  int order = 0;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

int precedence(Expression::Kind k) {
  switch (k) {
    case Expression::Kind::kUnion: return 1;
    case Expression::Kind::kJoin: return 2;
    case Expression::Kind::kProduct: return 3;
    case Expression::Kind::kComplement:
    case Expression::Kind::kRepeat: return 4;
    default: return 5;
  }
}

int family_order(Family f, int k) { return f == Family::kFriendship ? 2 * k + 1 : k; }

char family_letter(Family f) {
  switch (f) {
    case Family::kComplete: return 'K';
    case Family::kPath: return 'P';
    case Family::kCycle: return 'C';
    case Family::kStar: return 'S';
    case Family::kFriendship: return 'F';
    case Family::kEmpty: break;
  }
  return '?';
}

struct Style {
  bool unicode;
  const char* union_op;
  const char* join_op;
  const char* product_op;
};

constexpr Style kAscii{false, " u ", " v ", " x "};
constexpr Style kUnicode{true, "∪", "∨", "×"};

std::string render(const Expression::Node& n, const Style& style);

std::string wrap(const Expression::Node& child, bool need, const Style& style) {
  std::string inner = render(child, style);
  return need ? "(" + inner + ")" : inner;
}

std::string render(const Expression::Node& n, const Style& style) {
  const std::string sub = style.unicode ? "_" : "";
  switch (n.kind) {
    case Expression::Kind::kFamily:
      return std::string(1, family_letter(n.family)) + sub + std::to_string(n.param);
    case Expression::Kind::kMultipartite: {
      std::string s = "K" + sub + "{";
      for (std::size_t t = 0; t < n.parts.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(n.parts[t]);
      }
      return s + "}";
    }
    case Expression::Kind::kComplement:
      return "~" + wrap(*n.lhs, precedence(n.lhs->kind) < 4, style);
    case Expression::Kind::kRepeat:
      return std::to_string(n.param) + wrap(*n.lhs, precedence(n.lhs->kind) < 5, style);
    case Expression::Kind::kUnion:
    case Expression::Kind::kJoin:
    case Expression::Kind::kProduct: {
      const int p = precedence(n.kind);
      const char* op = n.kind == Expression::Kind::kUnion  ? style.union_op
                       : n.kind == Expression::Kind::kJoin ? style.join_op
                                                           : style.product_op;
      return wrap(*n.lhs, precedence(n.lhs->kind) < p, style) + op +
             wrap(*n.rhs, precedence(n.rhs->kind) <= p, style);
    }
  }
  return "?";
}

Graph eval(const Expression::Node& n) {
  switch (n.kind) {
    case Expression::Kind::kFamily: return make_named(n.family, n.param);
    case Expression::Kind::kMultipartite: return complete_multipartite(n.parts);
    case Expression::Kind::kUnion: return disjoint_union(eval(*n.lhs), eval(*n.rhs));
    case Expression::Kind::kJoin: return join(eval(*n.lhs), eval(*n.rhs));
    case Expression::Kind::kProduct: return cartesian_product(eval(*n.lhs), eval(*n.rhs));
    case Expression::Kind::kComplement: return complement(eval(*n.lhs));
    case Expression::Kind::kRepeat: {
      const Graph one = eval(*n.lhs);
      Graph out = one;
      for (int t = 1; t < n.param; ++t) out = disjoint_union(out, one);
      return out;
    }
  }
  throw GraphError("unknown expression node");
}

bool same(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->family == b->family && a->param == b->param && a->parts == b->parts &&
         same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
}

}  // namespace

Expression Expression::family(Family f, int k) {
  if (f == Family::kEmpty) {
    Expression single = family(Family::kComplete, 1);
    return k == 1 ? single : repeat(k, single);
  }
  make_named(f, k);  // validates the parameter
  auto n = std::make_shared<Node>();
  n->kind = Kind::kFamily;
  n->family = f;
  n->param = k;
  n->order = family_order(f, k);
  return Expression(std::move(n));
}

Expression Expression::multipartite(std::vector<int> parts) {
  complete_multipartite(parts);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kMultipartite;
  for (int p : parts) n->order += p;
  n->parts = std::move(parts);
  return Expression(std::move(n));
}

namespace {

NodePtr binary(Expression::Kind kind, NodePtr a, NodePtr b, int order) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = kind;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  n->order = order;
  return n;
}

void check_order(long long order) {
  if (order > Graph::kMaxOrder) throw GraphError("expression order " + std::to_string(order) + " exceeds 64");
}

}  // namespace

Expression Expression::disjoint_union(Expression a, Expression b) {
  check_order(static_cast<long long>(a.order()) + b.order());
  const int order = a.order() + b.order();
  return Expression(binary(Kind::kUnion, std::move(a.node_), std::move(b.node_), order));
}

Expression Expression::join(Expression a, Expression b) {
  check_order(static_cast<long long>(a.order()) + b.order());
  const int order = a.order() + b.order();
  return Expression(binary(Kind::kJoin, std::move(a.node_), std::move(b.node_), order));
}

Expression Expression::product(Expression a, Expression b) {
  check_order(static_cast<long long>(a.order()) * b.order());
  const int order = a.order() * b.order();
  return Expression(binary(Kind::kProduct, std::move(a.node_), std::move(b.node_), order));
}

Expression Expression::complement(Expression a) {
  const int order = a.order();
  return Expression(binary(Kind::kComplement, std::move(a.node_), nullptr, order));
}

Expression Expression::repeat(int copies, Expression a) {
  if (copies < 1) throw GraphError("repeat count must be positive");
  check_order(static_cast<long long>(copies) * a.order());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kRepeat;
  n->param = copies;
  n->order = copies * a.order();
  n->lhs = std::move(a.node_);
  return Expression(std::move(n));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }
int Expression::order() const noexcept { return node_->order; }
Graph Expression::evaluate() const { return eval(*node_); }
std::string Expression::to_ascii() const { return render(*node_, kAscii); }
std::string Expression::to_unicode() const { return render(*node_, kUnicode); }
bool operator==(const Expression& a, const Expression& b) { return same(a.node_, b.node_); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression run() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Expression e = parse_union();
    skip();
    if (pos_ < text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view ascii, std::string_view unicode) {
    skip();
    if (text_.substr(pos_).starts_with(unicode)) {
      pos_ += unicode.size();
      return true;
    }
    if (text_.substr(pos_).starts_with(ascii)) {
      pos_ += ascii.size();
      return true;
    }
    return false;
  }

  template <class Combine>
  Expression binary_level(Expression (Parser::*next)(), std::string_view ascii, std::string_view unicode,
                          Combine combine) {
    Expression lhs = (this->*next)();
    while (true) {
      const std::size_t at = pos_;
      if (!accept(ascii, unicode)) return lhs;
      Expression rhs = (this->*next)();
      try {
        lhs = combine(std::move(lhs), std::move(rhs));
      } catch (const GraphError& e) {
        throw ParseError(e.what(), at);
      }
    }
  }

  Expression parse_union() {
    return binary_level(&Parser::parse_join, "u", "∪", [](Expression a, Expression b) {
      return Expression::disjoint_union(std::move(a), std::move(b));
    });
  }
  Expression parse_join() {
    return binary_level(&Parser::parse_product, "v", "∨", [](Expression a, Expression b) {
      return Expression::join(std::move(a), std::move(b));
    });
  }
  Expression parse_product() {
    return binary_level(&Parser::parse_unary, "x", "×", [](Expression a, Expression b) {
      return Expression::product(std::move(a), std::move(b));
    });
  }

  Expression parse_unary() {
    skip();
    const std::size_t at = pos_;
    if (accept("~", "¬")) return Expression::complement(parse_unary());
    if (at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]))) {
      const int copies = integer();
      if (copies < 1) throw ParseError("repeat count must be positive", at);
      Expression inner = parse_unary();
      try {
        return Expression::repeat(copies, std::move(inner));
      } catch (const GraphError& e) {
        throw ParseError(e.what(), at);
      }
    }
    return parse_primary();
  }

  Expression parse_primary() {
    skip();
    const std::size_t at = pos_;
    if (at >= text_.size()) throw ParseError("unexpected end of expression", at);
    if (text_[at] == '(') {
      ++pos_;
      Expression e = parse_union();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    Family family;
    switch (text_[at]) {
      case 'K': family = Family::kComplete; break;
      case 'P': family = Family::kPath; break;
      case 'C': family = Family::kCycle; break;
      case 'S': family = Family::kStar; break;
      case 'F': family = Family::kFriendship; break;
      default: throw ParseError("expected a graph family (K, P, C, S, F) or '('", at);
    }
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    try {
      if (pos_ < text_.size() && text_[pos_] == '{') {
        ++pos_;
        std::vector<int> parts{integer()};
        while (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          parts.push_back(integer());
        }
        if (pos_ >= text_.size() || text_[pos_] != '}') throw ParseError("expected '}'", pos_);
        ++pos_;
        if (family != Family::kComplete) throw ParseError("only K takes a part list", at);
        if (parts.size() == 1) return Expression::family(Family::kComplete, parts[0]);
        return Expression::multipartite(std::move(parts));
      }
      return Expression::family(family, integer());
    } catch (const GraphError& e) {
      throw ParseError(e.what(), at);
    }
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace lapspec
