#include <gtest/gtest.h>

#include "lapspec/canonical.hpp"
#include "lapspec/expression.hpp"
#include "lapspec/spectrum.hpp"

namespace lapspec {
namespace {

Graph G(std::string_view text) { return Expression::parse(text).evaluate(); }
bool same(std::string_view a, std::string_view b) { return canonical_form(G(a)) == canonical_form(G(b)); }

TEST(Parse, FamiliesAndOrders) {
  EXPECT_EQ(Expression::parse("K5").order(), 5);
  EXPECT_EQ(Expression::parse("K_5").order(), 5);
  EXPECT_EQ(Expression::parse("P4").evaluate().edge_count(), 3);
  EXPECT_EQ(Expression::parse("C6").evaluate().edge_count(), 6);
  EXPECT_EQ(Expression::parse("S4").evaluate().edge_count(), 3);
  EXPECT_EQ(Expression::parse("F2").order(), 5);
  EXPECT_EQ(Expression::parse("K{1,1,2}").evaluate().edge_count(), 5);
  EXPECT_EQ(Expression::parse("K{3}").evaluate(), G("K3"));
  EXPECT_EQ(Expression::parse("3K1").evaluate().edge_count(), 0);
  EXPECT_EQ(Expression::parse("2K2").order(), 4);
}

TEST(Parse, Precedence) {
  // product over join over union
  EXPECT_EQ(G("K1 u K1 v K1"), G("K1 u (K1 v K1)"));
  EXPECT_EQ(G("K1 v K1 x K2"), G("K1 v (K1 x K2)"));
  EXPECT_EQ(G("P2 x P3 u K1"), G("(P2 x P3) u K1"));
  // left associativity
  EXPECT_EQ(G("K1 u K2 u P3"), G("(K1 u K2) u P3"));
  EXPECT_EQ(G("~K2 u K1"), G("(~K2) u K1"));
}

TEST(Parse, UnicodeOperators) {
  EXPECT_EQ(G("K_2∨(K_1∪P_3)"), G("K2 v (K1 u P3)"));
  EXPECT_EQ(G("P_2×P_3"), G("P2 x P3"));
  EXPECT_EQ(G("¬C4"), G("~C4"));
}

TEST(Parse, AppendixIdentities) {
  EXPECT_TRUE(same("S4", "K{3,1}"));
  EXPECT_TRUE(same("S4", "K1 v 3K1"));
  EXPECT_TRUE(same("C4", "2K1 v 2K1"));
  EXPECT_TRUE(same("K{1,1,2}", "K2 v 2K1"));
  EXPECT_TRUE(same("F2", "K1 v 2K2"));
  EXPECT_TRUE(same("~S4", "K1 u K3"));
  EXPECT_TRUE(same("~P3", "K1 u K2"));
  EXPECT_TRUE(same("K1 v (K1 v (K1 u K2))", "K2 v (K1 u K2)"));
  EXPECT_TRUE(same("2K1 v (K1 u K3)", "2K1 v ~K{1,3}"));
}

TEST(Parse, ErrorsCarryPositions) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      Expression::parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("K2 v"), 4u);
  EXPECT_EQ(position_of("K2 q K1"), 3u);
  EXPECT_EQ(position_of("(K2 v K1"), 8u);
  EXPECT_EQ(position_of("Z3"), 0u);
  EXPECT_NE(position_of("C2"), std::string::npos);   // family domain
  EXPECT_NE(position_of("K40 u K40"), std::string::npos);  // order limit
  EXPECT_NE(position_of("K{2,}"), std::string::npos);
  EXPECT_NE(position_of("0K1"), std::string::npos);
}

TEST(Render, AsciiRoundTrip) {
  for (const char* text : {"K2 v (K1 u P3)", "2K1 v ~K{1,3}", "~(P2 x P3)", "K1 v (2K1 u (K1 v ~P3))",
                           "(K1 u K2) v (K1 u P3)", "P3 v ~P3", "K1 u K2 v K1", "3(K1 v K2)", "(K1 v K2) x P3"}) {
    const Expression e = Expression::parse(text);
    EXPECT_EQ(Expression::parse(e.to_ascii()).evaluate(), e.evaluate()) << text;
    EXPECT_EQ(Expression::parse(e.to_unicode()).evaluate(), e.evaluate()) << text;
  }
  EXPECT_EQ(Expression::parse("K2 v (K1 u P3)").to_ascii(), "K2 v (K1 u P3)");
  EXPECT_EQ(Expression::parse("K2 v (K1 u P3)").to_unicode(), "K_2∨(K_1∪P_3)");
  EXPECT_EQ(Expression::parse("~(P2 x P3)").to_ascii(), "~(P2 x P3)");
  EXPECT_EQ(Expression::parse("(K2 v K1) v K1").to_ascii(), "K2 v K1 v K1");
  EXPECT_EQ(Expression::parse("K2 v (K1 v K1)").to_ascii(), "K2 v (K1 v K1)");
}

TEST(Factories, MatchGraphOperations) {
  const auto k2 = Expression::family(Family::kComplete, 2);
  const auto p3 = Expression::family(Family::kPath, 3);
  EXPECT_EQ(Expression::join(k2, p3).evaluate(), join(k2.evaluate(), p3.evaluate()));
  EXPECT_EQ(Expression::disjoint_union(k2, p3).evaluate(), disjoint_union(k2.evaluate(), p3.evaluate()));
  EXPECT_EQ(Expression::product(k2, p3).evaluate(), cartesian_product(k2.evaluate(), p3.evaluate()));
  EXPECT_EQ(Expression::complement(p3).evaluate(), complement(p3.evaluate()));
  EXPECT_EQ(Expression::repeat(3, k2).order(), 6);
  EXPECT_EQ(Expression::family(Family::kEmpty, 3).evaluate(), make_named(Family::kEmpty, 3));
  EXPECT_EQ(Expression::multipartite({2, 2}).evaluate(), complete_multipartite(std::vector<int>{2, 2}));
  EXPECT_EQ(Expression::join(k2, p3).kind(), Expression::Kind::kJoin);
  EXPECT_EQ(Expression::parse("K2 v P3"), Expression::join(k2, p3));
}

}  // namespace
}  // namespace lapspec
