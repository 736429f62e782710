#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lapspec/spec_target.hpp"

namespace lapspec {
namespace {

using O = Obstruction;

SpecTarget sin(int i, int n) { return SpecTarget::simple(i, n); }
SpecTarget sijm(int i, int j, int n, int m) { return SpecTarget::doubled(i, j, n, m); }
Spectrum S(std::string_view s) { return Spectrum::parse(s); }

bool has(const std::vector<O>& v, O o) { return std::find(v.begin(), v.end(), o) != v.end(); }

// Realizable sets written out from the classification statements, one list per family.
std::set<SpecTarget> listed_simple(int n) {
  std::set<SpecTarget> out;
  switch (n % 4) {
    case 0: for (int k = 1; k <= (n - 2) / 2; ++k) out.insert(sin(2 * k, n)); break;
    case 1: for (int k = 1; k <= (n - 1) / 2; ++k) out.insert(sin(2 * k - 1, n)); break;
    case 2: for (int k = 1; k <= n / 2; ++k) out.insert(sin(2 * k - 1, n)); break;
    case 3: for (int k = 1; k <= (n - 1) / 2; ++k) out.insert(sin(2 * k, n)); break;
  }
  return out;
}

std::set<SpecTarget> listed_m_eq_n(int n) {
  std::set<SpecTarget> out;
  switch (n % 4) {
    case 0: for (int k = 1; k <= (n - 2) / 2; ++k) out.insert(sijm(1, 2 * k + 1, n, n)); break;
    case 1: for (int k = 1; k <= (n - 3) / 2; ++k) out.insert(sijm(1, 2 * k + 1, n, n)); break;
    case 2: for (int k = 1; k <= (n - 2) / 2; ++k) out.insert(sijm(1, 2 * k, n, n)); break;
    case 3: for (int k = 1; k <= (n - 1) / 2; ++k) out.insert(sijm(1, 2 * k, n, n)); break;
  }
  return out;
}

std::set<SpecTarget> listed_m_eq_n_minus_1_i2(int n) {
  std::set<SpecTarget> out;
  switch (n % 4) {
    case 0: for (int k = 1; k <= (n - 4) / 2; ++k) out.insert(sijm(2, 2 * k + 1, n, n - 1)); break;
    case 1: for (int k = 1; k <= (n - 3) / 2; ++k) out.insert(sijm(2, 2 * k + 1, n, n - 1)); break;
    case 2: for (int k = 1; k <= (n - 4) / 2; ++k) out.insert(sijm(2, 2 * k + 2, n, n - 1)); break;
    case 3: for (int k = 1; k <= (n - 5) / 2; ++k) out.insert(sijm(2, 2 * k + 2, n, n - 1)); break;
  }
  return out;
}

TEST(Target, Validation) {
  EXPECT_THROW(sin(0, 3), TargetError);
  EXPECT_THROW(sin(4, 3), TargetError);
  EXPECT_THROW(sijm(2, 2, 4, 1), TargetError);
  EXPECT_THROW(sijm(0, 2, 4, 1), TargetError);
  EXPECT_THROW(sijm(1, 5, 4, 2), TargetError);
  EXPECT_THROW(sijm(1, 3, 4, 3), TargetError);
  EXPECT_THROW(sijm(1, 3, 4, 0), TargetError);
  EXPECT_THROW(sijm(1, 3, 4, 5), TargetError);
  EXPECT_NO_THROW(sijm(1, 3, 4, 4));
}

TEST(Target, Labels) {
  EXPECT_EQ(sin(3, 6).label(), "S_{3,6}");
  EXPECT_EQ(sijm(1, 4, 6, 6).label(), "S_{{1,4}_6^6}");
}

TEST(Target, Parse) {
  EXPECT_EQ(parse_target("S{1,4}_6^6"), sijm(1, 4, 6, 6));
  EXPECT_EQ(parse_target("S_{{1,4}_6^6}"), sijm(1, 4, 6, 6));
  EXPECT_EQ(parse_target(" S { 1 , 4 } _ 6 ^ 6 "), sijm(1, 4, 6, 6));
  EXPECT_EQ(parse_target("S_3,6"), sin(3, 6));
  EXPECT_EQ(parse_target("S_{3,6}"), sin(3, 6));
  EXPECT_EQ(parse_target("S3,6"), sin(3, 6));
  EXPECT_THROW(parse_target("T_3,6"), TargetError);
  EXPECT_THROW(parse_target("S_3"), TargetError);
  EXPECT_THROW(parse_target("S{1,4}_6"), TargetError);
  EXPECT_THROW(parse_target("S{1,4}_6^6x"), TargetError);
  EXPECT_THROW(parse_target("S{4,1}_6^6"), TargetError);
  for (int n = 1; n <= 12; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(parse_target(sin(i, n).label()), sin(i, n));
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand(sijm(1, 3, 4, 2)), S("{0,2,2,4}"));
  EXPECT_EQ(expand(sin(2, 3)), S("{0,1,3}"));
  EXPECT_EQ(expand(sijm(4, 6, 6, 3)), S("{0,1,2,3,3,5}"));
}

TEST(Expand, ShapeAndClassifyRoundTrip) {
  for (int n = 1; n <= 20; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Spectrum s = expand(sin(i, n));
      EXPECT_EQ(s.size(), n);
      EXPECT_EQ(s.multiplicity(i), 0);
      EXPECT_EQ(classify_spectrum(s), sin(i, n));
      for (int j = i + 1; j <= n; ++j)
        for (int m = 1; m <= n; ++m) {
          if (m == i || m == j) continue;
          const Spectrum d = expand(sijm(i, j, n, m));
          EXPECT_EQ(d.size(), n);
          EXPECT_EQ(d.multiplicity(m), 2);
          EXPECT_EQ(d.multiplicity(i) + d.multiplicity(j), 0);
          EXPECT_EQ(classify_spectrum(d), sijm(i, j, n, m));
        }
    }
  }
  EXPECT_EQ(classify_spectrum(S("{0,0,2,2}")), std::nullopt);
  EXPECT_EQ(classify_spectrum(S("{0,1,1,1}")), std::nullopt);
  EXPECT_EQ(classify_spectrum(S("{0,1,1,2,2}")), std::nullopt);  // two doubles
  EXPECT_EQ(classify_spectrum(S("{0,1,2,3}")), sin(4, 4));
  EXPECT_EQ(classify_spectrum(S("{0,1,1,5}")), std::nullopt);  // entry above the order
  EXPECT_EQ(classify_spectrum(S("{0,2,2,3}")), sijm(1, 4, 4, 2));
}

TEST(Parity, Examples) {
  EXPECT_FALSE(parity_obstruction(sijm(1, 2, 6, 6)));
  EXPECT_TRUE(parity_obstruction(sijm(1, 3, 6, 6)));
  EXPECT_EQ(expand(sijm(1, 3, 6, 6)).sum(), 23);
  EXPECT_FALSE(parity_obstruction(sijm(2, 3, 4, 1)));
  EXPECT_TRUE(parity_obstruction(sin(1, 3)));
  EXPECT_FALSE(parity_obstruction(sin(2, 3)));
}

TEST(Parity, IsOddExpansionSum) {
  for (int n = 1; n <= 30; ++n)
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(parity_obstruction(sin(i, n)), expand(sin(i, n)).sum() % 2 == 1);
      for (int j = i + 1; j <= n; ++j)
        for (int m = 1; m <= n; ++m) {
          if (m == i || m == j) continue;
          const auto t = sijm(i, j, n, m);
          const bool statement = (((m - i - j) % 2) + 2) % 2 != (n * (n + 1) / 2) % 2;
          EXPECT_EQ(parity_obstruction(t), statement);
          EXPECT_EQ(parity_obstruction(t), expand(t).sum() % 2 == 1);
        }
    }
}

TEST(PrimeOrder, Examples) {
  for (int i = 1; i < 7; ++i)
    for (int m = 1; m < 7; ++m) {
      if (m == i) continue;
      EXPECT_TRUE(prime_order_obstruction(sijm(i, 7, 7, m)));
    }
  EXPECT_FALSE(prime_order_obstruction(sijm(4, 6, 6, 3)));
  EXPECT_FALSE(prime_order_obstruction(sijm(1, 8, 8, 5)));
  EXPECT_FALSE(prime_order_obstruction(sijm(1, 5, 5, 2)));  // primes below 7 are not covered
  EXPECT_THROW(prime_order_obstruction(sijm(1, 3, 5, 2)), TargetError);
  EXPECT_THROW(prime_order_obstruction(sin(1, 7)), TargetError);
}

TEST(Divisibility, Examples) {
  EXPECT_FALSE(divisibility_obstruction(sijm(4, 6, 6, 3)));  // 360 / 24 = 15
  EXPECT_TRUE(divisibility_obstruction(sijm(3, 7, 7, 2)));   // 1440 / 21 is not an integer
  EXPECT_FALSE(divisibility_obstruction(sijm(1, 8, 8, 5)));  // 25200 / 8 = 3150
  EXPECT_THROW(divisibility_obstruction(sijm(1, 3, 5, 2)), TargetError);
}

TEST(Divisibility, PrimeImpliesDivisibilityUpTo64) {
  for (int n = 7; n <= 64; ++n)
    for (int i = 1; i < n; ++i)
      for (int m = 1; m < n; ++m) {
        if (m == i) continue;
        const auto t = sijm(i, n, n, m);
        if (prime_order_obstruction(t)) ASSERT_TRUE(divisibility_obstruction(t)) << t.label();
      }
}

TEST(Structural, Examples) {
  EXPECT_EQ(structural_obstructions(sijm(2, 5, 7, 7)), std::vector<O>{O::kDoubleNStructure});
  EXPECT_EQ(structural_obstructions(sijm(3, 5, 9, 8)), std::vector<O>{O::kIGe3AtMEqNMinus1});
  EXPECT_TRUE(structural_obstructions(sijm(1, 3, 6, 6)).empty());
  // j = n, n = 0 mod 4, i - m odd
  EXPECT_EQ(structural_obstructions(sijm(2, 8, 8, 5)), std::vector<O>{O::kParity});
  EXPECT_TRUE(structural_obstructions(sijm(1, 8, 8, 5)).empty());
}

TEST(AllObstructions, ReportsEveryReason) {
  const auto o = all_obstructions(sijm(2, 7, 7, 4));
  EXPECT_TRUE(has(o, O::kPrimeOrder));
  EXPECT_TRUE(has(o, O::kDivisibility));
  const auto p = all_obstructions(sijm(2, 4, 6, 6));
  EXPECT_TRUE(has(p, O::kParity));
  EXPECT_TRUE(has(p, O::kDoubleNStructure));
  std::set<O> unique(p.begin(), p.end());
  EXPECT_EQ(unique.size(), p.size());
  EXPECT_TRUE(all_obstructions(sijm(4, 6, 6, 3)).empty());
  EXPECT_TRUE(has(all_obstructions(sin(7, 7)), O::kPrimeOrder));
  EXPECT_TRUE(has(all_obstructions(sin(7, 7)), O::kDivisibility));
}

TEST(AllObstructions, TagNames) {
  EXPECT_EQ(to_string(O::kParity), "parity");
  EXPECT_EQ(to_string(O::kPrimeOrder), "prime_order");
  EXPECT_EQ(to_string(O::kDivisibility), "divisibility");
  EXPECT_EQ(to_string(O::kDoubleNStructure), "double_n_structure");
  EXPECT_EQ(to_string(O::kIGe3AtMEqNMinus1), "i_ge_3_at_m_eq_n_minus_1");
  EXPECT_EQ(to_string(O::kExhaustedSearch), "exhausted_search");
}

TEST(Classification, Examples) {
  EXPECT_EQ(theorem_realizable(sijm(1, 4, 6, 6)).verdict, Verdict::kRealizable);
  EXPECT_EQ(theorem_realizable(sijm(2, 4, 9, 8)).verdict, Verdict::kObstructed);
  EXPECT_EQ(theorem_realizable(sijm(2, 6, 6, 3)).verdict, Verdict::kUnknown);
  EXPECT_EQ(theorem_realizable(sijm(1, 8, 8, 5)).verdict, Verdict::kUnknown);
  EXPECT_EQ(theorem_realizable(sin(1, 1)).verdict, Verdict::kRealizable);
  for (int n = 2; n <= 11; ++n) EXPECT_EQ(theorem_realizable(sin(n, n)).verdict, Verdict::kObstructed);
  EXPECT_EQ(theorem_realizable(sin(13, 13)).verdict, Verdict::kObstructed);
  EXPECT_EQ(theorem_realizable(sin(14, 14)).verdict, Verdict::kObstructed);
  EXPECT_EQ(theorem_realizable(sin(12, 12)).verdict, Verdict::kUnknown);
  EXPECT_EQ(theorem_realizable(sin(16, 16)).verdict, Verdict::kUnknown);
  EXPECT_EQ(theorem_realizable(sin(17, 17)).verdict, Verdict::kObstructed);
  EXPECT_EQ(theorem_realizable(sin(21, 21)).verdict, Verdict::kUnknown);
  EXPECT_EQ(to_string(Verdict::kRealizable), "REALIZABLE");
  EXPECT_FALSE(theorem_realizable(sijm(1, 4, 6, 6)).reason.empty());
  EXPECT_TRUE(theorem_realizable(sin(12, 12)).reason.empty());
}

TEST(Classification, MatchesLiteralListsUpTo64) {
  for (int n = 3; n <= 64; ++n) {
    const auto simple = listed_simple(n);
    const auto top = listed_m_eq_n(n);
    const auto second = listed_m_eq_n_minus_1_i2(n);
    for (int i = 1; i < n; ++i) {
      const bool listed = simple.count(sin(i, n)) > 0;
      ASSERT_EQ(theorem_realizable(sin(i, n)).verdict, listed ? Verdict::kRealizable : Verdict::kObstructed)
          << sin(i, n).label();
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (j != n) {
          const auto t = sijm(i, j, n, n);
          ASSERT_EQ(theorem_realizable(t).verdict, top.count(t) ? Verdict::kRealizable : Verdict::kObstructed)
              << t.label();
        }
        if (j != n - 1 && i != n - 1 && j < n) {
          const auto t = sijm(i, j, n, n - 1);
          Verdict expected;
          if (i >= 3) expected = Verdict::kObstructed;
          else if (i == 2) expected = second.count(t) ? Verdict::kRealizable : Verdict::kObstructed;
          else if (n >= 6) expected = ((n % 4 <= 1) ? j == 2 : j == 3) ? Verdict::kRealizable : Verdict::kObstructed;
          else continue;
          ASSERT_EQ(theorem_realizable(t).verdict, expected) << t.label();
        }
      }
  }
}

TEST(Classification, ObstructedVerdictsHaveReasons) {
  for (int n = 3; n <= 20; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int m = 1; m <= n; ++m) {
          if (m == i || m == j) continue;
          const auto t = sijm(i, j, n, m);
          const auto v = theorem_realizable(t);
          if (!all_obstructions(t).empty()) EXPECT_EQ(v.verdict, Verdict::kObstructed);
          if (v.verdict == Verdict::kRealizable) EXPECT_EQ(expand(t).sum() % 2, 0);
        }
}

TEST(Complement, DualityOfTopSets) {
  for (int n = 3; n <= 30; ++n)
    for (int i = 1; i < n; ++i)
      for (int m = 1; m < n; ++m) {
        if (m == i || n - m == n - i) continue;
        const Spectrum dual = spectrum_of_complement(expand(sijm(i, n, n, m)));
        EXPECT_EQ(dual, expand(sijm(n - i, n, n, n - m)));
      }
}

TEST(Primes, TrialDivision) {
  const std::set<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
  for (int n = 0; n <= 64; ++n) EXPECT_EQ(is_prime(n), primes.count(n) > 0) << n;
}

}  // namespace
}  // namespace lapspec
