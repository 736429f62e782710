#include "lapspec/spec_target.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lapspec {
namespace {

std::string strip(std::string_view text, std::string_view drop) {
  std::string out;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || drop.find(ch) != std::string_view::npos) continue;
    out.push_back(ch);
  }
  return out;
}

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw TargetError("cannot parse target '" + std::string(whole) + "'");
  }
  return value;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

void require_doubled_top(const SpecTarget& t, std::string_view op) {
  if (!t.is_doubled() || t.j != t.n) {
    throw TargetError(std::string(op) + " applies only to S_{{i,n}_n^m} targets, got " + t.label());
  }
}

}  // namespace

SpecTarget SpecTarget::simple(int i, int n) {
  if (n < 1 || n > Graph::kMaxOrder || i < 1 || i > n) {
    throw TargetError("S_{i,n} needs 1 <= i <= n <= 64, got i=" + std::to_string(i) + " n=" + std::to_string(n));
  }
  return SpecTarget{Kind::kSimple, i, 0, n, 0};
}

SpecTarget SpecTarget::doubled(int i, int j, int n, int m) {
  const bool ok = 0 < i && i < j && j <= n && n <= Graph::kMaxOrder && 1 <= m && m <= n && m != i && m != j;
  if (!ok) {
    throw TargetError("S_{{i,j}_n^m} needs 0 < i < j <= n, 1 <= m <= n, m not in {i,j}; got i=" +
                      std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
  }
  return SpecTarget{Kind::kDoubled, i, j, n, m};
}

std::string SpecTarget::label() const {
  if (is_simple()) return "S_{" + std::to_string(i) + "," + std::to_string(n) + "}";
  return "S_{{" + std::to_string(i) + "," + std::to_string(j) + "}_" + std::to_string(n) + "^" +
         std::to_string(m) + "}";
}

SpecTarget parse_target(std::string_view text) {
  std::string s = strip(text, "{}");
  if (s.empty() || s.front() != 'S') throw TargetError("target must start with 'S': '" + std::string(text) + "'");
  std::string_view rest(s);
  rest.remove_prefix(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);

  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) throw TargetError("target needs a comma: '" + std::string(text) + "'");
  const int i = parse_int(rest.substr(0, comma), text);
  rest.remove_prefix(comma + 1);

  const auto caret = rest.find('^');
  if (caret == std::string_view::npos) return SpecTarget::simple(i, parse_int(rest, text));

  const auto underscore = rest.find('_');
  if (underscore == std::string_view::npos || underscore > caret) {
    throw TargetError("expected 'S{i,j}_n^m': '" + std::string(text) + "'");
  }
  const int j = parse_int(rest.substr(0, underscore), text);
  const int n = parse_int(rest.substr(underscore + 1, caret - underscore - 1), text);
  const int m = parse_int(rest.substr(caret + 1), text);
  return SpecTarget::doubled(i, j, n, m);
}

Spectrum expand(const SpecTarget& t) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(t.n));
  for (int v = 0; v <= t.n; ++v) {
    if (v == t.i || (t.is_doubled() && v == t.j)) continue;
    values.push_back(v);
    if (t.is_doubled() && v == t.m) values.push_back(v);
  }
  return Spectrum(std::move(values));
}

std::optional<SpecTarget> classify_spectrum(const Spectrum& s) {
  const int n = s.size();
  if (s.largest() > n || s.entries().front() != 0) return std::nullopt;
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int e : s.entries()) ++count[static_cast<std::size_t>(e)];
  if (count[0] != 1) return std::nullopt;
  std::vector<int> missing;
  std::vector<int> doubled;
  for (int v = 1; v <= n; ++v) {
    const int c = count[static_cast<std::size_t>(v)];
    if (c == 0) missing.push_back(v);
    if (c == 2) doubled.push_back(v);
    if (c > 2) return std::nullopt;
  }
  if (doubled.empty() && missing.size() == 1) return SpecTarget::simple(missing[0], n);
  if (doubled.size() == 1 && missing.size() == 2) {
    return SpecTarget::doubled(missing[0], missing[1], n, doubled[0]);
  }
  return std::nullopt;
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::kParity: return "parity";
    case Obstruction::kPrimeOrder: return "prime_order";
    case Obstruction::kDivisibility: return "divisibility";
    case Obstruction::kDoubleNStructure: return "double_n_structure";
    case Obstruction::kIGe3AtMEqNMinus1: return "i_ge_3_at_m_eq_n_minus_1";
    case Obstruction::kExhaustedSearch: return "exhausted_search";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kRealizable: return "REALIZABLE";
    case Verdict::kObstructed: return "OBSTRUCTED";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool parity_obstruction(const SpecTarget& t) { return expand(t).sum() % 2 != 0; }

bool prime_order_obstruction(const SpecTarget& t) {
  require_doubled_top(t, "prime_order_obstruction");
  return t.n >= 7 && is_prime(t.n);
}

bool divisibility_obstruction(const SpecTarget& t) {
  require_doubled_top(t, "divisibility_obstruction");
  const BigInt numerator = factorial(t.n - 1) * t.m;
  const BigInt denominator = BigInt(t.n) * t.i;
  return numerator % denominator != 0;
}

std::vector<Obstruction> structural_obstructions(const SpecTarget& t) {
  std::vector<Obstruction> out;
  if (!t.is_doubled()) return out;
  if (t.m == t.n && t.i != 1) out.push_back(Obstruction::kDoubleNStructure);
  if (t.m == t.n - 1 && t.i >= 3) out.push_back(Obstruction::kIGe3AtMEqNMinus1);
  if (t.j == t.n && t.n >= 6 && (t.n % 4 == 0 || t.n % 4 == 1) && (t.i - t.m) % 2 != 0) {
    out.push_back(Obstruction::kParity);
  }
  return out;
}

std::vector<Obstruction> all_obstructions(const SpecTarget& t) {
  std::vector<Obstruction> out;
  auto add = [&out](Obstruction o) {
    if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
  };
  if (parity_obstruction(t)) add(Obstruction::kParity);
  if (t.is_doubled() && t.j == t.n) {
    if (prime_order_obstruction(t)) add(Obstruction::kPrimeOrder);
    if (divisibility_obstruction(t)) add(Obstruction::kDivisibility);
  }
  if (t.is_simple() && t.i == t.n && t.n >= 2) {
    // Spanning tree count (n-1)!/n must be an integer.
    if (is_prime(t.n)) add(Obstruction::kPrimeOrder);
    if (factorial(t.n - 1) % t.n != 0) add(Obstruction::kDivisibility);
  }
  for (Obstruction o : structural_obstructions(t)) add(o);
  return out;
}

TheoremVerdict theorem_realizable(const SpecTarget& t) {
  if (t.is_simple()) {
    if (t.i < t.n) {
      if (parity_obstruction(t)) return {Verdict::kObstructed, "simple-spectrum classification (odd trace)"};
      return {Verdict::kRealizable, "simple-spectrum classification"};
    }
    if (t.n == 1) return {Verdict::kRealizable, "K_1 realizes S_{1,1} = {0}"};
    if (t.n <= 11 || is_prime(t.n) || t.n % 4 == 2 || t.n % 4 == 3) {
      return {Verdict::kObstructed, "S_{n,n} is not realizable for n <= 11, prime n, or n = 2,3 mod 4"};
    }
    return {Verdict::kUnknown, ""};
  }

  const auto obstructions = all_obstructions(t);
  if (!obstructions.empty()) {
    std::string reason = "necessary condition fails:";
    for (Obstruction o : obstructions) reason += " " + std::string(to_string(o));
    return {Verdict::kObstructed, reason};
  }
  if (t.m == t.n) return {Verdict::kRealizable, "classification of S_{{i,j}_n^n}"};
  if (t.m == t.n - 1 && t.j < t.n) {
    if (t.i == 2) return {Verdict::kRealizable, "classification of S_{{2,j}_n^{n-1}}"};
    if (t.i == 1 && t.n >= 6) {
      const bool low = t.n % 4 == 0 || t.n % 4 == 1;
      if ((low && t.j == 2) || (!low && t.j == 3)) {
        return {Verdict::kRealizable, "classification of S_{{1,j}_n^{n-1}}"};
      }
      return {Verdict::kObstructed, "S_{{1,j}_n^{n-1}} is realizable only for j = 2 (n = 0,1 mod 4) or j = 3 (n = 2,3 mod 4)"};
    }
  }
  return {Verdict::kUnknown, ""};
}

}  // namespace lapspec
