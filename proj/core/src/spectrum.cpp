#include "lapspec/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace lapspec {
namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

struct Overflow {};

// 128-bit integer that throws Overflow instead of wrapping. Used as the fast
// path; every routine below is rerun on BigInt when it throws.
struct Checked {
  i128 v = 0;

  Checked() = default;
  Checked(long long x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked operator+(Checked a, Checked b) {
    Checked r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    Checked r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator*(Checked a, Checked b) {
    Checked r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) { return Checked::raw(a.v / b.v); }
  friend Checked operator%(Checked a, Checked b) { return Checked::raw(a.v % b.v); }
  friend Checked operator-(Checked a) { return Checked{0} - a; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  static Checked raw(i128 x) {
    Checked r;
    r.v = x;
    return r;
  }
};

BigInt to_big(Checked x) {
  const bool negative = x.v < 0;
  const u128 mag = negative ? -static_cast<u128>(x.v) : static_cast<u128>(x.v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

// Faddeev-LeVerrier: M_1 = I, M_k = L M_{k-1} + c_{n-k+1} I,
// c_{n-k} = -tr(L M_k) / k. The division is exact over the integers.
template <class T>
std::vector<T> faddeev_leverrier(const Graph& g) {
  const int n = g.order();
  const auto sz = static_cast<std::size_t>(n);
  std::vector<int> degree(sz);
  for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);

  std::vector<T> c(sz + 1, T{0});
  c[sz] = T{1};
  std::vector<T> m(sz * sz, T{0});
  std::vector<T> lm(sz * sz, T{0});
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      for (std::size_t i = 0; i < sz; ++i) m[i * sz + i] = T{1};
    } else {
      m = lm;
      const T shift = c[sz - static_cast<std::size_t>(k) + 1];
      for (std::size_t i = 0; i < sz; ++i) m[i * sz + i] = m[i * sz + i] + shift;
    }
    for (int i = 0; i < n; ++i) {
      const auto row = static_cast<std::size_t>(i) * sz;
      const T d{degree[static_cast<std::size_t>(i)]};
      for (std::size_t j = 0; j < sz; ++j) lm[row + j] = d * m[row + j];
      for (std::uint64_t nb = g.neighbors(i); nb; nb &= nb - 1) {
        const auto urow = static_cast<std::size_t>(std::countr_zero(nb)) * sz;
        for (std::size_t j = 0; j < sz; ++j) lm[row + j] = lm[row + j] - m[urow + j];
      }
    }
    T trace{0};
    for (std::size_t i = 0; i < sz; ++i) trace = trace + lm[i * sz + i];
    c[sz - static_cast<std::size_t>(k)] = -(trace / T{k});
  }
  return c;
}

// Divides out x - r for r = 0..bound in increasing order, each to full
// multiplicity. Succeeds only if the quotient reaches the constant 1.
template <class T>
std::optional<std::vector<int>> split_integer_roots(std::vector<T> poly, int bound) {
  std::vector<int> roots;
  for (int r = 0; r <= bound && poly.size() > 1; ++r) {
    while (poly.size() > 1) {
      // Synthetic division by (x - r), high degree first.
      const std::size_t deg = poly.size() - 1;
      std::vector<T> q(deg, T{0});
      T carry = poly[deg];
      for (std::size_t k = deg; k-- > 0;) {
        q[k] = carry;
        carry = poly[k] + carry * T{r};
      }
      if (!(carry == T{0})) break;
      poly = std::move(q);
      roots.push_back(r);
    }
  }
  if (poly.size() != 1) return std::nullopt;
  return roots;
}

template <class T>
T reduced_laplacian_det(const Graph& g) {
  const int n = g.order();
  const int m = n - 1;
  if (m == 0) return T{1};
  const auto sz = static_cast<std::size_t>(m);
  std::vector<T> a(sz * sz, T{0});
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      long long entry = 0;
      if (i == j) {
        entry = g.degree(i);
      } else if (g.adjacent(i, j)) {
        entry = -1;
      }
      a[static_cast<std::size_t>(i - 1) * sz + static_cast<std::size_t>(j - 1)] = T{entry};
    }
  }
  // Fraction-free (Bareiss) elimination with row pivoting.
  T prev{1};
  bool negate = false;
  for (std::size_t k = 0; k < sz; ++k) {
    std::size_t pivot = k;
    while (pivot < sz && a[pivot * sz + k] == T{0}) ++pivot;
    if (pivot == sz) return T{0};
    if (pivot != k) {
      for (std::size_t j = 0; j < sz; ++j) std::swap(a[k * sz + j], a[pivot * sz + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < sz; ++i) {
      for (std::size_t j = k + 1; j < sz; ++j) {
        a[i * sz + j] = (a[i * sz + j] * a[k * sz + k] - a[i * sz + k] * a[k * sz + j]) / prev;
      }
      a[i * sz + k] = T{0};
    }
    prev = a[k * sz + k];
  }
  const T det = a[(sz - 1) * sz + (sz - 1)];
  return negate ? T{0} - det : det;
}

template <class T>
std::vector<BigInt> to_big_vector(const std::vector<T>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_big(x));
  return out;
}

}  // namespace

CharPoly::CharPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.back() != 1) {
    throw SpectrumError("characteristic polynomial must be monic");
  }
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int CharPoly::root_multiplicity(long r) const {
  std::vector<BigInt> poly = coefficients_;
  int mult = 0;
  while (poly.size() > 1) {
    const std::size_t deg = poly.size() - 1;
    std::vector<BigInt> q(deg);
    BigInt carry = poly[deg];
    for (std::size_t k = deg; k-- > 0;) {
      q[k] = carry;
      carry = poly[k] + carry * r;
    }
    if (carry != 0) break;
    poly = std::move(q);
    ++mult;
  }
  return mult;
}

std::string CharPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

Spectrum::Spectrum(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw SpectrumError("spectrum must be non-empty");
  std::sort(entries_.begin(), entries_.end());
  if (entries_.front() < 0) throw SpectrumError("Laplacian eigenvalues are non-negative");
}

Spectrum Spectrum::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw SpectrumError("spectrum must be written as {a,b,...}");
  }
  std::vector<int> values;
  std::string_view body(compact.data() + 1, compact.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      throw SpectrumError("bad spectrum entry '" + std::string(item) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw SpectrumError("trailing comma in spectrum");
  }
  return Spectrum(std::move(values));
}

int Spectrum::multiplicity(int value) const {
  const auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), value);
  return static_cast<int>(hi - lo);
}

long long Spectrum::sum() const {
  long long s = 0;
  for (int e : entries_) s += e;
  return s;
}

std::string Spectrum::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries_[k]);
  }
  return out + "}";
}

CharPoly laplacian_char_poly(const Graph& g) {
  try {
    return CharPoly(to_big_vector(faddeev_leverrier<Checked>(g)));
  } catch (const Overflow&) {
    return CharPoly(faddeev_leverrier<BigInt>(g));
  }
}

std::optional<Spectrum> integer_roots(const CharPoly& p) {
  const auto& c = p.coefficients();
  // Laplacian eigenvalues lie in [0, n].
  const auto roots = split_integer_roots(std::vector<BigInt>(c.begin(), c.end()), p.degree());
  if (!roots) return std::nullopt;
  return Spectrum(*roots);
}

std::optional<Spectrum> integer_spectrum(const Graph& g) {
  std::optional<std::vector<int>> roots;
  try {
    roots = split_integer_roots(faddeev_leverrier<Checked>(g), g.order());
  } catch (const Overflow&) {
    roots = split_integer_roots(faddeev_leverrier<BigInt>(g), g.order());
  }
  if (!roots) return std::nullopt;
  return Spectrum(std::move(*roots));
}

Spectrum spectrum_of_union(const Spectrum& a, const Spectrum& b) {
  std::vector<int> all(a.entries().begin(), a.entries().end());
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return Spectrum(std::move(all));
}

namespace {

void require_laplacian_shape(const Spectrum& s) {
  if (s.entries().front() != 0) throw SpectrumError("Laplacian spectrum must contain 0");
  if (s.largest() > s.size()) {
    throw SpectrumError("largest eigenvalue " + std::to_string(s.largest()) + " exceeds the order " +
                        std::to_string(s.size()));
  }
}

}  // namespace

Spectrum spectrum_of_complement(const Spectrum& s) {
  require_laplacian_shape(s);
  const int n = s.size();
  std::vector<int> out{0};
  for (std::size_t k = 1; k < s.entries().size(); ++k) out.push_back(n - s.entries()[k]);
  return Spectrum(std::move(out));
}

Spectrum spectrum_of_join(const Spectrum& a, const Spectrum& b) {
  require_laplacian_shape(a);
  require_laplacian_shape(b);
  const int n = a.size();
  const int m = b.size();
  std::vector<int> out{0};
  for (std::size_t k = 1; k < a.entries().size(); ++k) out.push_back(m + a.entries()[k]);
  for (std::size_t k = 1; k < b.entries().size(); ++k) out.push_back(n + b.entries()[k]);
  out.push_back(n + m);
  return Spectrum(std::move(out));
}

Spectrum spectrum_of_cartesian(const Spectrum& a, const Spectrum& b) {
  std::vector<int> out;
  out.reserve(a.entries().size() * b.entries().size());
  for (int x : a.entries()) {
    for (int y : b.entries()) out.push_back(x + y);
  }
  return Spectrum(std::move(out));
}

BigInt spanning_tree_count(const Graph& g) {
  try {
    return to_big(reduced_laplacian_det<Checked>(g));
  } catch (const Overflow&) {
    return reduced_laplacian_det<BigInt>(g);
  }
}

}  // namespace lapspec
