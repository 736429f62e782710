#include "lapspec/graph6.hpp"

namespace lapspec {

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const auto row = g.neighbors(j);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((row >> i) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view record) {
  if (record.empty()) throw Graph6Error("empty record", 0);
  for (std::size_t k = 0; k < record.size(); ++k) {
    const auto c = static_cast<unsigned char>(record[k]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside the printable range 63..126", k);
  }
  std::size_t pos = 0;
  long n = 0;
  if (record[0] != '~') {
    n = record[0] - 63;
    pos = 1;
  } else {
    if (record.size() >= 2 && record[1] == '~') throw Graph6Error("orders above 258047 are not supported", 1);
    if (record.size() < 4) throw Graph6Error("truncated order field", record.size());
    n = ((record[1] - 63L) << 12) | ((record[2] - 63L) << 6) | (record[3] - 63L);
    pos = 4;
  }
  if (n < 1) throw Graph6Error("order must be positive", 0);
  if (n > Graph::kMaxOrder) throw Graph6Error("order " + std::to_string(n) + " exceeds 64", 0);

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (record.size() < expected) throw Graph6Error("truncated edge data", record.size());
  if (record.size() > expected) throw Graph6Error("trailing bytes", expected);

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = record[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((record[last] - 63) & ((1 << pad) - 1)) throw Graph6Error("non-zero padding bits", last);
  }
  return b.build();
}

}  // namespace lapspec
