#ifndef LAPSPEC_GRAPH6_HPP
#define LAPSPEC_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lapspec/graph.hpp"

namespace lapspec {

/// Malformed graph6 record. offset() is the byte position of the first bad byte.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Header-less graph6: N(n) followed by the upper triangle packed column by
/// column (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, +63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view record);

}  // namespace lapspec

#endif  // LAPSPEC_GRAPH6_HPP
