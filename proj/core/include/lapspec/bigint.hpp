#ifndef LAPSPEC_BIGINT_HPP
#define LAPSPEC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace lapspec {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace lapspec

#endif  // LAPSPEC_BIGINT_HPP
