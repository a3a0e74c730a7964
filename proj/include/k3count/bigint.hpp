#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace k3count {

/// Exact arbitrary-precision integer used for every series coefficient.
using BigInt = boost::multiprecision::cpp_int;

} // namespace k3count
