#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcount {

// Exact arbitrary-precision count. Every public counting operation returns
// a nonnegative value; signed intermediates (inclusion-exclusion terms) are
// fine internally.
using BigCount = boost::multiprecision::cpp_int;

// Scalar problem parameters: box counts, object counts, caps, row indices.
using Int = std::int64_t;

}  // namespace permcount
