#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partlab {

// Arbitrary-precision signed integer used for all series coefficients
// and counts, so no check ever silently overflows.
using BigInt = boost::multiprecision::cpp_int;

} // namespace partlab
