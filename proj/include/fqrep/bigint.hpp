#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fqrep {

/// Arbitrary-precision unsigned integer for field orders and exponents such
/// as (|L| - 1) / m, which overflow 64 bits for the larger extensions.
using BigUInt = boost::multiprecision::cpp_int;

}  // namespace fqrep
