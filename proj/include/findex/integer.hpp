#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace findex {

// Arbitrary-precision signed integer. All index arithmetic goes through this
// type so that closed forms with n2^4 factors never wrap.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

}  // namespace findex
