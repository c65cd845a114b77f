#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace esb {

/// Exact signed integer used for every count, bound and vector entry.
using Integer = boost::multiprecision::cpp_int;

using IntVector = std::vector<Integer>;

inline std::string to_string(const Integer& x) { return x.str(); }

std::string join(const IntVector& v, const std::string& sep = ",");

}  // namespace esb
