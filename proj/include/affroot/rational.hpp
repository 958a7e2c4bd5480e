#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace affroot {

using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace affroot
