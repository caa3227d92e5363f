#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace egt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int binomial(long n, long k);
Rational rational_pow(const Rational& b, long e);

// Parses "num/den", "num" or a decimal like "0.55" exactly.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

// Smallest integer >= r.
Int ceil_int(const Rational& r);
Int floor_int(const Rational& r);

}  // namespace egt
