#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tropdimer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat make_rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

Int floor_div(const Int& a, const Int& b);
Rat floor(const Rat& r);
Rat frac(const Rat& r);
bool is_integer(const Rat& r);
Int gcd(Int a, Int b);
Int lcm(const Int& a, const Int& b);
long long to_ll(const Int& v);
long long to_ll(const Rat& r);  // requires an integer value
std::string to_string(const Rat& r);
std::string to_string(const Int& v);
Rat parse_rat(const std::string& text);

}  // namespace tropdimer
