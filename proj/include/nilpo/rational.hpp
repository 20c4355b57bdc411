#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>

namespace nilpo {

// Exact scalars. Rat keeps denominator > 0 and gcd(num, den) = 1 by
// construction.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_abs(const Int &a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(const Int &a, const Int &b)
{
	return boost::multiprecision::gcd(int_abs(a), int_abs(b));
}

inline Int int_lcm(const Int &a, const Int &b)
{
	if (a == 0 || b == 0)
		return 0;
	return int_abs(a * b) / int_gcd(a, b);
}

inline Int rat_num(const Rat &q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat &q)
{
	return boost::multiprecision::denominator(q);
}

inline Int int_pow(Int base, long e)
{
	if (e < 0)
		throw std::invalid_argument("int_pow: negative exponent");
	Int r = 1;
	while (e > 0)
	{
		if (e & 1)
			r *= base;
		base *= base;
		e >>= 1;
	}
	return r;
}

inline bool is_prime(long p)
{
	if (p < 2)
		return false;
	for (long d = 2; d * d <= p; ++d)
		if (p % d == 0)
			return false;
	return true;
}

// floor division and canonical nonnegative remainder
inline long mod_floor(long a, long m)
{
	long r = a % m;
	return r < 0 ? r + m : r;
}

} // namespace nilpo
