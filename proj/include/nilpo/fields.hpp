#pragma once

#include "nilpo/rational.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilpo {

// ---------------------------------------------------------------------------
// dense univariate integer polynomials (little helpers for cyclotomics)

using IntPoly = std::vector<Int>; // coefficient of x^i at index i, no trailing 0

inline void ipoly_trim(IntPoly &p)
{
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

inline IntPoly ipoly_mul(const IntPoly &a, const IntPoly &b)
{
	if (a.empty() || b.empty())
		return {};
	IntPoly r(a.size() + b.size() - 1, Int(0));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	ipoly_trim(r);
	return r;
}

// exact division, throws if not exact
inline IntPoly ipoly_divexact(IntPoly a, const IntPoly &b)
{
	if (b.empty())
		throw std::invalid_argument("ipoly_divexact: division by zero");
	ipoly_trim(a);
	IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
	while (a.size() >= b.size())
	{
		if (a.back() % b.back() != 0)
			throw std::logic_error("ipoly_divexact: not divisible");
		Int c = a.back() / b.back();
		size_t shift = a.size() - b.size();
		q[shift] = c;
		for (size_t i = 0; i < b.size(); ++i)
			a[shift + i] -= c * b[i];
		ipoly_trim(a);
		if (a.empty())
			break;
	}
	if (!a.empty())
		throw std::logic_error("ipoly_divexact: nonzero remainder");
	ipoly_trim(q);
	return q;
}

inline long euler_phi(long n)
{
	long r = n;
	for (long p = 2; p * p <= n; ++p)
		if (n % p == 0)
		{
			while (n % p == 0)
				n /= p;
			r -= r / p;
		}
	if (n > 1)
		r -= r / n;
	return r;
}

// Phi_N, monic of degree phi(N), via (x^N - 1) / prod_{d | N, d < N} Phi_d.
// The cache is guarded; map nodes are stable so returned references stay
// valid for concurrent readers.
inline const IntPoly &cyclotomic_polynomial(long N)
{
	if (N < 1)
		throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
	static std::mutex mutex;
	static std::map<long, IntPoly> cache;
	{
		std::lock_guard<std::mutex> lock(mutex);
		auto it = cache.find(N);
		if (it != cache.end())
			return it->second;
	}
	IntPoly p(N + 1, Int(0)); // x^N - 1
	p[0] = -1;
	p[N] = 1;
	for (long d = 1; d < N; ++d)
		if (N % d == 0)
			p = ipoly_divexact(p, cyclotomic_polynomial(d));
	std::lock_guard<std::mutex> lock(mutex);
	return cache.emplace(N, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// field tags and field implementations

struct FieldTag
{
	enum class Kind
	{
		rationals,
		prime,
		cyclotomic
	};
	Kind kind = Kind::rationals;
	long p = 0;     // for prime fields
	long level = 1; // for cyclotomic fields

	static FieldTag Q() { return FieldTag{Kind::rationals, 0, 1}; }
	static FieldTag Fp(long p)
	{
		if (!is_prime(p))
			throw std::invalid_argument("FieldTag::Fp: p must be prime");
		return FieldTag{Kind::prime, p, 1};
	}
	static FieldTag QCyclo(long level)
	{
		if (level < 1)
			throw std::invalid_argument("FieldTag::QCyclo: level must be >= 1");
		return FieldTag{Kind::cyclotomic, 0, level};
	}

	long characteristic() const { return kind == Kind::prime ? p : 0; }

	std::string to_string() const
	{
		switch (kind)
		{
		case Kind::rationals:
			return "Q";
		case Kind::prime:
			return "F" + std::to_string(p);
		case Kind::cyclotomic:
			return "QCyclo(" + std::to_string(level) + ")";
		}
		return "?";
	}
};

class RationalField
{
  public:
	using Elem = Rat;

	Elem zero() const { return Rat(0); }
	Elem one() const { return Rat(1); }
	Elem from_int(const Int &n) const { return Rat(n); }
	Elem add(const Elem &a, const Elem &b) const { return a + b; }
	Elem sub(const Elem &a, const Elem &b) const { return a - b; }
	Elem mul(const Elem &a, const Elem &b) const { return a * b; }
	Elem neg(const Elem &a) const { return -a; }
	Elem inv(const Elem &a) const
	{
		if (a == 0)
			throw std::domain_error("RationalField::inv: zero");
		return 1 / a;
	}
	bool is_zero(const Elem &a) const { return a == 0; }
	bool eq(const Elem &a, const Elem &b) const { return a == b; }
	long characteristic() const { return 0; }
	FieldTag tag() const { return FieldTag::Q(); }

	std::string to_string(const Elem &a) const
	{
		std::ostringstream os;
		os << a;
		return os.str();
	}
};

class PrimeField
{
  public:
	using Elem = long;

	explicit PrimeField(long p) : p_(p)
	{
		if (!is_prime(p))
			throw std::invalid_argument("PrimeField: composite modulus");
	}

	long modulus() const { return p_; }
	Elem zero() const { return 0; }
	Elem one() const { return 1 % p_; }
	Elem from_int(const Int &n) const
	{
		Int r = n % p_;
		if (r < 0)
			r += p_;
		return r.convert_to<long>();
	}
	Elem add(Elem a, Elem b) const { return (a + b) % p_; }
	Elem sub(Elem a, Elem b) const { return mod_floor(a - b, p_); }
	Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
	Elem neg(Elem a) const { return mod_floor(-a, p_); }
	Elem inv(Elem a) const
	{
		a = mod_floor(a, p_);
		if (a == 0)
			throw std::domain_error("PrimeField::inv: zero");
		// extended Euclid
		long t = 0, nt = 1, r = p_, nr = a;
		while (nr != 0)
		{
			long q = r / nr;
			t -= q * nt;
			std::swap(t, nt);
			r -= q * nr;
			std::swap(r, nr);
		}
		return mod_floor(t, p_);
	}
	bool is_zero(Elem a) const { return mod_floor(a, p_) == 0; }
	bool eq(Elem a, Elem b) const { return mod_floor(a - b, p_) == 0; }
	long characteristic() const { return p_; }
	FieldTag tag() const { return FieldTag::Fp(p_); }

	std::string to_string(Elem a) const { return std::to_string(mod_floor(a, p_)); }

  private:
	long p_;
};

// residue mod Phi_N with rational coefficients; coeffs.size() == phi(N)
struct CycloNum
{
	long level = 1;
	std::vector<Rat> coeffs;

	bool operator==(const CycloNum &o) const
	{
		return level == o.level && coeffs == o.coeffs;
	}
	bool operator<(const CycloNum &o) const
	{
		if (level != o.level)
			return level < o.level;
		return coeffs < o.coeffs;
	}
};

class CyclotomicField
{
  public:
	using Elem = CycloNum;

	explicit CyclotomicField(long level) : level_(level)
	{
		if (level < 1)
			throw std::invalid_argument("CyclotomicField: level must be >= 1");
		const IntPoly &phi = cyclotomic_polynomial(level);
		deg_ = long(phi.size()) - 1;
		modulus_.assign(phi.begin(), phi.end());
	}

	long level() const { return level_; }
	long degree() const { return deg_; }

	Elem zero() const { return CycloNum{level_, std::vector<Rat>(deg_, Rat(0))}; }
	Elem one() const { return from_int(1); }
	Elem from_int(const Int &n) const
	{
		auto r = zero();
		r.coeffs[0] = Rat(n);
		return r;
	}
	Elem from_rat(const Rat &q) const
	{
		auto r = zero();
		r.coeffs[0] = q;
		return r;
	}

	// class of x^k, k arbitrary integer
	Elem zeta_power(long k) const
	{
		k = mod_floor(k, level_);
		std::vector<Rat> poly(size_t(k) + 1, Rat(0));
		poly[k] = 1;
		return reduce(std::move(poly));
	}

	Elem add(const Elem &a, const Elem &b) const
	{
		check(a), check(b);
		Elem r = a;
		for (long i = 0; i < deg_; ++i)
			r.coeffs[i] += b.coeffs[i];
		return r;
	}
	Elem sub(const Elem &a, const Elem &b) const
	{
		check(a), check(b);
		Elem r = a;
		for (long i = 0; i < deg_; ++i)
			r.coeffs[i] -= b.coeffs[i];
		return r;
	}
	Elem neg(const Elem &a) const
	{
		check(a);
		Elem r = a;
		for (auto &c : r.coeffs)
			c = -c;
		return r;
	}
	Elem mul(const Elem &a, const Elem &b) const
	{
		check(a), check(b);
		std::vector<Rat> prod(size_t(2 * deg_ - 1 > 0 ? 2 * deg_ - 1 : 1),
		                      Rat(0));
		for (long i = 0; i < deg_; ++i)
		{
			if (a.coeffs[i] == 0)
				continue;
			for (long j = 0; j < deg_; ++j)
				if (b.coeffs[j] != 0)
					prod[i + j] += a.coeffs[i] * b.coeffs[j];
		}
		return reduce(std::move(prod));
	}
	bool is_zero(const Elem &a) const
	{
		check(a);
		for (const auto &c : a.coeffs)
			if (c != 0)
				return false;
		return true;
	}
	bool eq(const Elem &a, const Elem &b) const
	{
		check(a), check(b);
		return a.coeffs == b.coeffs;
	}

	// extended Euclid against Phi_N (irreducible over Q)
	Elem inv(const Elem &a) const
	{
		check(a);
		if (is_zero(a))
			throw std::domain_error("CyclotomicField::inv: zero");
		std::vector<Rat> r0(modulus_.begin(), modulus_.end());
		std::vector<Rat> r1 = a.coeffs;
		trim(r1);
		std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
		while (true)
		{
			// r0 = q r1 + r2
			std::vector<Rat> rem = r0;
			std::vector<Rat> q(rem.size() >= r1.size()
			                       ? rem.size() - r1.size() + 1
			                       : 1,
			                   Rat(0));
			while (rem.size() >= r1.size() && !rem.empty())
			{
				Rat c = rem.back() / r1.back();
				size_t shift = rem.size() - r1.size();
				q[shift] += c;
				for (size_t i = 0; i < r1.size(); ++i)
					rem[shift + i] -= c * r1[i];
				trim(rem);
			}
			// s2 = s0 - q s1
			std::vector<Rat> qs = poly_mul(q, s1);
			std::vector<Rat> s2 = s0;
			if (s2.size() < qs.size())
				s2.resize(qs.size(), Rat(0));
			for (size_t i = 0; i < qs.size(); ++i)
				s2[i] -= qs[i];
			trim(s2);
			if (rem.empty())
			{
				// r1 is the gcd: a nonzero constant (Phi_N irreducible)
				if (r1.size() != 1)
					throw std::logic_error(
					    "CyclotomicField::inv: unexpected gcd degree");
				std::vector<Rat> res = s1;
				for (auto &c : res)
					c /= r1[0];
				return reduce(std::move(res));
			}
			r0 = std::move(r1);
			r1 = std::move(rem);
			s0 = std::move(s1);
			s1 = std::move(s2);
		}
	}

	// embedding Q(zeta_M) -> Q(zeta_L) for M | L: zeta_M -> zeta_L^{L/M}
	Elem embed(const CycloNum &a) const
	{
		if (level_ % a.level != 0)
			throw std::invalid_argument("CyclotomicField::embed: level mismatch");
		long k = level_ / a.level;
		Elem r = zero();
		for (size_t i = 0; i < a.coeffs.size(); ++i)
		{
			if (a.coeffs[i] == 0)
				continue;
			Elem term = zeta_power(long(i) * k);
			for (long j = 0; j < deg_; ++j)
				r.coeffs[j] += a.coeffs[i] * term.coeffs[j];
		}
		return r;
	}

	long characteristic() const { return 0; }
	FieldTag tag() const { return FieldTag::QCyclo(level_); }

	std::string to_string(const Elem &a) const
	{
		check(a);
		std::ostringstream os;
		bool first = true;
		for (long i = 0; i < deg_; ++i)
		{
			if (a.coeffs[i] == 0)
				continue;
			if (!first)
				os << " + ";
			os << a.coeffs[i];
			if (i > 0)
				os << "*z^" << i;
			first = false;
		}
		if (first)
			os << "0";
		return os.str();
	}

  private:
	long level_, deg_;
	std::vector<Int> modulus_;

	void check(const Elem &a) const
	{
		if (a.level != level_ || long(a.coeffs.size()) != deg_)
			throw std::invalid_argument("CycloNum: level mismatch");
	}

	static void trim(std::vector<Rat> &p)
	{
		while (!p.empty() && p.back() == 0)
			p.pop_back();
	}

	static std::vector<Rat> poly_mul(const std::vector<Rat> &a,
	                                 const std::vector<Rat> &b)
	{
		if (a.empty() || b.empty())
			return {};
		std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
		for (size_t i = 0; i < a.size(); ++i)
			for (size_t j = 0; j < b.size(); ++j)
				r[i + j] += a[i] * b[j];
		trim(r);
		return r;
	}

	Elem reduce(std::vector<Rat> poly) const
	{
		for (long i = long(poly.size()) - 1; i >= deg_; --i)
		{
			Rat c = poly[i];
			if (c == 0)
				continue;
			// poly -= c * x^{i-deg} * Phi
			for (long j = 0; j <= deg_; ++j)
				poly[i - deg_ + j] -= c * Rat(modulus_[j]);
		}
		Elem r = zero();
		for (long i = 0; i < deg_ && i < long(poly.size()); ++i)
			r.coeffs[i] = poly[i];
		return r;
	}
};

// cyclo_inverse on a bare CycloNum, at its own level
inline CycloNum cyclo_inverse(const CycloNum &a)
{
	CyclotomicField f(a.level);
	return f.inv(a);
}

} // namespace nilpo
