#pragma once

#include "nilpo/fields.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <vector>

namespace nilpo {

// Total order on monomials, compatible with multiplication. grevlex is the
// working order; lex is kept for diagnostics.
struct MonomialOrder
{
	enum class Kind
	{
		grevlex,
		lex
	};
	Kind kind = Kind::grevlex;
	std::vector<int> perm; // optional variable permutation, empty = identity

	static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }
	static MonomialOrder lex() { return {Kind::lex, {}}; }

	// true if a < b
	bool less(const std::vector<int> &a, const std::vector<int> &b) const
	{
		size_t n = a.size();
		auto at = [&](const std::vector<int> &v, size_t i) {
			return perm.empty() ? v[i] : v[perm[i]];
		};
		if (kind == Kind::lex)
		{
			for (size_t i = 0; i < n; ++i)
				if (at(a, i) != at(b, i))
					return at(a, i) < at(b, i);
			return false;
		}
		long da = std::accumulate(a.begin(), a.end(), 0L);
		long db = std::accumulate(b.begin(), b.end(), 0L);
		if (da != db)
			return da < db;
		for (size_t i = n; i-- > 0;)
			if (at(a, i) != at(b, i))
				return at(a, i) > at(b, i);
		return false;
	}
};

// Sparse polynomial with nonnegative exponents over an exact field F.
template <typename F> class MPoly
{
  public:
	using Elem = typename F::Elem;
	using Terms = std::map<std::vector<int>, Elem>;

	MPoly() : nvars_(0) {}
	explicit MPoly(int nvars) : nvars_(nvars) {}

	static MPoly constant(const F &f, int nvars, const Elem &c)
	{
		MPoly p(nvars);
		p.add_term(f, std::vector<int>(nvars, 0), c);
		return p;
	}
	static MPoly one(const F &f, int nvars)
	{
		return constant(f, nvars, f.one());
	}
	static MPoly variable(const F &f, int nvars, int v)
	{
		MPoly p(nvars);
		std::vector<int> e(nvars, 0);
		e.at(v) = 1;
		p.add_term(f, e, f.one());
		return p;
	}

	int nvars() const { return nvars_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const F &f, const std::vector<int> &exp, const Elem &c)
	{
		if (f.is_zero(c))
			return;
		for (int e : exp)
			if (e < 0)
				throw std::invalid_argument("MPoly: negative exponent");
		auto it = terms_.find(exp);
		if (it == terms_.end())
			terms_.emplace(exp, c);
		else
		{
			it->second = f.add(it->second, c);
			if (f.is_zero(it->second))
				terms_.erase(it);
		}
	}

	MPoly add(const F &f, const MPoly &o) const
	{
		MPoly r = *this;
		for (const auto &[e, c] : o.terms_)
			r.add_term(f, e, c);
		return r;
	}
	MPoly sub(const F &f, const MPoly &o) const
	{
		MPoly r = *this;
		for (const auto &[e, c] : o.terms_)
			r.add_term(f, e, f.neg(c));
		return r;
	}
	MPoly mul(const F &f, const MPoly &o) const
	{
		MPoly r(nvars_);
		for (const auto &[e1, c1] : terms_)
			for (const auto &[e2, c2] : o.terms_)
			{
				std::vector<int> e = e1;
				for (int i = 0; i < nvars_; ++i)
					e[i] += e2[i];
				r.add_term(f, e, f.mul(c1, c2));
			}
		return r;
	}
	MPoly scale(const F &f, const Elem &c) const
	{
		MPoly r(nvars_);
		for (const auto &[e, k] : terms_)
			r.add_term(f, e, f.mul(k, c));
		return r;
	}
	MPoly mul_monomial(const F &f, const std::vector<int> &exp,
	                   const Elem &c) const
	{
		MPoly r(nvars_);
		for (const auto &[e, k] : terms_)
		{
			std::vector<int> ne = e;
			for (int i = 0; i < nvars_; ++i)
				ne[i] += exp[i];
			r.add_term(f, ne, f.mul(k, c));
		}
		return r;
	}

	const std::vector<int> &lead_monomial(const MonomialOrder &ord) const
	{
		if (terms_.empty())
			throw std::logic_error("MPoly: lead of zero");
		auto best = terms_.begin();
		for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
			if (ord.less(best->first, it->first))
				best = it;
		return best->first;
	}
	const Elem &lead_coeff(const MonomialOrder &ord) const
	{
		return terms_.at(lead_monomial(ord));
	}

	MPoly monic(const F &f, const MonomialOrder &ord) const
	{
		if (is_zero())
			return *this;
		return scale(f, f.inv(lead_coeff(ord)));
	}

	bool eq(const MPoly &o) const
	{
		return nvars_ == o.nvars_ && terms_ == o.terms_;
	}
	bool operator<(const MPoly &o) const
	{
		if (nvars_ != o.nvars_)
			return nvars_ < o.nvars_;
		return terms_ < o.terms_;
	}

	std::string to_string(const F &f,
	                      const std::vector<std::string> &names) const
	{
		if (terms_.empty())
			return "0";
		std::ostringstream os;
		bool first = true;
		for (const auto &[e, c] : terms_)
		{
			if (!first)
				os << " + ";
			os << "(" << f.to_string(c) << ")";
			for (int i = 0; i < nvars_; ++i)
				if (e[i] != 0)
				{
					os << "*" << names[i];
					if (e[i] != 1)
						os << "^" << e[i];
				}
			first = false;
		}
		return os.str();
	}

  private:
	int nvars_;
	Terms terms_;
};

inline bool monomial_divides(const std::vector<int> &a,
                             const std::vector<int> &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] > b[i])
			return false;
	return true;
}

} // namespace nilpo
