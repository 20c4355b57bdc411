#pragma once

#include "nilpo/character.hpp"
#include "nilpo/fields.hpp"
#include "nilpo/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nilpo {

// Sparse multivariate Laurent polynomial over Z. Exponent vectors may be
// negative; no zero coefficients are stored.
class LaurentPoly
{
  public:
	using Terms = std::map<std::vector<int>, Int>;

	LaurentPoly() : nvars_(0) {}
	explicit LaurentPoly(int nvars) : nvars_(nvars) {}

	static LaurentPoly constant(int nvars, const Int &c)
	{
		LaurentPoly f(nvars);
		f.add_term(std::vector<int>(nvars, 0), c);
		return f;
	}
	static LaurentPoly monomial(int nvars, const std::vector<int> &exp,
	                            const Int &c)
	{
		LaurentPoly f(nvars);
		f.add_term(exp, c);
		return f;
	}
	static LaurentPoly variable(int nvars, int v, int power = 1)
	{
		std::vector<int> e(nvars, 0);
		e.at(v) = power;
		return monomial(nvars, e, 1);
	}

	int nvars() const { return nvars_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t nterms() const { return terms_.size(); }

	bool is_constant() const
	{
		if (terms_.empty())
			return true;
		return terms_.size() == 1 &&
		       terms_.begin()->first == std::vector<int>(nvars_, 0);
	}
	// nonzero constant * monomial, i.e. a unit multiple of an integer
	bool is_single_term() const { return terms_.size() == 1; }

	Int constant_term() const
	{
		auto it = terms_.find(std::vector<int>(nvars_, 0));
		return it == terms_.end() ? Int(0) : it->second;
	}

	void add_term(const std::vector<int> &exp, const Int &c)
	{
		if (c == 0)
			return;
		if (int(exp.size()) != nvars_)
			throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
		auto [it, fresh] = terms_.emplace(exp, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	LaurentPoly operator+(const LaurentPoly &o) const
	{
		check_arity(o);
		LaurentPoly r = *this;
		for (const auto &[e, c] : o.terms_)
			r.add_term(e, c);
		return r;
	}
	LaurentPoly operator-(const LaurentPoly &o) const
	{
		check_arity(o);
		LaurentPoly r = *this;
		for (const auto &[e, c] : o.terms_)
			r.add_term(e, -c);
		return r;
	}
	LaurentPoly operator-() const
	{
		LaurentPoly r(nvars_);
		for (const auto &[e, c] : terms_)
			r.terms_.emplace(e, -c);
		return r;
	}
	LaurentPoly operator*(const LaurentPoly &o) const
	{
		check_arity(o);
		LaurentPoly r(nvars_);
		for (const auto &[e1, c1] : terms_)
			for (const auto &[e2, c2] : o.terms_)
			{
				std::vector<int> e = e1;
				for (int i = 0; i < nvars_; ++i)
					e[i] += e2[i];
				r.add_term(e, c1 * c2);
			}
		return r;
	}
	LaurentPoly operator*(const Int &c) const
	{
		LaurentPoly r(nvars_);
		if (c == 0)
			return r;
		for (const auto &[e, k] : terms_)
			r.terms_.emplace(e, k * c);
		return r;
	}

	bool operator==(const LaurentPoly &o) const
	{
		return nvars_ == o.nvars_ && terms_ == o.terms_;
	}
	bool operator!=(const LaurentPoly &o) const { return !(*this == o); }
	bool operator<(const LaurentPoly &o) const
	{
		if (nvars_ != o.nvars_)
			return nvars_ < o.nvars_;
		return terms_ < o.terms_;
	}

	// value at t_i = 1 for all i
	Int evaluate_at_one() const
	{
		Int s = 0;
		for (const auto &[e, c] : terms_)
			s += c;
		return s;
	}

	// multiply by the monomial t^shift
	LaurentPoly shifted(const std::vector<int> &shift) const
	{
		LaurentPoly r(nvars_);
		for (const auto &[e, c] : terms_)
		{
			std::vector<int> ne = e;
			for (int i = 0; i < nvars_; ++i)
				ne[i] += shift[i];
			r.terms_.emplace(ne, c);
		}
		return r;
	}

	std::vector<int> min_exponents() const
	{
		std::vector<int> m(nvars_, 0);
		bool first = true;
		for (const auto &[e, c] : terms_)
		{
			(void)c;
			if (first)
			{
				m = e;
				first = false;
			}
			else
				for (int i = 0; i < nvars_; ++i)
					m[i] = std::min(m[i], e[i]);
		}
		return m;
	}

  private:
	int nvars_;
	Terms terms_;

	void check_arity(const LaurentPoly &o) const
	{
		if (nvars_ != o.nvars_)
			throw std::invalid_argument("LaurentPoly: arity mismatch");
	}
};

// ---------------------------------------------------------------------------
// unit normalization

// Canonical associate: minimal exponent per variable shifted to 0, sign fixed
// so the lexicographically greatest term has positive coefficient. Associates
// normalize identically; 0 stays 0.
inline LaurentPoly normalize_unit(const LaurentPoly &f)
{
	if (f.is_zero())
		return f;
	std::vector<int> shift = f.min_exponents();
	for (int &s : shift)
		s = -s;
	LaurentPoly g = f.shifted(shift);
	const auto &lead = *g.terms().rbegin(); // map order = lex on exponents
	if (lead.second < 0)
		return -g;
	return g;
}

// ---------------------------------------------------------------------------
// gcd in Z[t_1^{+-1}, ..., t_n^{+-1}]

namespace detail {

// helpers below operate on polynomial parts (all exponents >= 0)

inline int degree_in(const LaurentPoly &f, int v)
{
	int d = 0;
	for (const auto &[e, c] : f.terms())
	{
		(void)c;
		d = std::max(d, e[v]);
	}
	return d;
}

inline int top_effective_var(const LaurentPoly &a, const LaurentPoly &b)
{
	for (int v = a.nvars() - 1; v >= 0; --v)
		if (degree_in(a, v) > 0 || degree_in(b, v) > 0)
			return v;
	return -1;
}

// coefficient of v^d, with the v entry zeroed
inline LaurentPoly coeff_of(const LaurentPoly &f, int v, int d)
{
	LaurentPoly r(f.nvars());
	for (const auto &[e, c] : f.terms())
		if (e[v] == d)
		{
			std::vector<int> ne = e;
			ne[v] = 0;
			r.add_term(ne, c);
		}
	return r;
}

inline LaurentPoly times_var_power(const LaurentPoly &f, int v, int d)
{
	std::vector<int> shift(f.nvars(), 0);
	shift[v] = d;
	return f.shifted(shift);
}

// exact division of polynomial parts; nullopt if not divisible over Z
inline std::optional<LaurentPoly> exact_divide(LaurentPoly f,
                                               const LaurentPoly &g)
{
	if (g.is_zero())
		return std::nullopt;
	LaurentPoly q(f.nvars());
	const auto &glead = *g.terms().rbegin();
	while (!f.is_zero())
	{
		const auto &flead = *f.terms().rbegin();
		std::vector<int> e = flead.first;
		bool ok = true;
		for (int i = 0; i < f.nvars(); ++i)
		{
			e[i] -= glead.first[i];
			if (e[i] < 0)
				ok = false;
		}
		if (!ok || flead.second % glead.second != 0)
			return std::nullopt;
		LaurentPoly t =
		    LaurentPoly::monomial(f.nvars(), e, flead.second / glead.second);
		q = q + t;
		f = f - t * g;
	}
	return q;
}

LaurentPoly zpoly_gcd(const LaurentPoly &a, const LaurentPoly &b);

// gcd of the coefficients of f viewed in variable v
inline LaurentPoly content_wrt(const LaurentPoly &f, int v)
{
	LaurentPoly g(f.nvars());
	for (int d = 0; d <= degree_in(f, v); ++d)
	{
		LaurentPoly c = coeff_of(f, v, d);
		if (!c.is_zero())
			g = g.is_zero() ? c : zpoly_gcd(g, c);
	}
	return g;
}

// canonical sign: lexicographically greatest term positive
inline LaurentPoly canon_sign(const LaurentPoly &f)
{
	if (f.is_zero())
		return f;
	if (f.terms().rbegin()->second < 0)
		return -f;
	return f;
}

// exact pseudo-remainder lc(b)^{delta+1} a mod b in variable v
inline LaurentPoly prem(LaurentPoly r, const LaurentPoly &b, int v)
{
	int db = degree_in(b, v);
	int delta = degree_in(r, v) - db;
	LaurentPoly lb = coeff_of(b, v, db);
	int steps = 0;
	while (!r.is_zero() && degree_in(r, v) >= db)
	{
		int dr = degree_in(r, v);
		LaurentPoly lr = coeff_of(r, v, dr);
		r = r * lb - times_var_power(lr, v, dr - db) * b;
		++steps;
	}
	for (; steps < delta + 1; ++steps)
		r = r * lb;
	return r;
}

inline LaurentPoly poly_power(const LaurentPoly &f, int e)
{
	LaurentPoly r = LaurentPoly::constant(f.nvars(), 1);
	for (int i = 0; i < e; ++i)
		r = r * f;
	return r;
}

// subresultant pseudo-remainder sequence in the top effective variable, with
// content/primitive-part recursion over the remaining ones
inline LaurentPoly zpoly_gcd(const LaurentPoly &a, const LaurentPoly &b)
{
	if (a.is_zero())
		return canon_sign(b);
	if (b.is_zero())
		return canon_sign(a);
	int v = top_effective_var(a, b);
	if (v < 0)
	{
		// both are integer constants
		return LaurentPoly::constant(a.nvars(),
		                             int_gcd(a.constant_term(),
		                                     b.constant_term()));
	}

	LaurentPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
	LaurentPoly c = zpoly_gcd(ca, cb);
	LaurentPoly A = *exact_divide(a, ca);
	LaurentPoly B = *exact_divide(b, cb);
	if (degree_in(A, v) < degree_in(B, v))
		std::swap(A, B);

	LaurentPoly g = LaurentPoly::constant(a.nvars(), 1);
	LaurentPoly h = g;
	for (;;)
	{
		int delta = degree_in(A, v) - degree_in(B, v);
		LaurentPoly r = prem(A, B, v);
		if (r.is_zero())
			break;
		if (degree_in(r, v) == 0)
			return canon_sign(c); // primitive parts are coprime in v
		A = B;
		B = *exact_divide(r, g * poly_power(h, delta));
		g = coeff_of(A, v, degree_in(A, v));
		if (delta > 0)
			h = *exact_divide(poly_power(g, delta), poly_power(h, delta - 1));
	}
	LaurentPoly pb = *exact_divide(B, content_wrt(B, v));
	return canon_sign(c * pb);
}

} // namespace detail

// Normalized gcd in the Laurent ring; gcd(0, g) is the canonical associate of
// g, gcd(0, 0) = 0.
inline LaurentPoly laurent_gcd(const LaurentPoly &f, const LaurentPoly &g)
{
	if (f.is_zero() && g.is_zero())
		return f;
	if (f.is_zero())
		return normalize_unit(g);
	if (g.is_zero())
		return normalize_unit(f);
	return normalize_unit(detail::zpoly_gcd(normalize_unit(f), normalize_unit(g)));
}

// exact-divisibility witness in the Laurent ring (up to units)
inline bool laurent_divides(const LaurentPoly &d, const LaurentPoly &f)
{
	if (f.is_zero())
		return true;
	if (d.is_zero())
		return false;
	return detail::exact_divide(normalize_unit(f), normalize_unit(d)).has_value();
}

// ---------------------------------------------------------------------------
// evaluation at a torsion character (free part only; the poly lives in
// Z[t_1.., t_n] with n = b1)

inline CycloNum evaluate(const LaurentPoly &f, const Character &chi)
{
	if (int(chi.free_exp.size()) != f.nvars())
		throw std::invalid_argument("evaluate: character arity mismatch");
	CyclotomicField F(chi.level);
	CycloNum acc = F.zero();
	for (const auto &[e, c] : f.terms())
	{
		long zexp = 0;
		for (int i = 0; i < f.nvars(); ++i)
			zexp = mod_floor(zexp + e[i] * mod_floor(chi.free_exp[i], chi.level),
			                 chi.level);
		CycloNum term = F.mul(F.from_int(c), F.zeta_power(zexp));
		acc = F.add(acc, term);
	}
	return acc;
}

// ---------------------------------------------------------------------------
// the V(Delta) trichotomy used for nilpotent groups: empty torus zero set,
// exactly the identity, or bigger

enum class VarietySize
{
	EmptyVariety,
	ExactlyOne,
	Larger
};

inline VarietySize delta_variety_in_one(const LaurentPoly &f)
{
	int n = f.nvars();
	if (n == 0)
		return f.is_zero() ? VarietySize::ExactlyOne : VarietySize::EmptyVariety;
	if (f.is_zero())
		return VarietySize::Larger;
	if (f.is_single_term())
		return VarietySize::EmptyVariety; // units and nonzero scalars
	if (n >= 2)
		return VarietySize::Larger; // a hypersurface cannot sit inside a point
	// n = 1: divide out (t - 1)^e and inspect what is left
	LaurentPoly g = normalize_unit(f);
	LaurentPoly tm1 = LaurentPoly::variable(1, 0) - LaurentPoly::constant(1, 1);
	int e = 0;
	while (g.evaluate_at_one() == 0)
	{
		g = *detail::exact_divide(g, tm1);
		++e;
	}
	if (e >= 1 && g.is_single_term())
		return VarietySize::ExactlyOne;
	return VarietySize::Larger;
}

// ---------------------------------------------------------------------------
// text rendering ("t^2 - t + 1", variables t for n = 1 and t1..tn otherwise)
// and parsing

inline std::vector<std::string> default_var_names(int n)
{
	if (n == 1)
		return {"t"};
	std::vector<std::string> names;
	for (int i = 0; i < n; ++i)
		names.push_back("t" + std::to_string(i + 1));
	return names;
}

inline std::string to_string(const LaurentPoly &f,
                             std::vector<std::string> names = {})
{
	if (f.is_zero())
		return "0";
	if (names.empty())
		names = default_var_names(f.nvars());

	// display in graded-lex order, highest first
	std::vector<std::pair<std::vector<int>, Int>> terms(f.terms().begin(),
	                                                    f.terms().end());
	auto grlex = [](const std::vector<int> &a, const std::vector<int> &b) {
		long da = 0, db = 0;
		for (int x : a)
			da += x;
		for (int x : b)
			db += x;
		if (da != db)
			return da > db;
		return a > b;
	};
	std::sort(terms.begin(), terms.end(),
	          [&](const auto &x, const auto &y) { return grlex(x.first, y.first); });

	std::ostringstream os;
	bool first = true;
	for (const auto &[e, c] : terms)
	{
		Int a = c;
		if (first)
		{
			if (a < 0)
			{
				os << "-";
				a = -a;
			}
		}
		else
		{
			os << (a < 0 ? " - " : " + ");
			if (a < 0)
				a = -a;
		}
		first = false;

		std::vector<std::string> factors;
		for (int i = 0; i < f.nvars(); ++i)
		{
			if (e[i] == 0)
				continue;
			std::string s = names[i];
			if (e[i] != 1)
				s += "^" + std::to_string(e[i]);
			factors.push_back(s);
		}
		if (factors.empty())
			os << a;
		else
		{
			if (a != 1)
				os << a << "*";
			for (size_t i = 0; i < factors.size(); ++i)
			{
				if (i)
					os << "*";
				os << factors[i];
			}
		}
	}
	return os.str();
}

// parses the rendering above; accepts "t" as alias for "t1"
inline LaurentPoly parse_laurent(const std::string &text, int nvars)
{
	LaurentPoly out(nvars);
	size_t pos = 0;
	auto skip = [&] {
		while (pos < text.size() && std::isspace(unsigned(text[pos])))
			++pos;
	};
	auto fail = [&](const std::string &msg) -> void {
		throw std::invalid_argument("parse_laurent: " + msg + " at position " +
		                            std::to_string(pos));
	};

	skip();
	bool first = true;
	while (pos < text.size())
	{
		int sign = 1;
		skip();
		if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
		{
			sign = text[pos] == '-' ? -1 : 1;
			++pos;
		}
		else if (!first)
			fail("expected '+' or '-'");
		skip();

		Int coeff = 1;
		bool have_coeff = false;
		if (pos < text.size() && std::isdigit(unsigned(text[pos])))
		{
			size_t s0 = pos;
			while (pos < text.size() && std::isdigit(unsigned(text[pos])))
				++pos;
			coeff = Int(text.substr(s0, pos - s0));
			have_coeff = true;
		}
		std::vector<int> exp(nvars, 0);
		bool have_var = false;
		for (;;)
		{
			skip();
			if (pos < text.size() && text[pos] == '*')
			{
				++pos;
				skip();
			}
			if (pos >= text.size() || text[pos] != 't')
				break;
			++pos;
			int var = 0;
			if (pos < text.size() && std::isdigit(unsigned(text[pos])))
			{
				size_t s0 = pos;
				while (pos < text.size() && std::isdigit(unsigned(text[pos])))
					++pos;
				var = std::stoi(text.substr(s0, pos - s0)) - 1;
			}
			if (var < 0 || var >= nvars)
				fail("variable index out of range");
			int power = 1;
			if (pos < text.size() && text[pos] == '^')
			{
				++pos;
				size_t s0 = pos;
				if (pos < text.size() && text[pos] == '-')
					++pos;
				while (pos < text.size() && std::isdigit(unsigned(text[pos])))
					++pos;
				if (pos == s0 + (text[s0] == '-' ? 1 : 0))
					fail("expected exponent");
				power = std::stoi(text.substr(s0, pos - s0));
			}
			exp[var] += power;
			have_var = true;
		}
		if (!have_coeff && !have_var)
			fail("expected a term");
		out.add_term(exp, sign > 0 ? coeff : Int(-coeff));
		first = false;
		skip();
	}
	return out;
}

} // namespace nilpo
