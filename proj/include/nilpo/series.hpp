#pragma once

#include "nilpo/fields.hpp"
#include "nilpo/fox.hpp"
#include "nilpo/groebner.hpp"
#include "nilpo/laurent.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace nilpo {

// Multivariate power series over F truncated at total degree cap.
template <typename F> class TruncSeries
{
  public:
	using Elem = typename F::Elem;
	using Terms = std::map<std::vector<int>, Elem>;

	TruncSeries() : nvars_(0), cap_(0) {}
	TruncSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {}

	static TruncSeries constant(const F &f, int nvars, int cap, const Elem &c)
	{
		TruncSeries s(nvars, cap);
		s.add_term(f, std::vector<int>(nvars, 0), c);
		return s;
	}
	static TruncSeries one(const F &f, int nvars, int cap)
	{
		return constant(f, nvars, cap, f.one());
	}

	int nvars() const { return nvars_; }
	int cap() const { return cap_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	static long total_degree(const std::vector<int> &e)
	{
		return std::accumulate(e.begin(), e.end(), 0L);
	}

	void add_term(const F &f, const std::vector<int> &exp, const Elem &c)
	{
		if (f.is_zero(c) || total_degree(exp) > cap_)
			return;
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

	TruncSeries add(const F &f, const TruncSeries &o) const
	{
		TruncSeries r = *this;
		for (const auto &[e, c] : o.terms_)
			r.add_term(f, e, c);
		return r;
	}
	TruncSeries sub(const F &f, const TruncSeries &o) const
	{
		TruncSeries r = *this;
		for (const auto &[e, c] : o.terms_)
			r.add_term(f, e, f.neg(c));
		return r;
	}
	TruncSeries mul(const F &f, const TruncSeries &o) const
	{
		TruncSeries r(nvars_, cap_);
		for (const auto &[e1, c1] : terms_)
			for (const auto &[e2, c2] : o.terms_)
			{
				if (total_degree(e1) + total_degree(e2) > cap_)
					continue;
				std::vector<int> e = e1;
				for (int i = 0; i < nvars_; ++i)
					e[i] += e2[i];
				r.add_term(f, e, f.mul(c1, c2));
			}
		return r;
	}
	TruncSeries scale(const F &f, const Elem &c) const
	{
		TruncSeries r(nvars_, cap_);
		for (const auto &[e, k] : terms_)
			r.add_term(f, e, f.mul(k, c));
		return r;
	}

	Elem constant_term(const F &f) const
	{
		auto it = terms_.find(std::vector<int>(nvars_, 0));
		return it == terms_.end() ? f.zero() : it->second;
	}

	// inverse of a unit (nonzero constant term), to the cap
	TruncSeries inverse(const F &f) const
	{
		Elem c0 = constant_term(f);
		if (f.is_zero(c0))
			throw std::domain_error("TruncSeries::inverse: not a unit");
		Elem c0inv = f.inv(c0);
		TruncSeries h = scale(f, c0inv);
		h.add_term(f, std::vector<int>(nvars_, 0), f.neg(f.one())); // h = g/c0 - 1
		// (1 + h)^{-1} = sum (-h)^k
		TruncSeries acc = one(f, nvars_, cap_);
		TruncSeries pw = one(f, nvars_, cap_);
		for (int k = 1; k <= cap_; ++k)
		{
			pw = pw.mul(f, h);
			if (pw.is_zero())
				break;
			acc = (k % 2 == 1) ? acc.sub(f, pw) : acc.add(f, pw);
		}
		return acc.scale(f, c0inv);
	}

	bool eq(const TruncSeries &o) const
	{
		return nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
	}

  private:
	int nvars_;
	int cap_;
	Terms terms_;
};

// least total degree with a nonzero coefficient; !exact means "at least
// value", i.e. the series vanished up to the cap
struct SeriesOrder
{
	int value = 0;
	bool exact = true;

	bool at_least(int k) const { return value >= k; }
	bool operator==(const SeriesOrder &o) const
	{
		return value == o.value && exact == o.exact;
	}
};

template <typename F> SeriesOrder series_order(const TruncSeries<F> &s)
{
	if (s.is_zero())
		return SeriesOrder{s.cap() + 1, false};
	long best = -1;
	for (const auto &[e, c] : s.terms())
	{
		(void)c;
		long d = TruncSeries<F>::total_degree(e);
		if (best < 0 || d < best)
			best = d;
	}
	return SeriesOrder{int(best), true};
}

// Magnus expansion t_i -> 1 + x_i (and t_i^{-1} to the geometric series),
// coefficients pushed through the field.
template <typename F>
TruncSeries<F> magnus(const F &f, const LaurentPoly &poly, int cap)
{
	int n = poly.nvars();
	// per-variable powers (1 + x_i)^e for the exponents that occur
	auto power_of = [&](int var, int e) {
		TruncSeries<F> base = TruncSeries<F>::one(f, n, cap);
		std::vector<int> xe(n, 0);
		xe[var] = 1;
		base.add_term(f, xe, f.one()); // 1 + x
		if (e < 0)
		{
			base = base.inverse(f);
			e = -e;
		}
		TruncSeries<F> acc = TruncSeries<F>::one(f, n, cap);
		for (int k = 0; k < e; ++k)
			acc = acc.mul(f, base);
		return acc;
	};

	TruncSeries<F> out(n, cap);
	for (const auto &[e, c] : poly.terms())
	{
		TruncSeries<F> term =
		    TruncSeries<F>::constant(f, n, cap, f.from_int(c));
		for (int i = 0; i < n; ++i)
			if (e[i] != 0)
				term = term.mul(f, power_of(i, e[i]));
		out = out.add(f, term);
	}
	return out;
}

// b_1(G, k): over Q the free rank, over F_p increased by the torsion factors
// divisible by p.
inline int b1_over_field(const AbelianStructure &ab, long p)
{
	if (p == 0)
		return ab.b1;
	if (!is_prime(p))
		throw std::invalid_argument("b1_over_field: composite characteristic");
	int extra = 0;
	for (const Int &d : ab.torsion)
		if (d % p == 0)
			++extra;
	return ab.b1 + extra;
}

inline int b1_over_field(const GroupPresentation &pres, long p)
{
	return b1_over_field(abelianize(pres), p);
}

// minimal presentation data of k[[x]] (x) A_G: t rows, n_p columns, all
// entries of positive order
template <typename F> struct MinimalAlexanderData
{
	int gens = 0; // n_p
	int rels = 0; // t
	std::vector<std::vector<TruncSeries<F>>> matrix; // rels x gens
};

// Split off the invertible block of the Magnus-expanded Fox matrix by row and
// column operations over the complete local ring, as long as some entry has a
// unit constant term.
template <typename F>
MinimalAlexanderData<F> minimize_alexander(const F &f,
                                           const AlexanderMatrix &am, int cap)
{
	int n = am.structure.b1;
	std::vector<std::vector<TruncSeries<F>>> mat;
	for (int i = 0; i < am.rows; ++i)
	{
		std::vector<TruncSeries<F>> row;
		for (int j = 0; j < am.cols; ++j)
			row.push_back(magnus(f, am.entries_free[i][j], cap));
		mat.push_back(std::move(row));
	}

	for (;;)
	{
		int pi = -1, pj = -1;
		for (size_t i = 0; i < mat.size() && pi < 0; ++i)
			for (size_t j = 0; j < (mat.empty() ? 0 : mat[0].size()); ++j)
				if (!f.is_zero(mat[i][j].constant_term(f)))
				{
					pi = int(i);
					pj = int(j);
					break;
				}
		if (pi < 0)
			break;

		TruncSeries<F> pivot_inv = mat[pi][pj].inverse(f);
		// clear the pivot column in other rows
		for (size_t i = 0; i < mat.size(); ++i)
		{
			if (int(i) == pi || mat[i][pj].is_zero())
				continue;
			TruncSeries<F> factor = mat[i][pj].mul(f, pivot_inv);
			for (size_t j = 0; j < mat[i].size(); ++j)
				mat[i][j] = mat[i][j].sub(f, factor.mul(f, mat[pi][j]));
		}
		// pivot row is now the only one with an entry in column pj; drop both
		std::vector<std::vector<TruncSeries<F>>> next;
		for (size_t i = 0; i < mat.size(); ++i)
		{
			if (int(i) == pi)
				continue;
			std::vector<TruncSeries<F>> row;
			for (size_t j = 0; j < mat[i].size(); ++j)
				if (int(j) != pj)
					row.push_back(mat[i][j]);
			next.push_back(std::move(row));
		}
		mat = std::move(next);
		if (mat.empty())
			break;
	}

	MinimalAlexanderData<F> out;
	out.rels = int(mat.size());
	out.gens = mat.empty() ? b1_over_field(am.structure, f.characteristic())
	                       : int(mat[0].size());
	(void)n;
	out.matrix = std::move(mat);
	return out;
}

// E_i(A_G), Magnus expanded over k, must sit in m^{n_p - i} when i < n_p.
template <typename F>
bool elem_order_check(const F &f, const AlexanderMatrix &am, int i,
                      int cap = -1)
{
	int np = b1_over_field(am.structure, f.characteristic());
	if (i >= np)
		throw std::invalid_argument("elem_order_check: requires i < n_p");
	if (cap < 0)
		cap = std::max(6, np + 1);
	for (const LaurentPoly &g : elementary_ideal_gens(am, i))
	{
		SeriesOrder ord = series_order(magnus(f, g, cap));
		if (!ord.at_least(np - i))
			return false;
	}
	return true;
}

enum class CheckResult
{
	Pass,
	Fail,
	NotApplicable
};

// order(magnus Delta) >= n_p - d - 1, under the almost-principality
// hypothesis with exponent d; requires n_p > d + 1 to say anything
template <typename F>
CheckResult delta1_check(const F &f, const AlexanderMatrix &am, int d,
                         int cap = -1)
{
	int np = b1_over_field(am.structure, f.characteristic());
	if (np <= d + 1)
		return CheckResult::NotApplicable;
	if (cap < 0)
		cap = std::max(6, np + 1);
	LaurentPoly delta = alexander_poly(am);
	SeriesOrder ord = series_order(magnus(f, delta, cap));
	return ord.at_least(np - d - 1) ? CheckResult::Pass : CheckResult::Fail;
}

// I^d * (Delta) included in E_1, in Q[Z^n] localized at the torus: ideal
// membership after clearing, with u * t_1..t_n = 1 adjoined so monomial
// units act invertibly.
inline bool almost_principal_check(const AlexanderMatrix &am, int d)
{
	int n = am.structure.b1;
	if (n < 1)
		throw std::invalid_argument("almost_principal_check: requires b1 >= 1");
	RationalField Q;
	std::vector<LaurentPoly> e1 = elementary_ideal_gens(am, 1);
	LaurentPoly delta = alexander_poly(am);

	int nv = n + 1; // u adjoined
	std::vector<MPoly<RationalField>> gens;
	for (const LaurentPoly &g : e1)
		gens.push_back(clear_laurent(Q, g, 1));
	{
		MPoly<RationalField> torus(nv);
		std::vector<int> e(nv, 1);
		torus.add_term(Q, e, Q.one());
		torus.add_term(Q, std::vector<int>(nv, 0), Q.neg(Q.one()));
		gens.push_back(torus);
	}
	auto gb = buchberger(Q, gens);

	// all monomials of degree d in the (t_i - 1)
	std::vector<LaurentPoly> factors;
	for (int i = 0; i < n; ++i)
		factors.push_back(LaurentPoly::variable(n, i) -
		                  LaurentPoly::constant(n, 1));
	std::vector<std::vector<int>> exps;
	std::vector<int> cur(n, 0);
	std::function<void(int, int)> enumerate = [&](int pos, int left) {
		if (pos == n)
		{
			if (left == 0)
				exps.push_back(cur);
			return;
		}
		for (int k = 0; k <= left; ++k)
		{
			cur[pos] = k;
			enumerate(pos + 1, left - k);
		}
		cur[pos] = 0;
	};
	enumerate(0, d);

	for (const auto &beta : exps)
	{
		LaurentPoly prod = delta;
		for (int i = 0; i < n; ++i)
			for (int k = 0; k < beta[i]; ++k)
				prod = prod * factors[i];
		MPoly<RationalField> cleared = clear_laurent(Q, prod, 1);
		if (!normal_form(Q, cleared, gb, MonomialOrder::grevlex()).is_zero())
			return false;
	}
	return true;
}

inline bool almost_principal_check(const GroupPresentation &p, int d)
{
	return almost_principal_check(alexander_matrix(p), d);
}

// dispatch helpers on FieldTag for the characteristic-p checks
template <typename Fn> auto with_field(const FieldTag &tag, Fn &&fn)
{
	switch (tag.kind)
	{
	case FieldTag::Kind::rationals:
		return fn(RationalField{});
	case FieldTag::Kind::prime:
		return fn(PrimeField(tag.p));
	case FieldTag::Kind::cyclotomic:
		return fn(CyclotomicField(tag.level));
	}
	throw std::logic_error("with_field: bad tag");
}

inline bool elem_order_check(const FieldTag &tag, const AlexanderMatrix &am,
                             int i, int cap = -1)
{
	return with_field(tag, [&](const auto &f) {
		return elem_order_check(f, am, i, cap);
	});
}

inline CheckResult delta1_check(const FieldTag &tag, const AlexanderMatrix &am,
                                int d, int cap = -1)
{
	return with_field(tag,
	                  [&](const auto &f) { return delta1_check(f, am, d, cap); });
}

} // namespace nilpo
