#pragma once

#include "nilpo/laurent.hpp"
#include "nilpo/mpoly.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace nilpo {

// Full normal form of f against a list of polynomials.
template <typename F>
MPoly<F> normal_form(const F &field, MPoly<F> f,
                     const std::vector<MPoly<F>> &basis,
                     const MonomialOrder &ord)
{
	MPoly<F> rem(f.nvars());
	while (!f.is_zero())
	{
		std::vector<int> lm = f.lead_monomial(ord);
		typename F::Elem lc = f.lead_coeff(ord);
		bool reduced = false;
		for (const MPoly<F> &g : basis)
		{
			if (g.is_zero())
				continue;
			const std::vector<int> &glm = g.lead_monomial(ord);
			if (!monomial_divides(glm, lm))
				continue;
			std::vector<int> q = lm;
			for (size_t i = 0; i < q.size(); ++i)
				q[i] -= glm[i];
			typename F::Elem c =
			    field.neg(field.mul(lc, field.inv(g.lead_coeff(ord))));
			f = f.add(field, g.mul_monomial(field, q, c));
			reduced = true;
			break;
		}
		if (!reduced)
		{
			rem.add_term(field, lm, lc);
			f.add_term(field, lm, field.neg(lc));
		}
	}
	return rem;
}

namespace detail {

template <typename F>
MPoly<F> s_poly(const F &field, const MPoly<F> &a, const MPoly<F> &b,
                const MonomialOrder &ord)
{
	const std::vector<int> &la = a.lead_monomial(ord);
	const std::vector<int> &lb = b.lead_monomial(ord);
	std::vector<int> ga = la, gb = lb;
	for (size_t i = 0; i < la.size(); ++i)
	{
		int l = std::max(la[i], lb[i]);
		ga[i] = l - la[i];
		gb[i] = l - lb[i];
	}
	MPoly<F> ta =
	    a.mul_monomial(field, ga, field.inv(a.lead_coeff(ord)));
	MPoly<F> tb =
	    b.mul_monomial(field, gb, field.inv(b.lead_coeff(ord)));
	return ta.sub(field, tb);
}

inline bool coprime_leads(const std::vector<int> &a, const std::vector<int> &b)
{
	for (size_t i = 0; i < a.size(); ++i)
		if (a[i] > 0 && b[i] > 0)
			return false;
	return true;
}

} // namespace detail

namespace detail {

inline std::vector<int> monomial_lcm(const std::vector<int> &a,
                                     const std::vector<int> &b)
{
	std::vector<int> l(a.size());
	for (size_t i = 0; i < a.size(); ++i)
		l[i] = std::max(a[i], b[i]);
	return l;
}

} // namespace detail

// Buchberger with the normal selection strategy (least lcm first) and the
// two classical pair criteria, then full interreduction; the result is the
// reduced Groebner basis (monic, sorted), so it is independent of generator
// order.
template <typename F>
std::vector<MPoly<F>> buchberger(const F &field,
                                 std::vector<MPoly<F>> gens,
                                 const MonomialOrder &ord = MonomialOrder::grevlex())
{
	std::vector<MPoly<F>> basis;
	for (auto &g : gens)
		if (!g.is_zero())
			basis.push_back(g.monic(field, ord));
	if (basis.empty())
		return {};

	// pending pairs keyed by their lcm in the monomial order
	auto cmp = [&ord](const std::tuple<std::vector<int>, size_t, size_t> &a,
	                  const std::tuple<std::vector<int>, size_t, size_t> &b) {
		const auto &la = std::get<0>(a);
		const auto &lb = std::get<0>(b);
		if (la != lb)
			return ord.less(la, lb);
		if (std::get<1>(a) != std::get<1>(b))
			return std::get<1>(a) < std::get<1>(b);
		return std::get<2>(a) < std::get<2>(b);
	};
	std::set<std::tuple<std::vector<int>, size_t, size_t>, decltype(cmp)>
	    pairs(cmp);
	std::set<std::pair<size_t, size_t>> pending;
	auto push_pair = [&](size_t i, size_t j) {
		if (i > j)
			std::swap(i, j);
		pairs.insert({detail::monomial_lcm(basis[i].lead_monomial(ord),
		                                   basis[j].lead_monomial(ord)),
		              i, j});
		pending.insert({i, j});
	};
	for (size_t i = 0; i < basis.size(); ++i)
		for (size_t j = i + 1; j < basis.size(); ++j)
			push_pair(i, j);

	while (!pairs.empty())
	{
		auto [lcm, i, j] = *pairs.begin();
		pairs.erase(pairs.begin());
		pending.erase({i, j});
		if (detail::coprime_leads(basis[i].lead_monomial(ord),
		                          basis[j].lead_monomial(ord)))
			continue;
		// chain criterion: some other lead divides the lcm and both side
		// pairs are already settled
		bool chained = false;
		for (size_t k = 0; k < basis.size() && !chained; ++k)
		{
			if (k == i || k == j)
				continue;
			if (!monomial_divides(basis[k].lead_monomial(ord), lcm))
				continue;
			auto p1 = std::minmax(i, k);
			auto p2 = std::minmax(j, k);
			if (!pending.count({p1.first, p1.second}) &&
			    !pending.count({p2.first, p2.second}))
				chained = true;
		}
		if (chained)
			continue;
		MPoly<F> s = detail::s_poly(field, basis[i], basis[j], ord);
		MPoly<F> r = normal_form(field, s, basis, ord);
		if (r.is_zero())
			continue;
		basis.push_back(r.monic(field, ord));
		for (size_t k = 0; k + 1 < basis.size(); ++k)
			push_pair(k, basis.size() - 1);
	}

	// reduce: drop elements whose lead is divisible by another lead, then
	// fully reduce each against the rest
	std::vector<MPoly<F>> minimal;
	for (size_t i = 0; i < basis.size(); ++i)
	{
		bool redundant = false;
		for (size_t j = 0; j < basis.size() && !redundant; ++j)
		{
			if (i == j)
				continue;
			if (monomial_divides(basis[j].lead_monomial(ord),
			                     basis[i].lead_monomial(ord)) &&
			    !(j > i && basis[j].lead_monomial(ord) ==
			                   basis[i].lead_monomial(ord)))
				redundant = true;
		}
		if (!redundant)
			minimal.push_back(basis[i]);
	}
	std::vector<MPoly<F>> reduced;
	for (size_t i = 0; i < minimal.size(); ++i)
	{
		std::vector<MPoly<F>> others;
		for (size_t j = 0; j < minimal.size(); ++j)
			if (j != i)
				others.push_back(minimal[j]);
		MPoly<F> r = normal_form(field, minimal[i], others, ord);
		if (!r.is_zero())
			reduced.push_back(r.monic(field, ord));
	}
	std::sort(reduced.begin(), reduced.end());
	return reduced;
}

template <typename F>
bool one_in_ideal(const F &field, const std::vector<MPoly<F>> &gens,
                  const MonomialOrder &ord = MonomialOrder::grevlex())
{
	auto gb = buchberger(field, gens, ord);
	if (gb.size() != 1)
		return false;
	const auto &t = gb[0].terms();
	return t.size() == 1 &&
	       t.begin()->first == std::vector<int>(gb[0].nvars(), 0);
}

// membership of f in the ideal generated by gens (all in the same ring)
template <typename F>
bool ideal_member(const F &field, const MPoly<F> &f,
                  const std::vector<MPoly<F>> &gens,
                  const MonomialOrder &ord = MonomialOrder::grevlex())
{
	auto gb = buchberger(field, gens, ord);
	return normal_form(field, f, gb, ord).is_zero();
}

// ---------------------------------------------------------------------------
// Laurent-to-polynomial clearing and the torus containment test

// clear a Z-Laurent polynomial into F[t_1..t_n] (times a monomial unit) and
// pad with `extra` trailing variables
template <typename F>
MPoly<F> clear_laurent(const F &field, const LaurentPoly &f, int extra = 0)
{
	MPoly<F> out(f.nvars() + extra);
	if (f.is_zero())
		return out;
	std::vector<int> mins = f.min_exponents();
	for (const auto &[e, c] : f.terms())
	{
		std::vector<int> ne(f.nvars() + extra, 0);
		for (int i = 0; i < f.nvars(); ++i)
			ne[i] = e[i] - std::min(mins[i], 0);
		out.add_term(field, ne, field.from_int(c));
	}
	return out;
}

// same for a cyclotomic-coefficient Laurent term map
inline MPoly<CyclotomicField>
clear_cyclo_laurent(const CyclotomicField &field,
                    const std::map<std::vector<int>, CycloNum> &f, int nvars,
                    int extra = 0)
{
	MPoly<CyclotomicField> out(nvars + extra);
	if (f.empty())
		return out;
	std::vector<int> mins(nvars, 0);
	bool first = true;
	for (const auto &[e, c] : f)
	{
		(void)c;
		for (int i = 0; i < nvars; ++i)
			mins[i] = first ? e[i] : std::min(mins[i], e[i]);
		first = false;
	}
	for (const auto &[e, c] : f)
	{
		std::vector<int> ne(nvars + extra, 0);
		for (int i = 0; i < nvars; ++i)
			ne[i] = e[i] - std::min(mins[i], 0);
		out.add_term(field, ne, c);
	}
	return out;
}

// True iff the zero set of `gens` inside the torus (C*)^n is contained in
// {(1,..,1)}. Adds u with u*t_1*..*t_n = 1 to cut to the torus and, per
// variable, a Rabinowitsch variable y against t_i - 1; emptiness of each
// localized set is certified by 1 lying in the ideal.
template <typename F>
bool torus_zero_set_in_one(const F &field, const std::vector<MPoly<F>> &gens,
                           int n)
{
	int nv = n + 2; // t_1..t_n, u, y
	std::vector<MPoly<F>> base;
	for (const MPoly<F> &g : gens)
	{
		MPoly<F> padded(nv);
		for (const auto &[e, c] : g.terms())
		{
			std::vector<int> ne(nv, 0);
			for (int i = 0; i < n && i < int(e.size()); ++i)
				ne[i] = e[i];
			padded.add_term(field, ne, c);
		}
		base.push_back(padded);
	}
	{
		MPoly<F> torus(nv);
		std::vector<int> e(nv, 0);
		for (int i = 0; i < n; ++i)
			e[i] = 1;
		e[n] = 1; // u * t_1 .. t_n
		torus.add_term(field, e, field.one());
		torus.add_term(field, std::vector<int>(nv, 0), field.neg(field.one()));
		base.push_back(torus);
	}

	for (int i = 0; i < n; ++i)
	{
		std::vector<MPoly<F>> gens_i = base;
		MPoly<F> rab(nv); // 1 - y*(t_i - 1)
		rab.add_term(field, std::vector<int>(nv, 0), field.one());
		std::vector<int> e(nv, 0);
		e[i] = 1;
		e[n + 1] = 1;
		rab.add_term(field, e, field.neg(field.one()));
		std::vector<int> ey(nv, 0);
		ey[n + 1] = 1;
		rab.add_term(field, ey, field.one());
		gens_i.push_back(rab);
		if (!one_in_ideal(field, gens_i))
			return false;
	}
	return true;
}

} // namespace nilpo
