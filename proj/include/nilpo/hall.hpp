#pragma once

#include "nilpo/rational.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace nilpo {

// Hall basis of the free Lie algebra on ngens generators, through degree
// maxdeg. Elements are indexed globally; generators come first. A bracket
// [u, v] with u > v is a basis element iff u is a generator or u = [a, b]
// with b <= v (comparison: degree first, then construction position).
class HallBasis
{
  public:
	struct Elem
	{
		int degree;
		int left = -1, right = -1; // element ids; -1 for generators
		int gen = -1;              // generator index when degree == 1
	};

	HallBasis(int ngens, int maxdeg) : ngens_(ngens), maxdeg_(maxdeg)
	{
		if (ngens < 1 || maxdeg < 1)
			throw std::invalid_argument("HallBasis: need ngens, maxdeg >= 1");
		by_degree_.assign(maxdeg + 1, {});
		for (int g = 0; g < ngens; ++g)
		{
			elems_.push_back(Elem{1, -1, -1, g});
			by_degree_[1].push_back(g);
		}
		for (int d = 2; d <= maxdeg; ++d)
			for (int dv = 1; 2 * dv <= d; ++dv)
			{
				int du = d - dv;
				for (int v : by_degree_[dv])
					for (int u : by_degree_[du])
					{
						if (!less(v, u))
							continue;
						const Elem &ue = elems_[u];
						if (ue.degree > 1 && less(v, ue.right))
							continue;
						int id = int(elems_.size());
						elems_.push_back(Elem{d, u, v, -1});
						by_degree_[d].push_back(id);
						pair_id_[{u, v}] = id;
					}
			}
	}

	int ngens() const { return ngens_; }
	int maxdeg() const { return maxdeg_; }
	const Elem &elem(int id) const { return elems_[id]; }
	int size() const { return int(elems_.size()); }
	const std::vector<int> &degree_ids(int d) const { return by_degree_[d]; }
	int dim(int d) const { return int(by_degree_[d].size()); }

	// degree-first order; within a degree, construction order
	bool less(int a, int b) const
	{
		if (elems_[a].degree != elems_[b].degree)
			return elems_[a].degree < elems_[b].degree;
		return a < b;
	}

	// id of the Hall element [u, v] if it is one, else -1
	int hall_pair(int u, int v) const
	{
		auto it = pair_id_.find({u, v});
		return it == pair_id_.end() ? -1 : it->second;
	}

	std::string name(int id, const std::vector<std::string> &gens) const
	{
		const Elem &e = elems_[id];
		if (e.degree == 1)
			return gens[e.gen];
		return "[" + name(e.left, gens) + "," + name(e.right, gens) + "]";
	}

  private:
	int ngens_, maxdeg_;
	std::vector<Elem> elems_;
	std::vector<std::vector<int>> by_degree_;
	std::map<std::pair<int, int>, int> pair_id_;
};

// Element of the free Lie algebra in Hall coordinates; may mix degrees up to
// the basis cap.
class GradedLie
{
  public:
	using Coeffs = std::map<int, Rat>; // element id -> coefficient

	GradedLie() = default;
	explicit GradedLie(std::shared_ptr<const HallBasis> basis)
	    : basis_(std::move(basis))
	{
	}

	static GradedLie generator(std::shared_ptr<const HallBasis> basis, int g)
	{
		GradedLie x(std::move(basis));
		x.add(g, 1); // generators are elements 0..ngens-1
		return x;
	}

	const std::shared_ptr<const HallBasis> &basis() const { return basis_; }
	const Coeffs &coeffs() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }

	void add(int id, const Rat &c)
	{
		if (c == 0)
			return;
		auto [it, fresh] = coeffs_.emplace(id, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second == 0)
				coeffs_.erase(it);
		}
	}

	GradedLie operator+(const GradedLie &o) const
	{
		GradedLie r = pick(o);
		r.coeffs_ = coeffs_;
		for (const auto &[id, c] : o.coeffs_)
			r.add(id, c);
		return r;
	}
	GradedLie operator-(const GradedLie &o) const
	{
		GradedLie r = pick(o);
		r.coeffs_ = coeffs_;
		for (const auto &[id, c] : o.coeffs_)
			r.add(id, -c);
		return r;
	}
	GradedLie operator*(const Rat &c) const
	{
		GradedLie r(basis_);
		if (c == 0)
			return r;
		for (const auto &[id, k] : coeffs_)
			r.coeffs_.emplace(id, k * c);
		return r;
	}

	bool operator==(const GradedLie &o) const { return coeffs_ == o.coeffs_; }

	GradedLie component(int degree) const
	{
		GradedLie r(basis_);
		for (const auto &[id, c] : coeffs_)
			if (basis_->elem(id).degree == degree)
				r.coeffs_.emplace(id, c);
		return r;
	}

	int min_degree() const // 0 when zero
	{
		int d = 0;
		for (const auto &[id, c] : coeffs_)
		{
			(void)c;
			int e = basis_->elem(id).degree;
			if (d == 0 || e < d)
				d = e;
		}
		return d;
	}
	int max_degree() const
	{
		int d = 0;
		for (const auto &[id, c] : coeffs_)
		{
			(void)c;
			d = std::max(d, basis_->elem(id).degree);
		}
		return d;
	}

	// coefficients of the degree-1 component as a dense vector
	std::vector<Rat> linear_part() const
	{
		std::vector<Rat> v(basis_->ngens(), Rat(0));
		for (const auto &[id, c] : coeffs_)
			if (basis_->elem(id).degree == 1)
				v[basis_->elem(id).gen] = c;
		return v;
	}

  private:
	std::shared_ptr<const HallBasis> basis_;
	Coeffs coeffs_;

	GradedLie pick(const GradedLie &o) const
	{
		GradedLie r(basis_ ? basis_ : o.basis_);
		if (basis_ && o.basis_ && basis_ != o.basis_)
			throw std::invalid_argument("GradedLie: basis mismatch");
		return r;
	}
};

namespace detail {

// [u, v] of basis elements, rewritten into Hall coordinates. Drops (truncate)
// or rejects (strict via caller) components beyond the basis cap.
inline void hall_bracket_ids(const HallBasis &basis, int u, int v,
                             const Rat &coeff, GradedLie &out)
{
	if (u == v)
		return;
	if (basis.less(u, v))
	{
		hall_bracket_ids(basis, v, u, -coeff, out);
		return;
	}
	int deg = basis.elem(u).degree + basis.elem(v).degree;
	if (deg > basis.maxdeg())
		return; // truncated
	const HallBasis::Elem &ue = basis.elem(u);
	if (ue.degree == 1 || !basis.less(v, ue.right))
	{
		int id = basis.hall_pair(u, v);
		if (id < 0)
			throw std::logic_error("hall_bracket: missing Hall element");
		out.add(id, coeff);
		return;
	}
	// u = [a, b] with v < b: [[a,b],v] = [a,[b,v]] - [b,[a,v]]
	int a = ue.left, b = ue.right;
	GradedLie bv(out.basis()), av(out.basis());
	hall_bracket_ids(basis, b, v, Rat(1), bv);
	hall_bracket_ids(basis, a, v, Rat(1), av);
	for (const auto &[id, c] : bv.coeffs())
		hall_bracket_ids(basis, a, id, coeff * c, out);
	for (const auto &[id, c] : av.coeffs())
		hall_bracket_ids(basis, b, id, -coeff * c, out);
}

} // namespace detail

// bracket truncated at the basis cap
inline GradedLie bracket_trunc(const GradedLie &x, const GradedLie &y)
{
	if (!x.basis() || !y.basis() || x.basis() != y.basis())
		throw std::invalid_argument("bracket: basis mismatch");
	GradedLie out(x.basis());
	for (const auto &[u, cu] : x.coeffs())
		for (const auto &[v, cv] : y.coeffs())
			detail::hall_bracket_ids(*x.basis(), u, v, cu * cv, out);
	return out;
}

// strict bracket: any nonzero product beyond the cap is an error
inline GradedLie bracket(const GradedLie &x, const GradedLie &y)
{
	const HallBasis &b = *x.basis();
	for (const auto &[u, cu] : x.coeffs())
		for (const auto &[v, cv] : y.coeffs())
		{
			(void)cu;
			(void)cv;
			if (u != v &&
			    b.elem(u).degree + b.elem(v).degree > b.maxdeg())
				throw std::invalid_argument("bracket: degree overflow");
		}
	return bracket_trunc(x, y);
}

inline std::string to_string(const GradedLie &x,
                             const std::vector<std::string> &gens)
{
	if (x.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[id, c] : x.coeffs())
	{
		if (!first)
			os << " + ";
		os << "(" << c << ")*" << x.basis()->name(id, gens);
		first = false;
	}
	return os.str();
}

} // namespace nilpo
