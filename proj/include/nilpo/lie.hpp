#pragma once

#include "nilpo/fields.hpp"
#include "nilpo/hall.hpp"
#include "nilpo/matrix.hpp"

#include <memory>
#include <vector>

namespace nilpo {

namespace detail {

// incremental row space over Q with reduced pivots
class RowSpace
{
  public:
	explicit RowSpace(int dim) : dim_(dim) {}

	int rank() const { return int(rows_.size()); }
	const std::vector<std::vector<Rat>> &rows() const { return rows_; }

	// returns true if the vector enlarged the span
	bool insert(std::vector<Rat> v)
	{
		for (size_t r = 0; r < rows_.size(); ++r)
		{
			const Rat &p = v[pivots_[r]];
			if (p != 0)
			{
				Rat f = p;
				for (int i = 0; i < dim_; ++i)
					v[i] -= f * rows_[r][i];
			}
		}
		int piv = -1;
		for (int i = 0; i < dim_; ++i)
			if (v[i] != 0)
			{
				piv = i;
				break;
			}
		if (piv < 0)
			return false;
		Rat inv = 1 / v[piv];
		for (int i = 0; i < dim_; ++i)
			v[i] *= inv;
		// keep reduced against the new row
		for (size_t r = 0; r < rows_.size(); ++r)
		{
			Rat f = rows_[r][piv];
			if (f != 0)
				for (int i = 0; i < dim_; ++i)
					rows_[r][i] -= f * v[i];
		}
		rows_.push_back(std::move(v));
		pivots_.push_back(piv);
		return true;
	}

	bool contains(std::vector<Rat> v) const
	{
		for (size_t r = 0; r < rows_.size(); ++r)
		{
			const Rat &p = v[pivots_[r]];
			if (p != 0)
			{
				Rat f = p;
				for (int i = 0; i < dim_; ++i)
					v[i] -= f * rows_[r][i];
			}
		}
		for (const Rat &x : v)
			if (x != 0)
				return false;
		return true;
	}

  private:
	int dim_;
	std::vector<std::vector<Rat>> rows_;
	std::vector<int> pivots_;
};

inline std::vector<Rat> degree_vector(const GradedLie &x, int degree)
{
	const HallBasis &b = *x.basis();
	const auto &ids = b.degree_ids(degree);
	std::vector<Rat> v(ids.size(), Rat(0));
	for (size_t i = 0; i < ids.size(); ++i)
	{
		auto it = x.coeffs().find(ids[i]);
		if (it != x.coeffs().end())
			v[i] = it->second;
	}
	return v;
}

} // namespace detail

// number of primes dividing k, with multiplicity, via the Witt formula check
inline long witt_dimension(int ngens, int degree)
{
	// (1/k) sum_{e | k} mu(e) m^{k/e}
	auto mu = [](int n) {
		int m = 1;
		for (int p = 2; p * p <= n; ++p)
			if (n % p == 0)
			{
				n /= p;
				if (n % p == 0)
					return 0;
				m = -m;
			}
		if (n > 1)
			m = -m;
		return m;
	};
	Int sum = 0;
	for (int e = 1; e <= degree; ++e)
		if (degree % e == 0)
			sum += Int(mu(e)) * int_pow(Int(ngens), degree / e);
	return (sum / degree).convert_to<long>();
}

inline std::shared_ptr<const HallBasis> hall_basis(int ngens, int maxdeg)
{
	return std::make_shared<const HallBasis>(ngens, maxdeg);
}

// Dimensions a_1..a_D of the graded quotient L(x_1..x_m)/ideal(relators),
// relators homogeneous of degree >= 2. The ideal is built degree by degree:
// relator components plus brackets of generators against the previous
// degree.
inline std::vector<long>
graded_quotient_dims(const std::shared_ptr<const HallBasis> &basis,
                     const std::vector<GradedLie> &relators, int D)
{
	if (D > basis->maxdeg())
		throw std::invalid_argument("graded_quotient_dims: degree beyond basis");
	for (const GradedLie &r : relators)
	{
		if (r.is_zero())
			continue;
		if (r.min_degree() != r.max_degree() || r.min_degree() < 2)
			throw std::invalid_argument(
			    "graded_quotient_dims: relators must be homogeneous of degree >= 2");
	}

	std::vector<long> dims;
	std::vector<GradedLie> prev_ideal_basis; // spanning elements at degree d
	for (int d = 1; d <= D; ++d)
	{
		detail::RowSpace span(basis->dim(d));
		std::vector<GradedLie> next_basis;
		auto try_insert = [&](const GradedLie &v) {
			if (span.insert(detail::degree_vector(v, d)))
				next_basis.push_back(v);
		};
		for (const GradedLie &r : relators)
			if (!r.is_zero() && r.min_degree() == d)
				try_insert(r);
		for (const GradedLie &v : prev_ideal_basis)
			for (int g = 0; g < basis->ngens(); ++g)
				try_insert(bracket_trunc(GradedLie::generator(basis, g), v));
		dims.push_back(basis->dim(d) - span.rank());
		prev_ideal_basis = std::move(next_basis);
	}
	return dims;
}

// dense integer polynomial in one variable z, truncated helpers
inline std::vector<Int> zpoly_truncate(std::vector<Int> p, int cap)
{
	if (int(p.size()) > cap + 1)
		p.resize(cap + 1);
	ipoly_trim(p);
	return p;
}

// prod_{i <= D} (1 - z^i)^{a_i} = target mod z^{D+1}?
inline bool pbw_series_check(const std::vector<long> &dims,
                             const IntPoly &target)
{
	int D = int(dims.size());
	IntPoly acc = {1};
	for (int i = 1; i <= D; ++i)
	{
		IntPoly factor(i + 1, Int(0));
		factor[0] = 1;
		factor[i] = -1;
		for (long k = 0; k < dims[i - 1]; ++k)
			acc = zpoly_truncate(ipoly_mul(acc, factor), D);
	}
	IntPoly t = zpoly_truncate(target, D);
	return acc == t;
}

// (1 - z)^2 divides 1 - 2z + z^d exactly iff d = 2
inline bool inert_divisibility(int d)
{
	if (d < 2)
		throw std::invalid_argument("inert_divisibility: d >= 2 required");
	IntPoly num(d + 1, Int(0));
	num[0] = 1;
	num[1] = -2;
	num[d] += 1;
	ipoly_trim(num);
	IntPoly den = {1, -2, 1}; // (1 - z)^2
	try
	{
		ipoly_divexact(num, den);
		return true;
	}
	catch (const std::logic_error &)
	{
		return false;
	}
}

} // namespace nilpo
