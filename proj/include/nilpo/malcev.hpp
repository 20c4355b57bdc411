#pragma once

#include "nilpo/hall.hpp"
#include "nilpo/lie.hpp"
#include "nilpo/ncpoly.hpp"
#include "nilpo/presentation.hpp"
#include "nilpo/word.hpp"

#include <map>
#include <memory>
#include <vector>

namespace nilpo {

// expand a Hall-coordinate Lie element into the tensor algebra
inline NCPoly nc_from_lie(const GradedLie &x, int cap)
{
	const HallBasis &b = *x.basis();
	std::map<int, NCPoly> memo;
	std::function<const NCPoly &(int)> expand = [&](int id) -> const NCPoly & {
		auto it = memo.find(id);
		if (it != memo.end())
			return it->second;
		const HallBasis::Elem &e = b.elem(id);
		NCPoly p = e.degree == 1
		               ? NCPoly::generator(b.ngens(), cap, e.gen)
		               : expand(e.left).commutator(expand(e.right));
		return memo.emplace(id, std::move(p)).first->second;
	};
	NCPoly out(b.ngens(), cap);
	for (const auto &[id, c] : x.coeffs())
		out = out + expand(id) * c;
	return out;
}

// Convert a primitive (Lie) tensor-algebra element into Hall coordinates via
// the Dynkin map: on degree d, left-bracketing the words and dividing by d
// fixes Lie elements. The result is re-expanded and compared, so a non-Lie
// input is rejected.
inline GradedLie lie_from_nc(const NCPoly &p,
                             const std::shared_ptr<const HallBasis> &basis)
{
	if (p.constant_term() != 0)
		throw std::invalid_argument("lie_from_nc: nonzero constant term");
	GradedLie out(basis);
	for (const auto &[w, c] : p.terms())
	{
		int d = int(w.size());
		if (d == 0)
			continue;
		GradedLie br = GradedLie::generator(basis, w[0]);
		for (int i = 1; i < d; ++i)
			br = bracket_trunc(br, GradedLie::generator(basis, w[i]));
		out = out + br * (c / d);
	}
	if (!(nc_from_lie(out, p.cap()) == p))
		throw std::logic_error("lie_from_nc: element is not primitive");
	return out;
}

// log(exp(a) exp(b)) to the cap of the basis
inline GradedLie bch(const GradedLie &a, const GradedLie &b)
{
	const auto &basis = a.basis() ? a.basis() : b.basis();
	int cap = basis->maxdeg();
	NCPoly na = nc_from_lie(a, cap), nb = nc_from_lie(b, cap);
	return lie_from_nc(nc_log(nc_exp(na) * nc_exp(nb)), basis);
}

// log of the image of a group word under x_i -> exp(X_i); the degree-1 part
// is the abelianized exponent vector
inline GradedLie group_to_lie(const FreeWord &w,
                              const std::shared_ptr<const HallBasis> &basis)
{
	int cap = basis->maxdeg();
	return lie_from_nc(nc_log(nc_of_word(w, basis->ngens(), cap)), basis);
}

// apply the Lie-algebra homomorphism sending generator g to images[g]
// (elements of the target basis), truncating at the target cap
inline GradedLie lie_substitute(const GradedLie &x,
                                const std::vector<GradedLie> &images,
                                const std::shared_ptr<const HallBasis> &target)
{
	const HallBasis &b = *x.basis();
	std::map<int, GradedLie> memo;
	std::function<const GradedLie &(int)> expand =
	    [&](int id) -> const GradedLie & {
		auto it = memo.find(id);
		if (it != memo.end())
			return it->second;
		const HallBasis::Elem &e = b.elem(id);
		GradedLie g = e.degree == 1
		                  ? images.at(e.gen)
		                  : bracket_trunc(expand(e.left), expand(e.right));
		return memo.emplace(id, std::move(g)).first->second;
	};
	GradedLie out(target);
	for (const auto &[id, c] : x.coeffs())
		out = out + expand(id) * c;
	return out;
}

// Presentation of a Malcev Lie algebra with all relators in F_2 (zero linear
// part), on `ngens` generators, truncated at degree cap.
struct MalcevPresentation
{
	int ngens = 0;
	int cap = 0;
	std::shared_ptr<const HallBasis> basis;
	std::vector<GradedLie> relators;
};

// The elimination of Prop-style minimal presentations: row-reduce the
// relators' linear parts, absorb the pivot generators by a filtered
// automorphism with identity linear part, and project the remaining relators
// to the non-pivot generators. Output satisfies n - t = m - s.
inline MalcevPresentation minimize_presentation(std::vector<GradedLie> relators,
                                                int m, int D)
{
	std::shared_ptr<const HallBasis> basis =
	    relators.empty() || !relators[0].basis() ? hall_basis(std::max(m, 1), D)
	                                             : relators[0].basis();
	if (basis->ngens() != m)
		throw std::invalid_argument("minimize_presentation: generator mismatch");

	// row reduce the whole relators by their linear parts
	std::vector<int> pivot_cols;
	size_t row = 0;
	for (int col = 0; col < m && row < relators.size(); ++col)
	{
		size_t pr = row;
		while (pr < relators.size() && relators[pr].linear_part()[col] == 0)
			++pr;
		if (pr == relators.size())
			continue;
		std::swap(relators[row], relators[pr]);
		Rat piv = relators[row].linear_part()[col];
		relators[row] = relators[row] * (1 / piv);
		for (size_t i = 0; i < relators.size(); ++i)
		{
			if (i == row)
				continue;
			Rat f = relators[i].linear_part()[col];
			if (f != 0)
				relators[i] = relators[i] - relators[row] * f;
		}
		pivot_cols.push_back(col);
		++row;
	}
	size_t rho = row;

	std::vector<bool> is_pivot(m, false);
	for (int c : pivot_cols)
		is_pivot[c] = true;

	// linear change of generators making each pivot relator's linear part a
	// bare pivot generator
	std::vector<GradedLie> lambda;
	for (int g = 0; g < m; ++g)
		lambda.push_back(GradedLie::generator(basis, g));
	for (size_t k = 0; k < rho; ++k)
	{
		std::vector<Rat> lin = relators[k].linear_part();
		GradedLie img = GradedLie::generator(basis, pivot_cols[k]);
		for (int j = 0; j < m; ++j)
			if (!is_pivot[j] && lin[j] != 0)
				img = img - GradedLie::generator(basis, j) * lin[j];
		lambda[pivot_cols[k]] = img;
	}
	for (auto &r : relators)
		r = lie_substitute(r, lambda, basis);

	// f fixes non-pivot generators and sends pivot generator p_k to the k-th
	// pivot relator; invert by the filtered fixed-point iteration
	std::vector<GradedLie> f_images;
	for (int g = 0; g < m; ++g)
		f_images.push_back(GradedLie::generator(basis, g));
	for (size_t k = 0; k < rho; ++k)
		f_images[pivot_cols[k]] = relators[k];

	std::vector<GradedLie> g_images = f_images;
	for (int g = 0; g < m; ++g)
		g_images[g] = GradedLie::generator(basis, g);
	for (size_t k = 0; k < rho; ++k)
	{
		int pc = pivot_cols[k];
		GradedLie u = GradedLie::generator(basis, pc);
		for (int iter = 0; iter < D; ++iter)
		{
			GradedLie err =
			    lie_substitute(u, f_images, basis) -
			    GradedLie::generator(basis, pc);
			if (err.is_zero())
				break;
			u = u - err;
		}
		g_images[pc] = u;
	}

	// project to the non-pivot generators
	int n = m - int(rho);
	MalcevPresentation out;
	out.ngens = n;
	out.cap = D;
	out.basis = hall_basis(std::max(n, 1), D);
	std::vector<GradedLie> proj;
	int next = 0;
	for (int g = 0; g < m; ++g)
	{
		if (is_pivot[g])
			proj.push_back(GradedLie(out.basis)); // killed
		else
			proj.push_back(GradedLie::generator(out.basis, next++));
	}
	for (size_t i = rho; i < relators.size(); ++i)
	{
		GradedLie moved = lie_substitute(relators[i], g_images, basis);
		out.relators.push_back(lie_substitute(moved, proj, out.basis));
	}
	return out;
}

// minimal Malcev data straight from a group presentation
inline MalcevPresentation group_malcev_presentation(const GroupPresentation &p,
                                                    int D)
{
	auto basis = hall_basis(std::max(p.ngens(), 1), D);
	std::vector<GradedLie> rel;
	for (const FreeWord &w : p.relators)
		rel.push_back(group_to_lie(w, basis));
	return minimize_presentation(std::move(rel), p.ngens(), D);
}

// dim (L_{>=e} + J) / (L_{>=e+1} + J) for e = 1..D, where J is the ideal
// generated by the relators in the degree-<=D truncation
inline std::vector<long> malcev_gr_dims(const MalcevPresentation &mp, int D)
{
	if (D > mp.cap)
		throw std::invalid_argument("malcev_gr_dims: degree beyond truncation");
	if (mp.ngens == 0)
		return std::vector<long>(D, 0);
	const auto &basis = mp.basis;
	int total = basis->size();

	auto to_vec = [&](const GradedLie &x) {
		std::vector<Rat> v(total, Rat(0));
		for (const auto &[id, c] : x.coeffs())
			v[id] = c;
		return v;
	};

	// close the relator span under bracketing with generators
	std::vector<GradedLie> span_elems;
	detail::RowSpace span(total);
	std::vector<GradedLie> queue = mp.relators;
	for (size_t qi = 0; qi < queue.size(); ++qi)
	{
		GradedLie v = queue[qi];
		if (v.is_zero())
			continue;
		if (!span.insert(to_vec(v)))
			continue;
		span_elems.push_back(v);
		for (int g = 0; g < basis->ngens(); ++g)
			queue.push_back(bracket_trunc(GradedLie::generator(basis, g), v));
	}

	// dims of (L_{>=e} + J) via rank of unit vectors of high degrees plus J
	auto filtered_rank = [&](int e) {
		detail::RowSpace rs(total);
		for (int d = e; d <= basis->maxdeg(); ++d)
			for (int id : basis->degree_ids(d))
			{
				std::vector<Rat> unit(total, Rat(0));
				unit[id] = 1;
				rs.insert(std::move(unit));
			}
		for (const GradedLie &v : span_elems)
			rs.insert(to_vec(v));
		return rs.rank();
	};

	std::vector<long> dims;
	int prev = filtered_rank(1);
	for (int e = 1; e <= D; ++e)
	{
		int next = filtered_rank(e + 1);
		dims.push_back(prev - next);
		prev = next;
	}
	return dims;
}

inline std::vector<long> malcev_gr_dims(const GroupPresentation &p, int D)
{
	return malcev_gr_dims(group_malcev_presentation(p, D), D);
}

} // namespace nilpo
