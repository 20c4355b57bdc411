#pragma once

#include "nilpo/fields.hpp"
#include "nilpo/lie.hpp"
#include "nilpo/malcev.hpp"
#include "nilpo/matrix.hpp"
#include "nilpo/mpoly.hpp"
#include "nilpo/ncpoly.hpp"
#include "nilpo/presentation.hpp"

#include <utility>
#include <vector>

namespace nilpo {

// Degree-one cup product data of the presentation 2-complex. The pairing of
// a cocycle wedge a^b against relator w uses the antisymmetrized degree-2
// Magnus coefficients mu_ij(w) - mu_ji(w); the symmetric part lands in the
// coboundary image and is quotiented away.
struct CupStructure
{
	int ngens = 0;
	int nrels = 0;
	int b1 = 0;
	std::vector<std::vector<Rat>> h1_basis; // b1 vectors in Q^m
	// per relator, m x m antisymmetric matrix mu_ij - mu_ji
	std::vector<Matrix<Rat>> pairing;
	Matrix<Rat> coboundary; // s x m, the exponent matrix over Q
	int dim_k = 0;
	int rank_mu = 0;
	std::vector<std::vector<Rat>> k_basis; // wedge coordinates, pairs (p<q)

	// pairing vector of a wedge of two cocycles
	std::vector<Rat> pair_vector(const std::vector<Rat> &a,
	                             const std::vector<Rat> &b) const
	{
		std::vector<Rat> out(nrels, Rat(0));
		for (int i = 0; i < nrels; ++i)
		{
			Rat acc = 0;
			for (int g = 0; g < ngens; ++g)
				for (int h = g + 1; h < ngens; ++h)
					acc += (a[g] * b[h] - a[h] * b[g]) * pairing[i](g, h);
			out[i] = acc;
		}
		return out;
	}
};

namespace detail {

inline std::vector<std::pair<int, int>> wedge_index_pairs(int n)
{
	std::vector<std::pair<int, int>> pairs;
	for (int p = 0; p < n; ++p)
		for (int q = p + 1; q < n; ++q)
			pairs.push_back({p, q});
	return pairs;
}

} // namespace detail

inline CupStructure cup_structure(const GroupPresentation &pres)
{
	CupStructure cs;
	cs.ngens = pres.ngens();
	cs.nrels = pres.nrels();

	RationalField Q;
	Matrix<Int> e = exponent_matrix(pres);
	cs.coboundary = Matrix<Rat>(pres.nrels(), pres.ngens(), Rat(0));
	for (int i = 0; i < e.rows(); ++i)
		for (int j = 0; j < e.cols(); ++j)
			cs.coboundary(i, j) = Rat(e(i, j));

	auto kk = rank_kernel(Q, cs.coboundary);
	cs.h1_basis = kk.kernel;
	cs.b1 = int(cs.h1_basis.size());

	// degree-2 Magnus coefficients of each relator
	for (const FreeWord &w : pres.relators)
	{
		NCPoly mg = NCPoly::one(pres.ngens(), 2);
		for (const Letter &l : w.letters())
		{
			// (1 + X)^k truncated at degree 2: 1 + kX + C(k,2+sign) X^2
			NCPoly f = NCPoly::one(pres.ngens(), 2);
			NCPoly x = NCPoly::generator(pres.ngens(), 2, l.gen);
			Rat k = l.exp;
			f = f + x * k + (x * x) * (k * (k - 1) / 2);
			mg = mg * f;
		}
		Matrix<Rat> anti(pres.ngens(), pres.ngens(), Rat(0));
		for (const auto &[word, c] : mg.terms())
			if (word.size() == 2)
			{
				anti(word[0], word[1]) += c;
				anti(word[1], word[0]) -= c;
			}
		cs.pairing.push_back(std::move(anti));
	}

	// K = wedges whose pairing vector lies in the coboundary image
	auto pairs = detail::wedge_index_pairs(cs.b1);
	int wdim = int(pairs.size());
	int cb_rank = rank_kernel(Q, cs.coboundary).rank; // rank of column space
	// solve [P | E_cols] (w, mu) = 0 and project onto w
	Matrix<Rat> big(cs.nrels, wdim + cs.ngens, Rat(0));
	for (int c = 0; c < wdim; ++c)
	{
		auto [p, q] = pairs[c];
		std::vector<Rat> v = cs.pair_vector(cs.h1_basis[p], cs.h1_basis[q]);
		for (int i = 0; i < cs.nrels; ++i)
			big(i, c) = v[i];
	}
	for (int j = 0; j < cs.ngens; ++j)
		for (int i = 0; i < cs.nrels; ++i)
			big(i, wdim + j) = cs.coboundary(i, j);

	auto sol = rank_kernel(Q, big);
	detail::RowSpace wspan(wdim);
	for (const auto &v : sol.kernel)
	{
		std::vector<Rat> w(v.begin(), v.begin() + wdim);
		bool nonzero = false;
		for (const Rat &x : w)
			if (x != 0)
				nonzero = true;
		if (nonzero && wspan.insert(w))
			cs.k_basis.push_back(std::vector<Rat>(v.begin(), v.begin() + wdim));
	}
	cs.dim_k = int(cs.k_basis.size());
	cs.rank_mu = wdim - cs.dim_k;
	(void)cb_rank;
	return cs;
}

// depth of z in the degree-one resonance filtration: b1 at z = 0, otherwise
// dim ker(mu_z : H^1 -> H^2) - 1
inline int resonance_depth(const CupStructure &cs, const std::vector<Rat> &z)
{
	if (int(z.size()) != cs.ngens)
		throw std::invalid_argument("resonance_depth: expected a vector in Q^m");
	// must be a cocycle
	for (int i = 0; i < cs.nrels; ++i)
	{
		Rat acc = 0;
		for (int j = 0; j < cs.ngens; ++j)
			acc += cs.coboundary(i, j) * z[j];
		if (acc != 0)
			throw std::invalid_argument("resonance_depth: z is not in H^1");
	}
	bool zero = true;
	for (const Rat &c : z)
		if (c != 0)
			zero = false;
	if (zero)
		return cs.b1;

	RationalField Q;
	// rank of the induced map H^1 -> Q^s / im(coboundary)
	Matrix<Rat> big(cs.nrels, cs.b1 + cs.ngens, Rat(0));
	for (int c = 0; c < cs.b1; ++c)
	{
		std::vector<Rat> v = cs.pair_vector(z, cs.h1_basis[c]);
		for (int i = 0; i < cs.nrels; ++i)
			big(i, c) = v[i];
	}
	for (int j = 0; j < cs.ngens; ++j)
		for (int i = 0; i < cs.nrels; ++i)
			big(i, cs.b1 + j) = cs.coboundary(i, j);
	int rank_all = rank_kernel(Q, big).rank;
	int rank_cb = rank_kernel(Q, cs.coboundary).rank;
	int rank_muz = rank_all - rank_cb;
	return cs.b1 - rank_muz - 1;
}

// dim K_G = dim gr^2 (G) (x) Q, the executable shadow of the cup/bracket
// duality
inline bool duality_check(const GroupPresentation &p, int D)
{
	CupStructure cs = cup_structure(p);
	std::vector<long> dims = malcev_gr_dims(p, std::max(D, 2));
	return Int(cs.dim_k) == Int(dims[1]);
}

// Determinantal equations of R^1_1 for b1 <= 3: entries of mu_z as linear
// polynomials in the coordinates of z, minors of size b1 - 1 against a basis
// of the quotient H^2.
inline std::vector<MPoly<RationalField>>
r11_equations(const CupStructure &cs)
{
	RationalField Q;
	int n = cs.b1;
	if (n > 3)
		throw std::invalid_argument("r11_equations: implemented for b1 <= 3");
	if (n <= 1)
		return {};

	// quotient coordinates: rows spanning ker(E^T), i.e. functionals killing
	// the coboundary image
	Matrix<Rat> et(cs.ngens, cs.nrels, Rat(0));
	for (int i = 0; i < cs.nrels; ++i)
		for (int j = 0; j < cs.ngens; ++j)
			et(j, i) = cs.coboundary(i, j);
	auto co = rank_kernel(Q, et);
	int hq = int(co.kernel.size()); // dim H^2 of the 2-complex

	// entries of the matrix of mu_z, linear in z-coordinates z_1..z_n
	// row r (quotient coordinate), column q (H^1 basis)
	std::vector<std::vector<MPoly<RationalField>>> mat(
	    hq, std::vector<MPoly<RationalField>>(n, MPoly<RationalField>(n)));
	for (int p = 0; p < n; ++p)
	{
		// contribution of z_p * (pair_vector(u_p, u_q))
		for (int q = 0; q < n; ++q)
		{
			std::vector<Rat> v = cs.pair_vector(cs.h1_basis[p], cs.h1_basis[q]);
			for (int r = 0; r < hq; ++r)
			{
				Rat acc = 0;
				for (int i = 0; i < cs.nrels; ++i)
					acc += co.kernel[r][i] * v[i];
				if (acc != 0)
				{
					std::vector<int> e(n, 0);
					e[p] = 1;
					mat[r][q].add_term(Q, e, acc);
				}
			}
		}
	}

	// minors of size n - 1
	int size = n - 1;
	std::vector<MPoly<RationalField>> eqs;
	std::vector<std::vector<MPoly<RationalField>>> grid = mat;
	std::vector<MPoly<RationalField>> flat;
	std::function<void(std::vector<int>, std::vector<int>)> emit =
	    [&](std::vector<int> ri, std::vector<int> ci) {
		    // determinant by cofactor over MPoly
		    std::function<MPoly<RationalField>(std::vector<int>,
		                                       std::vector<int>)>
		        det = [&](std::vector<int> rr,
		                  std::vector<int> cc) -> MPoly<RationalField> {
			    if (rr.size() == 1)
				    return grid[rr[0]][cc[0]];
			    MPoly<RationalField> acc(n);
			    for (size_t k = 0; k < cc.size(); ++k)
			    {
				    std::vector<int> rsub(rr.begin() + 1, rr.end());
				    std::vector<int> csub;
				    for (size_t j = 0; j < cc.size(); ++j)
					    if (j != k)
						    csub.push_back(cc[j]);
				    MPoly<RationalField> term =
				        grid[rr[0]][cc[k]].mul(Q, det(rsub, csub));
				    acc = (k % 2 == 0) ? acc.add(Q, term) : acc.sub(Q, term);
			    }
			    return acc;
		    };
		    MPoly<RationalField> d = det(ri, ci);
		    if (!d.is_zero())
			    eqs.push_back(d);
	    };

	if (size >= 1 && hq >= size)
	{
		std::vector<int> ri(size), ci(size);
		std::function<void(int, int)> pick_c = [&](int pos, int start) {
			if (pos == size)
			{
				emit(ri, ci);
				return;
			}
			for (int c = start; c < n; ++c)
			{
				ci[pos] = c;
				pick_c(pos + 1, c + 1);
			}
		};
		std::function<void(int, int)> pick_r = [&](int pos, int start) {
			if (pos == size)
			{
				pick_c(0, 0);
				return;
			}
			for (int r = start; r < hq; ++r)
			{
				ri[pos] = r;
				pick_r(pos + 1, r + 1);
			}
		};
		pick_r(0, 0);
	}
	(void)flat;
	return eqs;
}

} // namespace nilpo
