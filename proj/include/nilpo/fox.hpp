#pragma once

#include "nilpo/abring.hpp"
#include "nilpo/character.hpp"
#include "nilpo/groebner.hpp"
#include "nilpo/laurent.hpp"
#include "nilpo/matrix.hpp"
#include "nilpo/presentation.hpp"
#include "nilpo/word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace nilpo {

// Element of the free group ring Z[F], words freely reduced, no repeats.
class FreeGroupRingElem
{
  public:
	using Terms = std::map<FreeWord, Int>;

	FreeGroupRingElem() = default;
	static FreeGroupRingElem from_word(const FreeWord &w, const Int &c = 1)
	{
		FreeGroupRingElem r;
		r.add(w, c);
		return r;
	}
	static FreeGroupRingElem one() { return from_word(FreeWord()); }

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add(const FreeWord &w, const Int &c)
	{
		if (c == 0)
			return;
		auto [it, fresh] = terms_.emplace(w, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	FreeGroupRingElem operator+(const FreeGroupRingElem &o) const
	{
		FreeGroupRingElem r = *this;
		for (const auto &[w, c] : o.terms_)
			r.add(w, c);
		return r;
	}
	FreeGroupRingElem operator-(const FreeGroupRingElem &o) const
	{
		FreeGroupRingElem r = *this;
		for (const auto &[w, c] : o.terms_)
			r.add(w, -c);
		return r;
	}
	FreeGroupRingElem operator*(const FreeGroupRingElem &o) const
	{
		FreeGroupRingElem r;
		for (const auto &[w1, c1] : terms_)
			for (const auto &[w2, c2] : o.terms_)
				r.add(w1 * w2, c1 * c2);
		return r;
	}

	bool operator==(const FreeGroupRingElem &o) const
	{
		return terms_ == o.terms_;
	}

	AbGroupRingElem abelianized(const AbelianStructure &ab, int ngens) const
	{
		AbGroupRingElem r = AbGroupRingElem::zero(ab);
		for (const auto &[w, c] : terms_)
		{
			auto ev = w.exponent_vector(ngens);
			r.add_term(ab.free_class(ev), ab.torsion_class(ev), c);
		}
		return r;
	}

  private:
	Terms terms_;
};

// Fox derivative d/dx_j: dx_i/dx_j = delta_ij, d(uv) = du + u dv,
// d(x_i^-1) = -delta_ij x_i^-1.
inline FreeGroupRingElem fox_derive(const FreeWord &w, int j)
{
	FreeGroupRingElem out;
	FreeWord prefix;
	for (const Letter &l : w.letters())
	{
		if (l.gen == j)
		{
			// d(x^k) = sum over single steps
			long k = l.exp;
			if (k > 0)
				for (long i = 0; i < k; ++i)
					out.add(prefix * FreeWord::generator(l.gen).power(i), 1);
			else
				for (long i = 1; i <= -k; ++i)
					out.add(prefix * FreeWord::generator(l.gen).power(-i), -1);
		}
		prefix = prefix * FreeWord::generator(l.gen).power(l.exp);
	}
	return out;
}

// The Fox Jacobian over Z[G_ab], rows = relators, cols = generators, with
// its projection to the torsion-free part Z[Z^n].
struct AlexanderMatrix
{
	int rows = 0, cols = 0;
	AbelianStructure structure;
	std::vector<std::vector<AbGroupRingElem>> entries_ab;
	std::vector<std::vector<LaurentPoly>> entries_free;
};

inline AlexanderMatrix alexander_matrix(const GroupPresentation &p)
{
	AlexanderMatrix m;
	m.rows = p.nrels();
	m.cols = p.ngens();
	m.structure = abelianize(p);
	for (int i = 0; i < m.rows; ++i)
	{
		std::vector<AbGroupRingElem> row_ab;
		std::vector<LaurentPoly> row_free;
		for (int j = 0; j < m.cols; ++j)
		{
			AbGroupRingElem e =
			    fox_derive(p.relators[i], j).abelianized(m.structure, m.cols);
			row_free.push_back(e.project_free());
			row_ab.push_back(std::move(e));
		}
		m.entries_ab.push_back(std::move(row_ab));
		m.entries_free.push_back(std::move(row_free));
	}
	return m;
}

namespace detail {

// determinant by cofactor expansion; fine at presentation sizes
template <typename T>
T ring_det(const std::vector<std::vector<T>> &m, const T &zero)
{
	size_t n = m.size();
	if (n == 0)
		return zero; // by convention unused; callers special-case size 0
	if (n == 1)
		return m[0][0];
	T acc = zero;
	for (size_t k = 0; k < n; ++k)
	{
		std::vector<std::vector<T>> sub;
		for (size_t i = 1; i < n; ++i)
		{
			std::vector<T> row;
			for (size_t j = 0; j < n; ++j)
				if (j != k)
					row.push_back(m[i][j]);
			sub.push_back(std::move(row));
		}
		T term = m[0][k] * ring_det(sub, zero);
		acc = (k % 2 == 0) ? acc + term : acc - term;
	}
	return acc;
}

template <typename T>
void minors_of_size(const std::vector<std::vector<T>> &mat, int size,
                    const T &zero, std::vector<T> &out)
{
	int rows = int(mat.size());
	int cols = rows == 0 ? 0 : int(mat[0].size());
	if (size > rows || size > cols)
		return;
	std::vector<int> ri(size), ci(size);
	std::function<void(int, int)> pick_cols = [&](int pos, int start) {
		if (pos == size)
		{
			std::vector<std::vector<T>> sub;
			for (int a = 0; a < size; ++a)
			{
				std::vector<T> row;
				for (int b = 0; b < size; ++b)
					row.push_back(mat[ri[a]][ci[b]]);
				sub.push_back(std::move(row));
			}
			out.push_back(ring_det(sub, zero));
			return;
		}
		for (int c = start; c < cols; ++c)
		{
			ci[pos] = c;
			pick_cols(pos + 1, c + 1);
		}
	};
	std::function<void(int, int)> pick_rows = [&](int pos, int start) {
		if (pos == size)
		{
			pick_cols(0, 0);
			return;
		}
		for (int r = start; r < rows; ++r)
		{
			ri[pos] = r;
			pick_rows(pos + 1, r + 1);
		}
	};
	pick_rows(0, 0);
}

} // namespace detail

// Generators of E_k(A_G): the (m-k) x (m-k) minors of the projected Fox
// matrix, padded with zero rows so that there are at least m rows. Size <= 0
// means the whole ring; an empty list is the zero ideal. Nonzero minors are
// unit-normalized and deduplicated.
inline std::vector<LaurentPoly> elementary_ideal_gens(const AlexanderMatrix &am,
                                                      int k)
{
	int m = am.cols;
	int size = m - k;
	int n = am.structure.b1;
	if (size <= 0)
		return {LaurentPoly::constant(n, 1)};

	int padded_rows = std::max(am.rows, m);
	std::vector<std::vector<LaurentPoly>> mat(
	    padded_rows, std::vector<LaurentPoly>(m, LaurentPoly(n)));
	for (int i = 0; i < am.rows; ++i)
		for (int j = 0; j < m; ++j)
			mat[i][j] = am.entries_free[i][j];

	std::vector<LaurentPoly> minors;
	detail::minors_of_size(mat, size, LaurentPoly(n), minors);

	std::set<LaurentPoly> dedup;
	for (const LaurentPoly &f : minors)
		if (!f.is_zero())
			dedup.insert(normalize_unit(f));
	return std::vector<LaurentPoly>(dedup.begin(), dedup.end());
}

inline std::vector<LaurentPoly> elementary_ideal_gens(const GroupPresentation &p,
                                                      int k)
{
	return elementary_ideal_gens(alexander_matrix(p), k);
}

// Delta = gcd(E_1), normalized; 0 when E_1 is the zero ideal.
inline LaurentPoly alexander_poly(const AlexanderMatrix &am)
{
	std::vector<LaurentPoly> gens = elementary_ideal_gens(am, 1);
	LaurentPoly g(am.structure.b1);
	for (const LaurentPoly &f : gens)
		g = laurent_gcd(g, f);
	return g;
}

inline LaurentPoly alexander_poly(const GroupPresentation &p)
{
	return alexander_poly(alexander_matrix(p));
}

// dim H^1(G, C_rho) for the presentation 2-complex: b1 at the trivial
// character, otherwise m - 1 - rank of the evaluated Fox matrix over
// Q(zeta_N).
inline int twisted_h1(const AlexanderMatrix &am, const Character &chi)
{
	check_character(am.structure, chi);
	if (chi.is_trivial())
		return am.structure.b1;
	if (am.cols == 0)
		return 0;
	CyclotomicField F(chi.level);
	Matrix<CycloNum> mat(am.rows, am.cols, F.zero());
	for (int i = 0; i < am.rows; ++i)
		for (int j = 0; j < am.cols; ++j)
			mat(i, j) = am.entries_ab[i][j].evaluate(chi);
	int rank = rank_kernel(F, mat).rank;
	return am.cols - 1 - rank;
}

inline int twisted_h1(const GroupPresentation &p, const Character &chi)
{
	return twisted_h1(alexander_matrix(p), chi);
}

// All characters of level dividing `level` with twisted_h1 >= min_depth,
// trivial character first.
inline std::vector<std::pair<Character, int>>
charvar_scan(const AlexanderMatrix &am, long level, int min_depth = 1)
{
	std::vector<std::pair<Character, int>> out;
	for (const Character &chi : all_characters(am.structure, level))
	{
		int d = twisted_h1(am, chi);
		if (d >= min_depth)
			out.push_back({chi, d});
	}
	return out;
}

inline std::vector<std::pair<Character, int>>
charvar_scan(const GroupPresentation &p, long level, int min_depth = 1)
{
	return charvar_scan(alexander_matrix(p), level, min_depth);
}

// ---------------------------------------------------------------------------
// torus containment of the degree-one jump locus

// E_1-style minors over Z[G_ab] (same padding convention as
// elementary_ideal_gens), for specialization at torsion characters.
inline std::vector<AbGroupRingElem> e1_minors_ab(const AlexanderMatrix &am)
{
	int m = am.cols;
	int size = m - 1;
	AbGroupRingElem zero = AbGroupRingElem::zero(am.structure);
	if (size <= 0)
		return {AbGroupRingElem::constant(am.structure, 1)};
	int padded_rows = std::max(am.rows, m);
	std::vector<std::vector<AbGroupRingElem>> mat(
	    padded_rows, std::vector<AbGroupRingElem>(m, zero));
	for (int i = 0; i < am.rows; ++i)
		for (int j = 0; j < m; ++j)
			mat[i][j] = am.entries_ab[i][j];
	std::vector<AbGroupRingElem> minors;
	detail::minors_of_size(mat, size, zero, minors);
	std::vector<AbGroupRingElem> out;
	for (auto &f : minors)
		if (!f.is_zero())
			out.push_back(std::move(f));
	return out;
}

// True iff on every component of the character torus (one per torsion
// character chi) the zero set of E_1 specialized at chi, inside (C*)^n, is
// contained in {1}.
inline bool v11_in_one(const AlexanderMatrix &am)
{
	int n = am.structure.b1;
	if (n < 1)
		throw std::invalid_argument("v11_in_one: requires b1 >= 1");
	std::vector<AbGroupRingElem> minors = e1_minors_ab(am);

	for (const Character &chi : torsion_characters(am.structure))
	{
		CyclotomicField F(chi.level);
		std::vector<MPoly<CyclotomicField>> gens;
		for (const AbGroupRingElem &f : minors)
		{
			auto spec = f.specialize_torsion(chi, F);
			if (spec.empty())
				continue;
			gens.push_back(clear_cyclo_laurent(F, spec, n));
		}
		if (!torus_zero_set_in_one(F, gens, n))
			return false;
	}
	return true;
}

inline bool v11_in_one(const GroupPresentation &p)
{
	return v11_in_one(alexander_matrix(p));
}

} // namespace nilpo
