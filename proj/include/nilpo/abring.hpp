#pragma once

#include "nilpo/character.hpp"
#include "nilpo/laurent.hpp"
#include "nilpo/presentation.hpp"
#include "nilpo/word.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nilpo {

// Element of Z[G_ab], keyed by (free exponents in Z^b1, torsion residues
// mod d_j). Torsion residues are kept reduced.
class AbGroupRingElem
{
  public:
	// key: (free part, torsion part)
	using Key = std::pair<std::vector<Int>, std::vector<Int>>;
	using Terms = std::map<Key, Int>;

	AbGroupRingElem() = default;
	AbGroupRingElem(int b1, std::vector<Int> torsion)
	    : b1_(b1), torsion_(std::move(torsion))
	{
	}

	static AbGroupRingElem zero(const AbelianStructure &ab)
	{
		return AbGroupRingElem(ab.b1, ab.torsion);
	}
	static AbGroupRingElem constant(const AbelianStructure &ab, const Int &c)
	{
		AbGroupRingElem r = zero(ab);
		r.add_term(std::vector<Int>(ab.b1, 0),
		           std::vector<Int>(ab.torsion.size(), 0), c);
		return r;
	}
	// image of a free word under F -> Z[G_ab]
	static AbGroupRingElem group_element(const AbelianStructure &ab,
	                                     const FreeWord &w, const Int &c = 1)
	{
		auto ev = w.exponent_vector(ab.exponent_matrix.cols());
		AbGroupRingElem r = zero(ab);
		r.add_term(ab.free_class(ev), ab.torsion_class(ev), c);
		return r;
	}

	int b1() const { return b1_; }
	const std::vector<Int> &torsion() const { return torsion_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(std::vector<Int> free, std::vector<Int> tors, const Int &c)
	{
		if (c == 0)
			return;
		reduce_torsion(tors);
		auto [it, fresh] = terms_.emplace(Key{std::move(free), std::move(tors)}, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	AbGroupRingElem operator+(const AbGroupRingElem &o) const
	{
		check(o);
		AbGroupRingElem r = *this;
		for (const auto &[k, c] : o.terms_)
			r.add_term(k.first, k.second, c);
		return r;
	}
	AbGroupRingElem operator-(const AbGroupRingElem &o) const
	{
		check(o);
		AbGroupRingElem r = *this;
		for (const auto &[k, c] : o.terms_)
			r.add_term(k.first, k.second, -c);
		return r;
	}
	AbGroupRingElem operator-() const
	{
		AbGroupRingElem r(b1_, torsion_);
		for (const auto &[k, c] : terms_)
			r.terms_.emplace(k, -c);
		return r;
	}
	AbGroupRingElem operator*(const AbGroupRingElem &o) const
	{
		check(o);
		AbGroupRingElem r(b1_, torsion_);
		for (const auto &[k1, c1] : terms_)
			for (const auto &[k2, c2] : o.terms_)
			{
				std::vector<Int> free = k1.first;
				for (int i = 0; i < b1_; ++i)
					free[i] += k2.first[i];
				std::vector<Int> tors = k1.second;
				for (size_t j = 0; j < torsion_.size(); ++j)
					tors[j] += k2.second[j];
				r.add_term(std::move(free), std::move(tors), c1 * c2);
			}
		return r;
	}

	bool operator==(const AbGroupRingElem &o) const
	{
		return b1_ == o.b1_ && torsion_ == o.torsion_ && terms_ == o.terms_;
	}

	// projection Z[G_ab] -> Z[Z^b1], torsion -> 1
	LaurentPoly project_free() const
	{
		LaurentPoly f(b1_);
		for (const auto &[k, c] : terms_)
		{
			std::vector<int> e(b1_);
			for (int i = 0; i < b1_; ++i)
				e[i] = k.first[i].convert_to<int>();
			f.add_term(e, c);
		}
		return f;
	}

	CycloNum evaluate(const Character &chi) const
	{
		if (int(chi.free_exp.size()) != b1_ ||
		    chi.torsion_exp.size() != torsion_.size())
			throw std::invalid_argument("evaluate: character shape mismatch");
		for (size_t j = 0; j < torsion_.size(); ++j)
			if (torsion_[j] * chi.torsion_exp[j] % chi.level != 0)
				throw std::invalid_argument(
				    "evaluate: character inconsistent with torsion orders");
		CyclotomicField F(chi.level);
		CycloNum acc = F.zero();
		for (const auto &[k, c] : terms_)
		{
			Int z = 0;
			for (int i = 0; i < b1_; ++i)
				z += k.first[i] * chi.free_exp[i];
			for (size_t j = 0; j < torsion_.size(); ++j)
				z += k.second[j] * chi.torsion_exp[j];
			long ze = (z % chi.level).convert_to<long>();
			acc = F.add(acc, F.mul(F.from_int(c), F.zeta_power(ze)));
		}
		return acc;
	}

	// specialize the torsion part at a torsion character, leaving a Laurent
	// polynomial in the free variables with coefficients in Q(zeta_level)
	std::map<std::vector<int>, CycloNum>
	specialize_torsion(const Character &chi, const CyclotomicField &F) const
	{
		std::map<std::vector<int>, CycloNum> out;
		for (const auto &[k, c] : terms_)
		{
			std::vector<int> e(b1_);
			for (int i = 0; i < b1_; ++i)
				e[i] = k.first[i].convert_to<int>();
			Int z = 0;
			for (size_t j = 0; j < torsion_.size(); ++j)
				z += k.second[j] * chi.torsion_exp[j];
			CycloNum v =
			    F.mul(F.from_int(c), F.zeta_power((z % F.level()).convert_to<long>()));
			auto it = out.find(e);
			if (it == out.end())
				out.emplace(e, v);
			else
			{
				it->second = F.add(it->second, v);
				if (F.is_zero(it->second))
					out.erase(it);
			}
		}
		return out;
	}

  private:
	int b1_ = 0;
	std::vector<Int> torsion_;
	Terms terms_;

	void check(const AbGroupRingElem &o) const
	{
		if (b1_ != o.b1_ || torsion_ != o.torsion_)
			throw std::invalid_argument("AbGroupRingElem: structure mismatch");
	}

	void reduce_torsion(std::vector<Int> &tors) const
	{
		for (size_t j = 0; j < torsion_.size(); ++j)
		{
			tors[j] %= torsion_[j];
			if (tors[j] < 0)
				tors[j] += torsion_[j];
		}
	}
};

} // namespace nilpo
