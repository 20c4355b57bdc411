#pragma once

#include "nilpo/fields.hpp"
#include "nilpo/presentation.hpp"

#include <numeric>
#include <vector>

namespace nilpo {

// Finite-order character of G_ab: values are powers of zeta_level. The value
// on torsion generator j must have order dividing d_j, i.e.
// d_j * torsion_exp[j] = 0 mod level.
struct Character
{
	long level = 1;
	std::vector<long> free_exp;    // one exponent per Z factor, mod level
	std::vector<long> torsion_exp; // one exponent per torsion factor, mod level

	bool is_trivial() const
	{
		for (long e : free_exp)
			if (mod_floor(e, level) != 0)
				return false;
		for (long e : torsion_exp)
			if (mod_floor(e, level) != 0)
				return false;
		return true;
	}

	bool operator==(const Character &o) const
	{
		return level == o.level && free_exp == o.free_exp &&
		       torsion_exp == o.torsion_exp;
	}
	bool operator<(const Character &o) const
	{
		if (level != o.level)
			return level < o.level;
		if (free_exp != o.free_exp)
			return free_exp < o.free_exp;
		return torsion_exp < o.torsion_exp;
	}
};

inline void check_character(const AbelianStructure &ab, const Character &chi)
{
	if (int(chi.free_exp.size()) != ab.b1 ||
	    chi.torsion_exp.size() != ab.torsion.size())
		throw std::invalid_argument("character: shape mismatch with G_ab");
	if (chi.level < 1)
		throw std::invalid_argument("character: level must be >= 1");
	for (size_t j = 0; j < ab.torsion.size(); ++j)
	{
		Int r = ab.torsion[j] * chi.torsion_exp[j] % chi.level;
		if (r != 0)
			throw std::invalid_argument(
			    "character: torsion value order incompatible with d_j");
	}
}

inline Character trivial_character(const AbelianStructure &ab, long level = 1)
{
	return Character{level, std::vector<long>(ab.b1, 0),
	                 std::vector<long>(ab.torsion.size(), 0)};
}

// all characters of G_ab of level dividing `level`, trivial one first, the
// rest in lexicographic exponent order
inline std::vector<Character> all_characters(const AbelianStructure &ab,
                                             long level)
{
	if (level < 1)
		throw std::invalid_argument("all_characters: level must be >= 1");
	std::vector<std::vector<long>> choices;
	for (int i = 0; i < ab.b1; ++i)
	{
		std::vector<long> c(level);
		std::iota(c.begin(), c.end(), 0);
		choices.push_back(std::move(c));
	}
	for (const Int &d : ab.torsion)
	{
		// d * e = 0 mod level forces e to be a multiple of level / gcd(d, level)
		long g = int_gcd(d, Int(level)).convert_to<long>();
		std::vector<long> c;
		for (long k = 0; k < g; ++k)
			c.push_back(k * (level / g));
		choices.push_back(std::move(c));
	}

	std::vector<Character> out;
	std::vector<size_t> idx(choices.size(), 0);
	for (;;)
	{
		Character chi;
		chi.level = level;
		for (int i = 0; i < ab.b1; ++i)
			chi.free_exp.push_back(choices[i][idx[i]]);
		for (size_t j = 0; j < ab.torsion.size(); ++j)
			chi.torsion_exp.push_back(choices[ab.b1 + j][idx[ab.b1 + j]]);
		out.push_back(std::move(chi));
		int k = int(choices.size()) - 1;
		while (k >= 0 && ++idx[k] == choices[k].size())
		{
			idx[k] = 0;
			--k;
		}
		if (k < 0)
			break;
	}
	return out;
}

// torsion-only characters (components of the character torus), at the
// exponent of the torsion subgroup
inline std::vector<Character> torsion_characters(const AbelianStructure &ab)
{
	long level = 1;
	for (const Int &d : ab.torsion)
		level = int_lcm(Int(level), d).convert_to<long>();
	std::vector<Character> out;
	std::vector<long> cur(ab.torsion.size(), 0);
	for (;;)
	{
		Character chi;
		chi.level = level;
		chi.free_exp.assign(ab.b1, 0);
		for (size_t j = 0; j < ab.torsion.size(); ++j)
			cur[j] == 0
			    ? chi.torsion_exp.push_back(0)
			    : chi.torsion_exp.push_back(
			          cur[j] * (level / ab.torsion[j].convert_to<long>()));
		out.push_back(std::move(chi));
		int k = int(ab.torsion.size()) - 1;
		while (k >= 0 && Int(++cur[k]) == ab.torsion[k])
		{
			cur[k] = 0;
			--k;
		}
		if (k < 0)
			break;
	}
	return out;
}

} // namespace nilpo
