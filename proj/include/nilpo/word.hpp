#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nilpo {

// One maximal run x_gen^exp inside a freely reduced word.
struct Letter
{
	int gen = 0;
	long exp = 0;

	bool operator==(const Letter &o) const
	{
		return gen == o.gen && exp == o.exp;
	}
	bool operator<(const Letter &o) const
	{
		if (gen != o.gen)
			return gen < o.gen;
		return exp < o.exp;
	}
};

// Freely reduced word: adjacent letters have distinct generators, exponents
// nonzero. The empty word is the identity.
class FreeWord
{
  public:
	FreeWord() = default;

	static FreeWord from_letters(const std::vector<Letter> &raw)
	{
		FreeWord w;
		for (const Letter &l : raw)
			w.append(l.gen, l.exp);
		return w;
	}

	static FreeWord generator(int gen, long exp = 1)
	{
		return from_letters({{gen, exp}});
	}

	const std::vector<Letter> &letters() const { return letters_; }
	bool empty() const { return letters_.empty(); }

	// total letter count, sum |exp|
	long length() const
	{
		long n = 0;
		for (const Letter &l : letters_)
			n += l.exp < 0 ? -l.exp : l.exp;
		return n;
	}

	void append(int gen, long exp)
	{
		if (exp == 0)
			return;
		if (!letters_.empty() && letters_.back().gen == gen)
		{
			letters_.back().exp += exp;
			if (letters_.back().exp == 0)
				letters_.pop_back();
			return;
		}
		letters_.push_back({gen, exp});
	}

	FreeWord operator*(const FreeWord &o) const
	{
		FreeWord r = *this;
		for (const Letter &l : o.letters_)
			r.append(l.gen, l.exp);
		return r;
	}

	FreeWord inverse() const
	{
		FreeWord r;
		for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
			r.letters_.push_back({it->gen, -it->exp});
		return r;
	}

	// u v u^-1 v^-1
	static FreeWord commutator(const FreeWord &u, const FreeWord &v)
	{
		return u * v * u.inverse() * v.inverse();
	}

	FreeWord power(long e) const
	{
		if (e == 0)
			return FreeWord();
		FreeWord base = e > 0 ? *this : inverse();
		long n = e > 0 ? e : -e;
		FreeWord r;
		for (long i = 0; i < n; ++i)
			r = r * base;
		return r;
	}

	int max_gen() const
	{
		int m = -1;
		for (const Letter &l : letters_)
			if (l.gen > m)
				m = l.gen;
		return m;
	}

	std::vector<long> exponent_vector(int ngens) const
	{
		std::vector<long> e(ngens, 0);
		for (const Letter &l : letters_)
		{
			if (l.gen >= ngens)
				throw std::out_of_range("FreeWord: generator out of range");
			e[l.gen] += l.exp;
		}
		return e;
	}

	bool operator==(const FreeWord &o) const { return letters_ == o.letters_; }
	bool operator!=(const FreeWord &o) const { return !(*this == o); }
	bool operator<(const FreeWord &o) const { return letters_ < o.letters_; }

  private:
	std::vector<Letter> letters_;
};

} // namespace nilpo
