#pragma once

#include "nilpo/rational.hpp"
#include "nilpo/word.hpp"

#include <map>
#include <vector>

namespace nilpo {

// Free associative algebra over Q on ngens generators, truncated at word
// length cap. Keys are words of generator indices.
class NCPoly
{
  public:
	using Word = std::vector<int>;
	using Terms = std::map<Word, Rat>;

	NCPoly() : ngens_(0), cap_(0) {}
	NCPoly(int ngens, int cap) : ngens_(ngens), cap_(cap) {}

	static NCPoly one(int ngens, int cap)
	{
		NCPoly p(ngens, cap);
		p.add_term({}, 1);
		return p;
	}
	static NCPoly generator(int ngens, int cap, int i, const Rat &c = 1)
	{
		NCPoly p(ngens, cap);
		p.add_term({i}, c);
		return p;
	}

	int ngens() const { return ngens_; }
	int cap() const { return cap_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const Word &w, const Rat &c)
	{
		if (c == 0 || int(w.size()) > cap_)
			return;
		auto [it, fresh] = terms_.emplace(w, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	NCPoly operator+(const NCPoly &o) const
	{
		NCPoly r = *this;
		for (const auto &[w, c] : o.terms_)
			r.add_term(w, c);
		return r;
	}
	NCPoly operator-(const NCPoly &o) const
	{
		NCPoly r = *this;
		for (const auto &[w, c] : o.terms_)
			r.add_term(w, -c);
		return r;
	}
	NCPoly operator*(const NCPoly &o) const
	{
		NCPoly r(ngens_, cap_);
		for (const auto &[w1, c1] : terms_)
			for (const auto &[w2, c2] : o.terms_)
			{
				if (int(w1.size() + w2.size()) > cap_)
					continue;
				Word w = w1;
				w.insert(w.end(), w2.begin(), w2.end());
				r.add_term(w, c1 * c2);
			}
		return r;
	}
	NCPoly operator*(const Rat &c) const
	{
		NCPoly r(ngens_, cap_);
		for (const auto &[w, k] : terms_)
			r.add_term(w, k * c);
		return r;
	}

	bool operator==(const NCPoly &o) const
	{
		return ngens_ == o.ngens_ && cap_ == o.cap_ && terms_ == o.terms_;
	}

	Rat constant_term() const
	{
		auto it = terms_.find(Word{});
		return it == terms_.end() ? Rat(0) : it->second;
	}

	NCPoly degree_component(int d) const
	{
		NCPoly r(ngens_, cap_);
		for (const auto &[w, c] : terms_)
			if (int(w.size()) == d)
				r.add_term(w, c);
		return r;
	}

	NCPoly commutator(const NCPoly &o) const { return *this * o - o * *this; }

  private:
	int ngens_;
	int cap_;
	Terms terms_;
};

// exp of an element with zero constant term
inline NCPoly nc_exp(const NCPoly &a)
{
	if (a.constant_term() != 0)
		throw std::invalid_argument("nc_exp: nonzero constant term");
	NCPoly acc = NCPoly::one(a.ngens(), a.cap());
	NCPoly pw = NCPoly::one(a.ngens(), a.cap());
	Rat fact = 1;
	for (int k = 1; k <= a.cap(); ++k)
	{
		pw = pw * a;
		if (pw.is_zero())
			break;
		fact *= k;
		acc = acc + pw * (1 / fact);
	}
	return acc;
}

// log of an element with constant term 1
inline NCPoly nc_log(const NCPoly &u)
{
	if (u.constant_term() != 1)
		throw std::invalid_argument("nc_log: constant term must be 1");
	NCPoly v = u;
	v.add_term({}, -1);
	NCPoly acc(u.ngens(), u.cap());
	NCPoly pw = NCPoly::one(u.ngens(), u.cap());
	for (int k = 1; k <= u.cap(); ++k)
	{
		pw = pw * v;
		if (pw.is_zero())
			break;
		Rat c = Rat(k % 2 == 1 ? 1 : -1) / k;
		acc = acc + pw * c;
	}
	return acc;
}

// image of a free word under x_i -> exp(X_i)
inline NCPoly nc_of_word(const FreeWord &w, int ngens, int cap)
{
	NCPoly acc = NCPoly::one(ngens, cap);
	for (const Letter &l : w.letters())
	{
		NCPoly x = NCPoly::generator(ngens, cap, l.gen, Rat(l.exp));
		acc = acc * nc_exp(x);
	}
	return acc;
}

} // namespace nilpo
