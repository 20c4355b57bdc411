#pragma once

#include "nilpo/matrix.hpp"
#include "nilpo/rational.hpp"
#include "nilpo/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace nilpo {

struct ParseError : std::runtime_error
{
	int line, col;
	ParseError(const std::string &msg, int line_, int col_)
	    : std::runtime_error(msg + " at line " + std::to_string(line_) +
	                         ", column " + std::to_string(col_)),
	      line(line_), col(col_)
	{
	}
};

struct GroupPresentation
{
	std::string name;
	std::vector<std::string> generators;
	std::vector<FreeWord> relators;

	int ngens() const { return int(generators.size()); }
	int nrels() const { return int(relators.size()); }
	int deficiency() const { return ngens() - nrels(); }
};

namespace detail {

inline bool is_id_start(char c) { return std::isalpha(unsigned(c)) || c == '_'; }
inline bool is_id_char(char c)
{
	return std::isalnum(unsigned(c)) || c == '_';
}

class WordParser
{
  public:
	WordParser(const std::string &text, int line, int col0,
	           const std::map<std::string, int> &gens)
	    : s_(text), pos_(0), line_(line), col0_(col0), gens_(gens)
	{
	}

	FreeWord parse()
	{
		FreeWord w = parse_word();
		skip_ws();
		if (pos_ != s_.size())
			fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
		return w;
	}

  private:
	const std::string &s_;
	size_t pos_;
	int line_, col0_;
	const std::map<std::string, int> &gens_;

	[[noreturn]] void fail(const std::string &msg)
	{
		throw ParseError(msg, line_, col0_ + int(pos_));
	}

	void skip_ws()
	{
		while (pos_ < s_.size() && std::isspace(unsigned(s_[pos_])))
			++pos_;
	}

	bool at_word_start()
	{
		skip_ws();
		if (pos_ >= s_.size())
			return false;
		char c = s_[pos_];
		return is_id_start(c) || c == '(' || c == '[';
	}

	FreeWord parse_word()
	{
		skip_ws();
		if (!at_word_start())
			fail("expected a word");
		FreeWord w;
		while (at_word_start())
			w = w * parse_term();
		return w;
	}

	FreeWord parse_term()
	{
		FreeWord a = parse_atom();
		skip_ws();
		if (pos_ < s_.size() && s_[pos_] == '^')
		{
			++pos_;
			skip_ws();
			long e = parse_int();
			return a.power(e);
		}
		return a;
	}

	long parse_int()
	{
		size_t start = pos_;
		if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
			++pos_;
		size_t digits = pos_;
		while (pos_ < s_.size() && std::isdigit(unsigned(s_[pos_])))
			++pos_;
		if (pos_ == digits)
			fail("expected an integer exponent");
		return std::stol(s_.substr(start, pos_ - start));
	}

	FreeWord parse_atom()
	{
		skip_ws();
		if (pos_ >= s_.size())
			fail("expected a word");
		char c = s_[pos_];
		if (c == '(')
		{
			++pos_;
			FreeWord w = parse_word();
			expect(')');
			return w;
		}
		if (c == '[')
		{
			++pos_;
			FreeWord u = parse_word();
			expect(',');
			FreeWord v = parse_word();
			expect(']');
			return FreeWord::commutator(u, v);
		}
		if (is_id_start(c))
		{
			size_t start = pos_;
			while (pos_ < s_.size() && is_id_char(s_[pos_]))
				++pos_;
			std::string id = s_.substr(start, pos_ - start);
			auto it = gens_.find(id);
			if (it == gens_.end())
			{
				pos_ = start;
				fail("undeclared generator '" + id + "'");
			}
			return FreeWord::generator(it->second);
		}
		fail("unexpected character '" + std::string(1, c) + "'");
	}

	void expect(char c)
	{
		skip_ws();
		if (pos_ >= s_.size() || s_[pos_] != c)
			fail(std::string("expected '") + c + "'");
		++pos_;
	}
};

} // namespace detail

// File format: one directive per line ('group', 'gens', 'rel'), '#' comments.
// [u,v] expands to u v u^-1 v^-1; relators reducing to the identity are
// dropped.
inline GroupPresentation parse_presentation(const std::string &text)
{
	GroupPresentation p;
	std::map<std::string, int> gen_index;
	bool seen_gens = false;

	std::istringstream in(text);
	std::string raw;
	int lineno = 0;
	while (std::getline(in, raw))
	{
		++lineno;
		std::string line = raw;
		size_t hash = line.find('#');
		if (hash != std::string::npos)
			line = line.substr(0, hash);
		size_t start = line.find_first_not_of(" \t\r");
		if (start == std::string::npos)
			continue;
		size_t end = line.find_first_of(" \t\r", start);
		std::string directive = line.substr(start, end - start);
		std::string rest =
		    end == std::string::npos ? "" : line.substr(end);
		int rest_col = int(end == std::string::npos ? line.size() : end) + 1;

		if (directive == "group")
		{
			std::istringstream rs(rest);
			rs >> p.name;
			if (p.name.empty())
				throw ParseError("missing group name", lineno, rest_col);
		}
		else if (directive == "gens")
		{
			if (seen_gens)
				throw ParseError("duplicate gens directive", lineno,
				                 int(start) + 1);
			seen_gens = true;
			size_t pos = 0;
			while (pos < rest.size())
			{
				while (pos < rest.size() && std::isspace(unsigned(rest[pos])))
					++pos;
				if (pos >= rest.size())
					break;
				if (!detail::is_id_start(rest[pos]))
					throw ParseError("invalid generator name", lineno,
					                 rest_col + int(pos));
				size_t s0 = pos;
				while (pos < rest.size() && detail::is_id_char(rest[pos]))
					++pos;
				std::string id = rest.substr(s0, pos - s0);
				if (gen_index.count(id))
					throw ParseError("duplicate generator '" + id + "'",
					                 lineno, rest_col + int(s0));
				gen_index[id] = int(p.generators.size());
				p.generators.push_back(id);
			}
		}
		else if (directive == "rel")
		{
			detail::WordParser wp(rest, lineno, rest_col, gen_index);
			FreeWord w = wp.parse();
			if (!w.empty())
				p.relators.push_back(w);
		}
		else
		{
			throw ParseError("unknown directive '" + directive + "'", lineno,
			                 int(start) + 1);
		}
	}
	return p;
}

inline std::string render_word(const FreeWord &w,
                               const std::vector<std::string> &gens)
{
	if (w.empty())
		return "()";
	std::ostringstream os;
	bool first = true;
	for (const Letter &l : w.letters())
	{
		if (!first)
			os << " ";
		os << gens.at(l.gen);
		if (l.exp != 1)
			os << "^" << l.exp;
		first = false;
	}
	return os.str();
}

inline std::string render_presentation(const GroupPresentation &p)
{
	std::ostringstream os;
	if (!p.name.empty())
		os << "group " << p.name << "\n";
	os << "gens";
	for (const auto &g : p.generators)
		os << " " << g;
	os << "\n";
	for (const FreeWord &w : p.relators)
		os << "rel " << render_word(w, p.generators) << "\n";
	return os.str();
}

// G_ab = Z^b1 + sum Z/d_j via Smith normal form of the relator exponent
// matrix. proj_free/proj_torsion act on generator exponent row vectors from
// the right.
struct AbelianStructure
{
	int b1 = 0;
	std::vector<Int> torsion;      // d_1 | d_2 | ..., each >= 2
	Matrix<Int> exponent_matrix;   // s x m
	Matrix<Int> proj_free;         // m x b1
	Matrix<Int> proj_torsion;      // m x torsion.size(), used mod d_j

	std::vector<Int> free_class(const std::vector<long> &expvec) const
	{
		std::vector<Int> out(b1, Int(0));
		for (int j = 0; j < b1; ++j)
			for (int g = 0; g < proj_free.rows(); ++g)
				out[j] += Int(expvec[g]) * proj_free(g, j);
		return out;
	}

	std::vector<Int> torsion_class(const std::vector<long> &expvec) const
	{
		std::vector<Int> out(torsion.size(), Int(0));
		for (size_t j = 0; j < torsion.size(); ++j)
		{
			for (int g = 0; g < proj_torsion.rows(); ++g)
				out[j] += Int(expvec[g]) * proj_torsion(g, int(j));
			out[j] %= torsion[j];
			if (out[j] < 0)
				out[j] += torsion[j];
		}
		return out;
	}
};

inline Matrix<Int> exponent_matrix(const GroupPresentation &p)
{
	Matrix<Int> e(p.nrels(), p.ngens(), Int(0));
	for (int i = 0; i < p.nrels(); ++i)
	{
		auto v = p.relators[i].exponent_vector(p.ngens());
		for (int j = 0; j < p.ngens(); ++j)
			e(i, j) = v[j];
	}
	return e;
}

inline AbelianStructure abelianize(const GroupPresentation &p)
{
	AbelianStructure ab;
	ab.exponent_matrix = exponent_matrix(p);
	SmithDecomposition snf = smith_normal_form(ab.exponent_matrix);

	int s = p.nrels(), m = p.ngens();
	int diag = std::min(s, m);
	int rank = 0;
	while (rank < diag && snf.D(rank, rank) != 0)
		++rank;
	ab.b1 = m - rank;

	// columns of V^{-1}; V is unimodular so the rational inverse is integral
	Matrix<Rat> vr(m, 2 * m, Rat(0));
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			vr(i, j) = Rat(snf.V(i, j));
	for (int i = 0; i < m; ++i)
		vr(i, m + i) = 1;
	// invert by row reduction
	for (int c = 0; c < m; ++c)
	{
		int pr = c;
		while (pr < m && vr(pr, c) == 0)
			++pr;
		vr.swap_rows(c, pr);
		Rat inv = 1 / vr(c, c);
		for (int j = c; j < 2 * m; ++j)
			vr(c, j) *= inv;
		for (int i = 0; i < m; ++i)
		{
			if (i == c || vr(i, c) == 0)
				continue;
			Rat f = vr(i, c);
			for (int j = c; j < 2 * m; ++j)
				vr(i, j) -= f * vr(c, j);
		}
	}
	Matrix<Int> vinv(m, m, Int(0));
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
		{
			Rat q = vr(i, m + j);
			if (rat_den(q) != 1)
				throw std::logic_error("abelianize: V inverse not integral");
			vinv(i, j) = rat_num(q);
		}

	std::vector<int> free_cols, torsion_cols;
	for (int i = 0; i < m; ++i)
	{
		if (i >= rank)
			free_cols.push_back(i);
		else if (snf.D(i, i) >= 2)
		{
			torsion_cols.push_back(i);
			ab.torsion.push_back(snf.D(i, i));
		}
	}
	ab.proj_free = Matrix<Int>(m, ab.b1, Int(0));
	for (int j = 0; j < ab.b1; ++j)
		for (int i = 0; i < m; ++i)
			ab.proj_free(i, j) = vinv(i, free_cols[j]);
	ab.proj_torsion = Matrix<Int>(m, int(torsion_cols.size()), Int(0));
	for (size_t j = 0; j < torsion_cols.size(); ++j)
		for (int i = 0; i < m; ++i)
			ab.proj_torsion(i, int(j)) = vinv(i, torsion_cols[j]);
	return ab;
}

// ---------------------------------------------------------------------------
// semidirect products A x| Z and the (alpha - id) nilpotence test

namespace detail {

// order of generator i of A = Z^rank + sum Z/d_j (0 = infinite)
inline Int gen_order(int rank, const std::vector<Int> &torsion, int i)
{
	return i < rank ? Int(0) : torsion[size_t(i) - rank];
}

inline void check_alpha(int rank, const std::vector<Int> &torsion,
                        const Matrix<Int> &alpha)
{
	int n = rank + int(torsion.size());
	if (alpha.rows() != n || alpha.cols() != n)
		throw std::invalid_argument("alpha: expected a " + std::to_string(n) +
		                            "x" + std::to_string(n) + " matrix");
	for (const Int &d : torsion)
		if (d < 2)
			throw std::invalid_argument("torsion factors must be >= 2");
	// well-defined: order(g_i) * alpha(g_i) = 0 in A
	for (int i = 0; i < n; ++i)
	{
		Int o = gen_order(rank, torsion, i);
		if (o == 0)
			continue;
		for (int r = 0; r < rank; ++r)
			if (alpha(r, i) != 0)
				throw std::invalid_argument(
				    "alpha not well-defined: torsion generator maps to free part");
		for (size_t j = 0; j < torsion.size(); ++j)
			if (o * alpha(rank + int(j), i) % torsion[j] != 0)
				throw std::invalid_argument(
				    "alpha not well-defined on torsion");
	}
	// invertible over A: [alpha | d_j e_j] must have all invariant factors 1
	Matrix<Int> ext(n, n + int(torsion.size()), Int(0));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			ext(i, j) = alpha(i, j);
	for (size_t j = 0; j < torsion.size(); ++j)
		ext(rank + int(j), n + int(j)) = torsion[j];
	auto snf = smith_normal_form(ext);
	for (int i = 0; i < n; ++i)
		if (snf.D(i, i) != 1)
			throw std::invalid_argument("alpha not invertible over A");
}

} // namespace detail

// Presentation of A x|_alpha Z: generators of A, then t, with relators the
// torsion powers, the commutators making A abelian, and t a_i t^-1 alpha(a_i)^-1.
// alpha acts by columns: alpha(e_i) = column i.
inline GroupPresentation build_semidirect(int rank,
                                          const std::vector<Int> &torsion,
                                          const Matrix<Int> &alpha,
                                          const std::string &name = "semidirect")
{
	detail::check_alpha(rank, torsion, alpha);
	int n = rank + int(torsion.size());

	GroupPresentation p;
	p.name = name;
	if (n == 1)
		p.generators.push_back("a");
	else
		for (int i = 0; i < n; ++i)
			p.generators.push_back("a" + std::to_string(i + 1));
	p.generators.push_back("t");
	int t = n;

	auto push = [&p](const FreeWord &w) {
		if (!w.empty())
			p.relators.push_back(w);
	};

	for (size_t j = 0; j < torsion.size(); ++j)
		push(FreeWord::generator(rank + int(j))
		         .power(torsion[j].convert_to<long>()));
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			push(FreeWord::commutator(FreeWord::generator(i),
			                          FreeWord::generator(j)));
	for (int i = 0; i < n; ++i)
	{
		FreeWord image;
		for (int g = 0; g < n; ++g)
			image = image * FreeWord::generator(g).power(
			                    alpha(g, i).convert_to<long>());
		FreeWord tw = FreeWord::generator(t);
		push(tw * FreeWord::generator(i) * tw.inverse() * image.inverse());
	}
	return p;
}

struct AlphaNilpotence
{
	bool nilpotent = false;
	int class_at_most = 0; // smallest c >= 1 with (alpha - id)^c = 0 on A
};

inline AlphaNilpotence alpha_nilpotence(int rank,
                                        const std::vector<Int> &torsion,
                                        const Matrix<Int> &alpha)
{
	detail::check_alpha(rank, torsion, alpha);
	int n = rank + int(torsion.size());

	Matrix<Int> b(n, n, Int(0));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			b(i, j) = alpha(i, j) - (i == j ? 1 : 0);

	// nilpotency index is at most rank on the free quotient plus the
	// composition length of the torsion part
	long bound = rank + 1;
	for (const Int &d : torsion)
	{
		Int m = d;
		for (Int q = 2; q * q <= m; ++q)
			while (m % q == 0)
			{
				m /= q;
				++bound;
			}
		if (m > 1)
			++bound;
	}

	auto zero_on_A = [&](const Matrix<Int> &M) {
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
			{
				Int o = detail::gen_order(rank, torsion, i);
				if (o == 0)
				{
					if (M(i, j) != 0)
						return false;
				}
				else if (M(i, j) % o != 0)
					return false;
			}
		return true;
	};

	Matrix<Int> power = b;
	for (long c = 1; c <= bound; ++c)
	{
		if (zero_on_A(power))
			return AlphaNilpotence{true, int(c)};
		power = matrix_product(power, b);
	}
	return AlphaNilpotence{false, 0};
}

} // namespace nilpo
