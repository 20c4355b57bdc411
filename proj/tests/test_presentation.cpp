#include "nilpo/presentation.hpp"

#include "gtest/gtest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace nilpo;

namespace {

GroupPresentation load(const std::string &name)
{
	std::ifstream in(std::filesystem::path(CORPUS_DIR) / name);
	std::stringstream ss;
	ss << in.rdbuf();
	return parse_presentation(ss.str());
}

std::vector<std::string> corpus_files()
{
	std::vector<std::string> out;
	for (const auto &p : std::filesystem::directory_iterator(CORPUS_DIR))
		if (p.path().extension() == ".grp")
			out.push_back(p.path().filename().string());
	std::sort(out.begin(), out.end());
	return out;
}

FreeWord random_word(std::mt19937 &rng, int ngens, int len)
{
	std::uniform_int_distribution<int> gen(0, ngens - 1);
	std::uniform_int_distribution<int> sign(0, 1);
	std::vector<Letter> letters;
	for (int i = 0; i < len; ++i)
		letters.push_back({gen(rng), sign(rng) ? 1L : -1L});
	return FreeWord::from_letters(letters);
}

} // namespace

TEST(Parser, CommutatorSugar)
{
	GroupPresentation p = parse_presentation("gens x y\nrel [x,y]\n");
	ASSERT_EQ(p.relators.size(), 1u);
	const FreeWord &w = p.relators[0];
	// x y x^-1 y^-1: four letters, freely reduced
	ASSERT_EQ(w.letters().size(), 4u);
	EXPECT_EQ(w.letters()[0], (Letter{0, 1}));
	EXPECT_EQ(w.letters()[1], (Letter{1, 1}));
	EXPECT_EQ(w.letters()[2], (Letter{0, -1}));
	EXPECT_EQ(w.letters()[3], (Letter{1, -1}));
}

TEST(Parser, IdentityRelatorDropped)
{
	GroupPresentation p = parse_presentation("gens x\nrel x x^-1\n");
	EXPECT_TRUE(p.relators.empty());
	EXPECT_EQ(p.deficiency(), 1);
}

TEST(Parser, HeisenbergRelatorLengths)
{
	GroupPresentation p =
	    parse_presentation("gens x y\nrel [x,[x,y]]\nrel [y,[x,y]]\n");
	ASSERT_EQ(p.relators.size(), 2u);
	// by hand: x (xyx^-1y^-1) x^-1 (yxy^-1x^-1) reduces to 10 letters, while
	// y (xyx^-1y^-1) y^-1 (yxy^-1x^-1) loses a y^-1 y pair and lands on 8
	EXPECT_EQ(p.relators[0].length(), 10);
	EXPECT_EQ(p.relators[1].length(), 8);
}

TEST(Parser, PowersParenthesesComments)
{
	GroupPresentation p = parse_presentation(
	    "# a comment\ngroup demo\ngens a b\nrel (a b)^2 a^-3 # trailing\n");
	EXPECT_EQ(p.name, "demo");
	ASSERT_EQ(p.relators.size(), 1u);
	// a b a b a^-3
	EXPECT_EQ(p.relators[0].length(), 7);
}

TEST(Parser, Errors)
{
	try
	{
		parse_presentation("gens x\nrel x q\n");
		FAIL() << "undeclared generator accepted";
	}
	catch (const ParseError &e)
	{
		EXPECT_EQ(e.line, 2);
		EXPECT_GT(e.col, 0);
	}
	EXPECT_THROW(parse_presentation("gens x x\n"), ParseError);
	EXPECT_THROW(parse_presentation("gens x\nrel [x\n"), ParseError);
	EXPECT_THROW(parse_presentation("bogus x\n"), ParseError);
	EXPECT_THROW(parse_presentation("gens x\nrel x^\n"), ParseError);
}

TEST(Parser, RoundTripCorpus)
{
	for (const auto &f : corpus_files())
	{
		GroupPresentation p = load(f);
		GroupPresentation q = parse_presentation(render_presentation(p));
		EXPECT_EQ(p.name, q.name) << f;
		EXPECT_EQ(p.generators, q.generators) << f;
		EXPECT_EQ(p.relators, q.relators) << f;
	}
}

TEST(Words, ReductionProperties)
{
	std::mt19937 rng(99);
	for (int trial = 0; trial < 300; ++trial)
	{
		FreeWord u = random_word(rng, 3, 8);
		FreeWord v = random_word(rng, 3, 8);
		FreeWord w = random_word(rng, 3, 8);
		// associativity at the word level
		EXPECT_EQ((u * v) * w, u * (v * w));
		// reduction is length-nonincreasing under concatenation
		EXPECT_LE((u * v).length(), u.length() + v.length());
		// inverse cancels
		EXPECT_TRUE((u * u.inverse()).empty());
		// idempotence: rebuilding from letters changes nothing
		EXPECT_EQ(FreeWord::from_letters(u.letters()), u);
	}
}

TEST(Abelianize, Fixtures)
{
	{
		AbelianStructure ab = abelianize(load("heisenberg.grp"));
		EXPECT_EQ(ab.b1, 2);
		EXPECT_TRUE(ab.torsion.empty());
	}
	{
		AbelianStructure ab = abelianize(load("klein.grp"));
		EXPECT_EQ(ab.b1, 1);
		ASSERT_EQ(ab.torsion.size(), 1u);
		EXPECT_EQ(ab.torsion[0], 2);
	}
	for (long k : {2L, 3L, 6L})
	{
		std::string text = "gens x y\nrel y^" + std::to_string(k) +
		                   "\nrel [x,y]\n";
		AbelianStructure ab = abelianize(parse_presentation(text));
		EXPECT_EQ(ab.b1, 1);
		ASSERT_EQ(ab.torsion.size(), 1u);
		EXPECT_EQ(ab.torsion[0], k);
	}
	{
		// trivial-able presentation: b1 = 0 with no torsion
		AbelianStructure ab = abelianize(parse_presentation("gens x\nrel x\n"));
		EXPECT_EQ(ab.b1, 0);
		EXPECT_TRUE(ab.torsion.empty());
	}
}

TEST(Abelianize, RelatorsMapToZeroCorpusWide)
{
	for (const auto &f : corpus_files())
	{
		GroupPresentation p = load(f);
		AbelianStructure ab = abelianize(p);
		for (const FreeWord &w : p.relators)
		{
			auto ev = w.exponent_vector(p.ngens());
			for (const Int &c : ab.free_class(ev))
				EXPECT_EQ(c, 0) << f;
			for (const Int &c : ab.torsion_class(ev))
				EXPECT_EQ(c, 0) << f;
		}
	}
}

TEST(Semidirect, KleinBottle)
{
	Matrix<Int> alpha(1, 1, Int(-1));
	GroupPresentation p = build_semidirect(1, {}, alpha, "klein");
	ASSERT_EQ(p.generators.size(), 2u);
	ASSERT_EQ(p.relators.size(), 1u);
	// t a t^-1 a
	GroupPresentation ref = parse_presentation("gens a t\nrel t a t^-1 a\n");
	EXPECT_EQ(p.relators[0], ref.relators[0]);

	auto nil = alpha_nilpotence(1, {}, alpha);
	EXPECT_FALSE(nil.nilpotent);
}

TEST(Semidirect, TorsionInvertingAction)
{
	Matrix<Int> alpha(1, 1, Int(-1));
	GroupPresentation p = build_semidirect(0, {Int(3)}, alpha, "zmod3");
	ASSERT_EQ(p.relators.size(), 2u);
	GroupPresentation ref =
	    parse_presentation("gens a t\nrel a^3\nrel t a t^-1 a\n");
	EXPECT_EQ(p.relators[0], ref.relators[0]);
	EXPECT_EQ(p.relators[1], ref.relators[1]);

	// (alpha - id) = -2 is invertible mod 3, never nilpotent
	EXPECT_FALSE(alpha_nilpotence(0, {Int(3)}, alpha).nilpotent);
}

TEST(Semidirect, DirectProductAndUnipotent)
{
	GroupPresentation z3 = build_semidirect(2, {}, identity_matrix(2), "z3");
	EXPECT_EQ(z3.ngens(), 3);
	ASSERT_EQ(z3.relators.size(), 3u); // [a1,a2] and the two t-conjugations
	auto nil_id = alpha_nilpotence(2, {}, identity_matrix(2));
	EXPECT_TRUE(nil_id.nilpotent);
	EXPECT_EQ(nil_id.class_at_most, 1);

	Matrix<Int> unip = identity_matrix(2);
	unip(0, 1) = 1;
	auto nil_u = alpha_nilpotence(2, {}, unip);
	EXPECT_TRUE(nil_u.nilpotent);
	EXPECT_EQ(nil_u.class_at_most, 2);
}

TEST(Semidirect, RejectsNonAutomorphisms)
{
	Matrix<Int> twice(1, 1, Int(2));
	EXPECT_THROW(build_semidirect(1, {}, twice), std::invalid_argument);
	// 0 is not invertible mod 4
	Matrix<Int> zero(1, 1, Int(0));
	EXPECT_THROW(build_semidirect(0, {Int(4)}, zero), std::invalid_argument);
	// torsion generator cannot map into the free part
	Matrix<Int> mix = identity_matrix(2);
	mix(0, 1) = 1; // column of the torsion generator hits the free row
	EXPECT_THROW(build_semidirect(1, {Int(2)}, mix), std::invalid_argument);
}
