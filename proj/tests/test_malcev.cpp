#include "nilpo/malcev.hpp"

#include "gtest/gtest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nilpo;

namespace {

GroupPresentation load(const std::string &name)
{
	std::ifstream in(std::filesystem::path(CORPUS_DIR) / name);
	std::stringstream ss;
	ss << in.rdbuf();
	GroupPresentation p = parse_presentation(ss.str());
	if (p.name.empty())
		p.name = name;
	return p;
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

} // namespace

TEST(Bch, InverseCancels)
{
	auto basis = hall_basis(2, 5);
	GradedLie x = GradedLie::generator(basis, 0);
	EXPECT_TRUE(bch(x, x * Rat(-1)).is_zero());
}

TEST(Bch, LowDegreeCoefficients)
{
	auto basis = hall_basis(2, 3);
	GradedLie x = GradedLie::generator(basis, 0);
	GradedLie y = GradedLie::generator(basis, 1);
	GradedLie result = bch(x, y);

	// X + Y + 1/2 [X,Y] + 1/12 [X,[X,Y]] + 1/12 [Y,[Y,X]]
	GradedLie expected =
	    x + y + bracket(x, y) * Rat(1, 2) +
	    bracket_trunc(x, bracket(x, y)) * Rat(1, 12) +
	    bracket_trunc(y, bracket(y, x)) * Rat(1, 12);
	EXPECT_EQ(result, expected);
}

TEST(Bch, TensorAlgebraOracleUpToDegreeFive)
{
	// exp(bch(a,b)) = exp(a) exp(b) in the truncated tensor algebra
	auto basis = hall_basis(2, 5);
	GradedLie x = GradedLie::generator(basis, 0);
	GradedLie y = GradedLie::generator(basis, 1);
	GradedLie z = bch(x, y);
	NCPoly lhs = nc_exp(nc_from_lie(z, 5));
	NCPoly rhs = nc_exp(nc_from_lie(x, 5)) * nc_exp(nc_from_lie(y, 5));
	EXPECT_EQ(lhs, rhs);

	// and with a nontrivial pair
	GradedLie a = x * Rat(2) + bracket(x, y);
	GradedLie b = y * Rat(-1) + bracket_trunc(x, bracket(x, y)) * Rat(1, 3);
	GradedLie c = bch(a, b);
	EXPECT_EQ(nc_exp(nc_from_lie(c, 5)),
	          nc_exp(nc_from_lie(a, 5)) * nc_exp(nc_from_lie(b, 5)));
}

TEST(GroupToLie, Fixtures)
{
	auto basis = hall_basis(2, 4);
	// commutator word maps to the bracket plus higher terms
	GroupPresentation p =
	    parse_presentation("gens x y\nrel [x,y]\nrel x^3\n");
	GradedLie cw = group_to_lie(p.relators[0], basis);
	GradedLie x = GradedLie::generator(basis, 0);
	GradedLie y = GradedLie::generator(basis, 1);
	EXPECT_EQ(cw.component(2), bracket(x, y));
	for (const Rat &c : cw.linear_part())
		EXPECT_EQ(c, 0);

	// x^3 -> 3X on the nose
	GradedLie cube = group_to_lie(p.relators[1], basis);
	EXPECT_EQ(cube, x * Rat(3));

	// Klein bottle relator: 2A + [T,A] + higher
	GroupPresentation k = load("klein.grp"); // gens a t
	GradedLie kw = group_to_lie(k.relators[0], basis);
	GradedLie a = GradedLie::generator(basis, 0);
	GradedLie t = GradedLie::generator(basis, 1);
	EXPECT_EQ(kw.component(1), a * Rat(2));
	EXPECT_EQ(kw.component(2), bracket(t, a));
}

TEST(GroupToLie, LinearPartIsAbelianizedExponentCorpusWide)
{
	for (const auto &f : corpus_files())
	{
		GroupPresentation p = load(f);
		if (p.ngens() == 0)
			continue;
		auto basis = hall_basis(p.ngens(), 3);
		for (const FreeWord &w : p.relators)
		{
			auto lin = group_to_lie(w, basis).linear_part();
			auto ev = w.exponent_vector(p.ngens());
			for (int g = 0; g < p.ngens(); ++g)
				EXPECT_EQ(lin[g], Rat(ev[g])) << f;
		}
	}
}

TEST(Minimize, Fixtures)
{
	{
		MalcevPresentation mp =
		    group_malcev_presentation(load("heisenberg.grp"), 5);
		EXPECT_EQ(mp.ngens, 2);
		ASSERT_EQ(mp.relators.size(), 2u);
		// degree-2 parts vanish, degree-3 parts span both Hall elements
		detail::RowSpace span(mp.basis->dim(3));
		for (const GradedLie &r : mp.relators)
		{
			EXPECT_TRUE(r.component(2).is_zero());
			span.insert(detail::degree_vector(r.component(3), 3));
		}
		EXPECT_EQ(span.rank(), 2);
	}
	{
		MalcevPresentation mp = group_malcev_presentation(load("klein.grp"), 5);
		EXPECT_EQ(mp.ngens, 1);
		EXPECT_TRUE(mp.relators.empty());
	}
	{
		MalcevPresentation mp = group_malcev_presentation(load("z2.grp"), 5);
		EXPECT_EQ(mp.ngens, 2);
		ASSERT_EQ(mp.relators.size(), 1u);
		GradedLie x = GradedLie::generator(mp.basis, 0);
		GradedLie y = GradedLie::generator(mp.basis, 1);
		EXPECT_EQ(mp.relators[0].component(2), bracket(x, y));
	}
}

TEST(Minimize, ContractCorpusWide)
{
	for (const auto &f : corpus_files())
	{
		GroupPresentation p = load(f);
		MalcevPresentation mp = group_malcev_presentation(p, 5);
		EXPECT_EQ(mp.ngens - int(mp.relators.size()), p.deficiency()) << f;
		for (const GradedLie &r : mp.relators)
			for (const Rat &c : r.linear_part())
				EXPECT_EQ(c, 0) << f;
	}
}

TEST(GrDims, Fixtures)
{
	EXPECT_EQ(malcev_gr_dims(load("heisenberg.grp"), 4),
	          (std::vector<long>{2, 1, 0, 0}));
	EXPECT_EQ(malcev_gr_dims(load("z2.grp"), 4),
	          (std::vector<long>{2, 0, 0, 0}));
	EXPECT_EQ(malcev_gr_dims(load("klein.grp"), 4),
	          (std::vector<long>{1, 0, 0, 0}));
	EXPECT_EQ(malcev_gr_dims(load("z3.grp"), 4),
	          (std::vector<long>{3, 0, 0, 0}));
	EXPECT_EQ(malcev_gr_dims(load("free2_class2.grp"), 4),
	          (std::vector<long>{2, 1, 0, 0}));
	EXPECT_EQ(malcev_gr_dims(load("unipotent_rank2.grp"), 4),
	          (std::vector<long>{2, 1, 0, 0}));
	// free group: Witt dimensions
	EXPECT_EQ(malcev_gr_dims(load("free2.grp"), 4),
	          (std::vector<long>{2, 1, 2, 3}));
}

TEST(GrDims, MatchesHomogeneousQuotient)
{
	// when all minimized relators are homogeneous, the truncated ideal
	// computation agrees with the graded one
	for (const auto &f : {"heisenberg.grp", "z2.grp"})
	{
		GroupPresentation p = load(f);
		MalcevPresentation mp = group_malcev_presentation(p, 5);
		std::vector<GradedLie> lowest;
		bool homogeneous = true;
		for (const GradedLie &r : mp.relators)
		{
			if (r.is_zero())
				continue;
			if (r.min_degree() != r.max_degree())
				homogeneous = false;
			lowest.push_back(r.component(r.min_degree()));
		}
		if (!homogeneous)
			continue;
		auto graded = graded_quotient_dims(mp.basis, lowest, 5);
		EXPECT_EQ(malcev_gr_dims(mp, 5), graded) << f;
	}
}

TEST(GrDims, ZnDetector)
{
	// nilpotent torsion-free corpus entries with dims (n, 0, ..., 0) are
	// exactly the presentations of Z^n
	std::set<std::string> flat;
	for (const auto &f : corpus_files())
	{
		GroupPresentation p = load(f);
		auto dims = malcev_gr_dims(p, 4);
		bool is_flat = true;
		for (size_t i = 1; i < dims.size(); ++i)
			if (dims[i] != 0)
				is_flat = false;
		if (is_flat)
			flat.insert(f);
	}
	// klein.grp presents a non-nilpotent group whose rational lower central
	// series still collapses; the nilpotent flat ones are the Z^n files plus
	// the Hopf presentation of Z^2
	EXPECT_TRUE(flat.count("z.grp"));
	EXPECT_TRUE(flat.count("z2.grp"));
	EXPECT_TRUE(flat.count("z3.grp"));
	EXPECT_TRUE(flat.count("hopf.grp"));
	EXPECT_TRUE(flat.count("klein.grp"));
	EXPECT_FALSE(flat.count("heisenberg.grp"));
	EXPECT_FALSE(flat.count("free2.grp"));
	EXPECT_FALSE(flat.count("unipotent_rank2.grp"));
	EXPECT_FALSE(flat.count("borromean.grp"));
}

TEST(LieFromNc, RejectsNonPrimitiveElements)
{
	auto basis = hall_basis(2, 3);
	NCPoly xx(2, 3);
	xx.add_term({0, 0}, 1); // X*X is not a Lie element
	EXPECT_THROW(lie_from_nc(xx, basis), std::logic_error);
}
