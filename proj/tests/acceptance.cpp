// Acceptance battery: fifteen exact checks over the bundled corpus, one
// PASS/FAIL line each, nonzero exit on any failure. All comparisons are
// exact; there are no tolerances anywhere.

#include "nilpo/report.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <random>

using namespace nilpo;

namespace {

int failures = 0;

void criterion(const std::string &name, bool pass)
{
	std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
	if (!pass)
		++failures;
}

GroupPresentation load(const std::string &name)
{
	return load_presentation_file(
	    (std::filesystem::path(CORPUS_DIR) / name).string());
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

// 1. Fox fundamental identity on 500 random words
static bool fox_identity_suite()
{
	std::mt19937 rng(1918);
	std::uniform_int_distribution<int> ngens_d(1, 4);
	std::uniform_int_distribution<int> len_d(0, 12);
	for (int trial = 0; trial < 500; ++trial)
	{
		int m = ngens_d(rng);
		FreeWord w = random_word(rng, m, len_d(rng));
		FreeGroupRingElem sum;
		for (int j = 0; j < m; ++j)
		{
			FreeGroupRingElem xm1;
			xm1.add(FreeWord::generator(j), 1);
			xm1.add(FreeWord(), -1);
			sum = sum + fox_derive(w, j) * xm1;
		}
		FreeGroupRingElem rhs;
		rhs.add(w, 1);
		rhs.add(FreeWord(), -1);
		if (!(sum == rhs))
			return false;
	}
	return true;
}

// 2. Alexander polynomial fixtures, normalized
static bool alexander_fixtures()
{
	return to_string(alexander_poly(load("trefoil.grp"))) == "t^2 - t + 1" &&
	       to_string(alexander_poly(load("klein.grp"))) == "t + 1" &&
	       to_string(alexander_poly(load("z2.grp"))) == "1" &&
	       to_string(alexander_poly(load("heisenberg.grp"))) == "1" &&
	       to_string(alexander_poly(load("free2.grp"))) == "0";
}

// 3. nilpotent desk check: jumps only at the trivial character, with full
// depth there
static bool nilpotent_scan_check()
{
	for (const char *f : {"heisenberg.grp", "z2.grp", "z3.grp",
	                      "z_x_zmod6.grp", "unipotent_rank2.grp"})
	{
		AlexanderMatrix am = alexander_matrix(load(f));
		for (long level : {2L, 3L, 4L, 6L})
		{
			auto scan = charvar_scan(am, level);
			if (scan.size() != 1 || !scan[0].first.is_trivial() ||
			    scan[0].second != am.structure.b1)
				return false;
		}
	}
	return true;
}

// 4. torsion semidirect product scans trivially; the Klein bottle exposes
// its order-two jump point
static bool metabelian_scan_check()
{
	{
		auto scan =
		    charvar_scan(alexander_matrix(load("zmod3_semidirect.grp")), 12);
		if (scan.size() != 1 || !scan[0].first.is_trivial())
			return false;
	}
	auto scan = charvar_scan(alexander_matrix(load("klein.grp")), 2);
	if (scan.size() != 2)
		return false;
	if (!scan[0].first.is_trivial() || scan[0].second != 1)
		return false;
	const Character &chi = scan[1].first;
	return chi.free_exp == std::vector<long>{1} &&
	       chi.torsion_exp == std::vector<long>{0} && scan[1].second == 1;
}

// 5. the degree-one nilpotence screen
static bool nilpotence_screen()
{
	for (const char *f : {"heisenberg.grp", "z.grp", "z2.grp", "z3.grp",
	                      "z_x_zmod2.grp", "z_x_zmod6.grp"})
		if (!v11_in_one(load(f)))
			return false;
	return !v11_in_one(load("klein.grp")) && !v11_in_one(load("free2.grp"));
}

// 6. Delta(1) = 0 forces b1 >= 2, corpus-wide; Borromean attains it
static bool delta_one_betti()
{
	for (const CorpusEntry &e : load_manifest(CORPUS_DIR))
	{
		AlexanderMatrix am = alexander_matrix(load(e.file));
		LaurentPoly delta = alexander_poly(am);
		if (delta.evaluate_at_one() == 0 && am.structure.b1 < 2)
			return false;
	}
	AlexanderMatrix bor = alexander_matrix(load("borromean.grp"));
	return alexander_poly(bor).evaluate_at_one() == 0 &&
	       bor.structure.b1 == 3;
}

// 7. E_i valuation bound over Q, F2, F3 for all admissible i
static bool ideal_valuation()
{
	for (const CorpusEntry &e : load_manifest(CORPUS_DIR))
	{
		AlexanderMatrix am = alexander_matrix(load(e.file));
		for (long p : {0L, 2L, 3L})
		{
			FieldTag tag = p == 0 ? FieldTag::Q() : FieldTag::Fp(p);
			int np = b1_over_field(am.structure, p);
			for (int i = 0; i < np; ++i)
				if (!elem_order_check(tag, am, i))
					return false;
		}
	}
	return true;
}

// 8. valuation of Delta for the Borromean rings at d = 1
static bool borromean_delta_valuation()
{
	AlexanderMatrix am = alexander_matrix(load("borromean.grp"));
	RationalField Q;
	if (delta1_check(Q, am, 1) != CheckResult::Pass)
		return false;
	LaurentPoly delta = alexander_poly(am);
	if (!series_order(magnus(Q, delta, 6)).at_least(1))
		return false;
	if (delta.evaluate_at_one() != 0)
		return false;
	return almost_principal_check(am, 1);
}

// 9. Witt dimensions and the PBW product for the free Lie algebra
static bool witt_pbw()
{
	auto basis = hall_basis(2, 8);
	std::vector<long> expected{2, 1, 2, 3, 6, 9, 18, 30};
	std::vector<long> dims;
	for (int d = 1; d <= 8; ++d)
		dims.push_back(basis->dim(d));
	return dims == expected && pbw_series_check(dims, IntPoly{1, -2});
}

// 10. one-relator quotients: finite at degree two, infinite at degree three
static bool inert_shadow()
{
	auto basis = hall_basis(2, 6);
	GradedLie x = GradedLie::generator(basis, 0);
	GradedLie y = GradedLie::generator(basis, 1);

	auto d2 = graded_quotient_dims(basis, {bracket(x, y)}, 6);
	if (d2 != std::vector<long>{2, 0, 0, 0, 0, 0} ||
	    !pbw_series_check(d2, IntPoly{1, -2, 1}))
		return false;

	auto d3 = graded_quotient_dims(basis, {bracket(x, bracket(x, y))}, 6);
	if (!pbw_series_check(d3, IntPoly{1, -2, 0, 1}) || d3[5] <= 0)
		return false;

	for (int d = 2; d <= 10; ++d)
		if (inert_divisibility(d) != (d == 2))
			return false;
	return true;
}

// 11. Campbell-Hausdorff through degree three, against the tensor oracle
static bool bch_oracle()
{
	auto basis = hall_basis(2, 3);
	GradedLie x = GradedLie::generator(basis, 0);
	GradedLie y = GradedLie::generator(basis, 1);
	GradedLie result = bch(x, y);
	GradedLie expected =
	    x + y + bracket(x, y) * Rat(1, 2) +
	    bracket_trunc(x, bracket(x, y)) * Rat(1, 12) +
	    bracket_trunc(y, bracket(y, x)) * Rat(1, 12);
	if (!(result == expected))
		return false;
	// independent recomputation in the truncated tensor algebra
	NCPoly lhs = nc_exp(nc_from_lie(result, 3));
	NCPoly rhs = nc_exp(nc_from_lie(x, 3)) * nc_exp(nc_from_lie(y, 3));
	if (!(lhs == rhs))
		return false;
	return bch(x, x * Rat(-1)).is_zero();
}

// 12. minimal Malcev presentations: balance and vanishing linear parts
static bool malcev_minimal_contract()
{
	for (const CorpusEntry &e : load_manifest(CORPUS_DIR))
	{
		GroupPresentation p = load(e.file);
		MalcevPresentation mp = group_malcev_presentation(p, 5);
		if (mp.ngens - int(mp.relators.size()) != p.deficiency())
			return false;
		for (const GradedLie &r : mp.relators)
			for (const Rat &c : r.linear_part())
				if (c != 0)
					return false;
	}
	MalcevPresentation klein = group_malcev_presentation(load("klein.grp"), 5);
	MalcevPresentation heis =
	    group_malcev_presentation(load("heisenberg.grp"), 5);
	return klein.ngens == 1 && klein.relators.empty() && heis.ngens == 2 &&
	       heis.relators.size() == 2;
}

// 13. graded dimensions and the Z^n detector
static bool gr_dims_check()
{
	if (malcev_gr_dims(load("heisenberg.grp"), 4) !=
	        std::vector<long>{2, 1, 0, 0} ||
	    malcev_gr_dims(load("z2.grp"), 4) != std::vector<long>{2, 0, 0, 0} ||
	    malcev_gr_dims(load("klein.grp"), 4) != std::vector<long>{1, 0, 0, 0})
		return false;
	// among nilpotent torsion-free entries, flat dims pick out exactly the
	// presentations of Z^n
	for (const CorpusEntry &e : load_manifest(CORPUS_DIR))
	{
		if (!e.has("nilpotent") || !e.has("torsion_free"))
			continue;
		auto dims = malcev_gr_dims(load(e.file), 4);
		bool flat = true;
		for (size_t i = 1; i < dims.size(); ++i)
			if (dims[i] != 0)
				flat = false;
		if (flat != e.has("zn"))
			return false;
	}
	return true;
}

// 14. cup kernel dimension equals dim gr^2 tensor Q, corpus-wide
static bool duality()
{
	for (const CorpusEntry &e : load_manifest(CORPUS_DIR))
		if (!duality_check(load(e.file), 2))
			return false;
	CupStructure bor = cup_structure(load("borromean.grp"));
	CupStructure tre = cup_structure(load("trefoil.grp"));
	return bor.dim_k == 3 && malcev_gr_dims(load("borromean.grp"), 2)[1] == 3 &&
	       tre.dim_k == 0 && malcev_gr_dims(load("trefoil.grp"), 2)[1] == 0;
}

// 15. positive deficiency within the screened torsion-free entries happens
// only for Z and Z^2
static bool deficiency_classification()
{
	std::set<std::string> in_set;
	for (const CorpusEntry &e : load_manifest(CORPUS_DIR))
	{
		GroupPresentation p = load(e.file);
		AlexanderMatrix am = alexander_matrix(p);
		bool screened = am.structure.b1 >= 1 ? v11_in_one(am) : true;
		if (screened && e.has("torsion_free") && p.deficiency() > 0)
			in_set.insert(e.file);
	}
	return in_set == std::set<std::string>{"z.grp", "z2.grp"};
}

int main()
{
	criterion("01-fox-identity-500-words", fox_identity_suite());
	criterion("02-alexander-polynomial-fixtures", alexander_fixtures());
	criterion("03-nilpotent-scan-trivial-only", nilpotent_scan_check());
	criterion("04-metabelian-scan-points", metabelian_scan_check());
	criterion("05-nilpotence-screen", nilpotence_screen());
	criterion("06-delta-at-one-forces-b1", delta_one_betti());
	criterion("07-elementary-ideal-valuation", ideal_valuation());
	criterion("08-borromean-delta-valuation", borromean_delta_valuation());
	criterion("09-witt-pbw-free-case", witt_pbw());
	criterion("10-one-relator-inertia", inert_shadow());
	criterion("11-bch-tensor-oracle", bch_oracle());
	criterion("12-minimal-presentation-contract", malcev_minimal_contract());
	criterion("13-graded-dimensions", gr_dims_check());
	criterion("14-cup-bracket-duality", duality());
	criterion("15-deficiency-classification", deficiency_classification());

	if (failures)
	{
		std::cout << failures << " criterion(s) failed\n";
		return 1;
	}
	std::cout << "all 15 criteria pass\n";
	return 0;
}
