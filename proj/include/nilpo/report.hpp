#pragma once

#include "nilpo/fox.hpp"
#include "nilpo/laurent.hpp"
#include "nilpo/malcev.hpp"
#include "nilpo/presentation.hpp"
#include "nilpo/resonance.hpp"
#include "nilpo/series.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace nilpo {

using Json = nlohmann::ordered_json;

struct ReportOptions
{
	long level = 6;   // character scan level
	int degree = 5;   // Lie / Malcev truncation
	FieldTag field = FieldTag::Q();
	int d = 1;        // almost-principality exponent
};

struct NamedCheck
{
	std::string name;
	bool pass = false;
	std::string detail;
};

struct Report
{
	std::string group;
	int b1 = 0;
	std::vector<Int> torsion;
	int deficiency = 0;
	std::string delta;
	Int delta_at_1;
	std::vector<std::string> e1_generators;
	std::vector<std::pair<Character, int>> charvar;
	bool v11_in_one = false;
	std::vector<long> gr_dims;
	int rank_mu = 0;
	int dim_k = 0;
	std::vector<NamedCheck> checks;

	bool all_checks_pass() const
	{
		for (const auto &c : checks)
			if (!c.pass)
				return false;
		return true;
	}
};

// ---------------------------------------------------------------------------
// per-group checks, each one a small executable statement about the group

// Fox fundamental identity for every relator of the presentation
inline bool check_fox_identity(const GroupPresentation &p)
{
	for (const FreeWord &w : p.relators)
	{
		FreeGroupRingElem sum;
		for (int j = 0; j < p.ngens(); ++j)
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

// Delta(1) = 0 forces b1 >= 2
inline bool check_delta_one_betti(const AlexanderMatrix &am,
                                  const LaurentPoly &delta)
{
	if (delta.evaluate_at_one() == 0)
		return am.structure.b1 >= 2;
	return true;
}

// E_i generators have Magnus order >= n_p - i, for p in {0,2,3} and i < n_p
inline bool check_ideal_valuation(const AlexanderMatrix &am)
{
	for (long p : {0L, 2L, 3L})
	{
		FieldTag tag = p == 0 ? FieldTag::Q() : FieldTag::Fp(p);
		int np = b1_over_field(am.structure, p);
		for (int i = 0; i < np; ++i)
			if (!elem_order_check(tag, am, i))
				return false;
	}
	return true;
}

// minimal-presentation arithmetic on both sides: the completed Alexander
// module and the Malcev presentation
inline bool check_minimal_balance(const GroupPresentation &p,
                                  const AlexanderMatrix &am, int degree)
{
	int m = p.ngens(), s = p.nrels();
	for (long q : {0L, 2L})
	{
		FieldTag tag = q == 0 ? FieldTag::Q() : FieldTag::Fp(q);
		bool ok = with_field(tag, [&](const auto &f) {
			auto min = minimize_alexander(f, am, std::max(6, degree));
			if (min.gens - min.rels != m - s)
				return false;
			for (const auto &row : min.matrix)
				for (const auto &entry : row)
					if (!series_order(entry).at_least(1))
						return false;
			return true;
		});
		if (!ok)
			return false;
	}
	MalcevPresentation mp = group_malcev_presentation(p, degree);
	if (mp.ngens - int(mp.relators.size()) != m - s)
		return false;
	for (const GradedLie &r : mp.relators)
		for (const Rat &c : r.linear_part())
			if (c != 0)
				return false;
	return true;
}

// rank-one local systems: a nontrivial character of level <= `level` jumps
// iff every E_1 minor vanishes on it
inline bool check_jump_vs_minors(const AlexanderMatrix &am, long level)
{
	std::vector<AbGroupRingElem> minors = e1_minors_ab(am);
	for (const Character &chi : all_characters(am.structure, level))
	{
		if (chi.is_trivial())
			continue;
		bool all_vanish = true;
		CyclotomicField F(chi.level);
		for (const AbGroupRingElem &f : minors)
			if (!F.is_zero(f.evaluate(chi)))
			{
				all_vanish = false;
				break;
			}
		bool jumps = twisted_h1(am, chi) >= 1;
		if (jumps != all_vanish)
			return false;
	}
	return true;
}

inline Report compute_report(const GroupPresentation &p,
                             const ReportOptions &opt = {})
{
	Report r;
	r.group = p.name;
	AlexanderMatrix am = alexander_matrix(p);
	r.b1 = am.structure.b1;
	r.torsion = am.structure.torsion;
	r.deficiency = p.deficiency();

	LaurentPoly delta = alexander_poly(am);
	r.delta = to_string(delta);
	r.delta_at_1 = delta.evaluate_at_one();
	for (const LaurentPoly &g : elementary_ideal_gens(am, 1))
		r.e1_generators.push_back(to_string(g));
	r.charvar = charvar_scan(am, opt.level);
	r.v11_in_one = r.b1 >= 1 ? v11_in_one(am) : true;
	r.gr_dims = malcev_gr_dims(p, opt.degree);
	CupStructure cs = cup_structure(p);
	r.rank_mu = cs.rank_mu;
	r.dim_k = cs.dim_k;

	r.checks.push_back({"fox-chain-identity", check_fox_identity(p),
	                    "sum_j dw/dx_j (x_j - 1) = w - 1 for every relator"});
	r.checks.push_back({"delta-one-betti",
	                    check_delta_one_betti(am, delta),
	                    "Delta(1) = 0 implies b1 >= 2"});
	r.checks.push_back({"ideal-valuation-bound", check_ideal_valuation(am),
	                    "E_i generators have order >= n_p - i for p in {0,2,3}"});
	r.checks.push_back({"minimal-presentation-balance",
	                    check_minimal_balance(p, am, opt.degree),
	                    "minimized data satisfies n - t = m - s with positive orders"});
	r.checks.push_back({"cup-bracket-duality",
	                    duality_check(p, std::max(opt.degree, 2)),
	                    "dim ker(cup) equals dim gr^2 (x) Q"});
	r.checks.push_back({"jump-locus-vs-minors",
	                    check_jump_vs_minors(am, std::min(opt.level, 6L)),
	                    "nontrivial characters jump exactly on the E_1 zero set"});
	return r;
}

// ---------------------------------------------------------------------------
// JSON rendering

inline Json character_to_json(const Character &chi)
{
	Json j;
	j["level"] = chi.level;
	j["free"] = chi.free_exp;
	j["torsion"] = chi.torsion_exp;
	return j;
}

inline Character character_from_json(const Json &j)
{
	Character chi;
	chi.level = j.at("level").get<long>();
	chi.free_exp = j.at("free").get<std::vector<long>>();
	chi.torsion_exp = j.at("torsion").get<std::vector<long>>();
	return chi;
}

inline Json report_to_json(const Report &r)
{
	Json j;
	j["group"] = r.group;
	j["b1"] = r.b1;
	{
		std::vector<long> t;
		for (const Int &d : r.torsion)
			t.push_back(d.convert_to<long>());
		j["torsion"] = t;
	}
	j["deficiency"] = r.deficiency;
	j["delta"] = r.delta;
	j["delta_at_1"] = r.delta_at_1.str();
	j["e1_generators"] = r.e1_generators;
	{
		Json arr = Json::array();
		for (const auto &[chi, depth] : r.charvar)
		{
			Json e;
			e["character"] = character_to_json(chi);
			e["depth"] = depth;
			arr.push_back(e);
		}
		j["charvar"] = arr;
	}
	j["v11_in_one"] = r.v11_in_one;
	j["gr_dims"] = r.gr_dims;
	j["resonance"] = Json{{"rank_mu", r.rank_mu}, {"dim_k", r.dim_k}};
	{
		Json arr = Json::array();
		for (const auto &c : r.checks)
			arr.push_back(Json{{"name", c.name},
			                   {"pass", c.pass},
			                   {"detail", c.detail}});
		j["checks"] = arr;
	}
	return j;
}

inline std::string report_to_text(const Report &r)
{
	std::ostringstream os;
	os << "group:       " << r.group << "\n";
	os << "b1:          " << r.b1 << "\n";
	os << "torsion:     [";
	for (size_t i = 0; i < r.torsion.size(); ++i)
		os << (i ? ", " : "") << r.torsion[i];
	os << "]\n";
	os << "deficiency:  " << r.deficiency << "\n";
	os << "delta:       " << r.delta << "\n";
	os << "delta(1):    " << r.delta_at_1 << "\n";
	os << "E1:          {";
	for (size_t i = 0; i < r.e1_generators.size(); ++i)
		os << (i ? ", " : "") << r.e1_generators[i];
	os << "}\n";
	os << "jump points: " << r.charvar.size() << "\n";
	for (const auto &[chi, depth] : r.charvar)
	{
		os << "  level " << chi.level << " exps (";
		for (size_t i = 0; i < chi.free_exp.size(); ++i)
			os << (i ? "," : "") << chi.free_exp[i];
		os << ";";
		for (size_t i = 0; i < chi.torsion_exp.size(); ++i)
			os << (i ? "," : "") << chi.torsion_exp[i];
		os << ") depth " << depth << (chi.is_trivial() ? " (trivial)" : "")
		   << "\n";
	}
	os << "V11 in {1}:  " << (r.v11_in_one ? "true" : "false") << "\n";
	os << "gr dims:     (";
	for (size_t i = 0; i < r.gr_dims.size(); ++i)
		os << (i ? ", " : "") << r.gr_dims[i];
	os << ")\n";
	os << "resonance:   rank mu = " << r.rank_mu << ", dim K = " << r.dim_k
	   << "\n";
	os << "checks:\n";
	for (const auto &c : r.checks)
		os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
	return os.str();
}

// ---------------------------------------------------------------------------
// corpus manifest and the verification battery

struct CorpusEntry
{
	std::string file;
	std::set<std::string> tags;

	bool has(const std::string &t) const { return tags.count(t) > 0; }
};

inline std::vector<CorpusEntry> load_manifest(const std::string &dir)
{
	namespace fs = std::filesystem;
	std::vector<CorpusEntry> out;
	fs::path mf = fs::path(dir) / "manifest.json";
	if (fs::exists(mf))
	{
		std::ifstream in(mf);
		Json j = Json::parse(in);
		for (const Json &e : j.at("groups"))
		{
			CorpusEntry ce;
			ce.file = e.at("file").get<std::string>();
			if (e.contains("tags"))
				for (const Json &t : e.at("tags"))
					ce.tags.insert(t.get<std::string>());
			out.push_back(std::move(ce));
		}
	}
	else
	{
		for (const auto &p : fs::directory_iterator(dir))
			if (p.path().extension() == ".grp")
				out.push_back(CorpusEntry{p.path().filename().string(), {}});
		std::sort(out.begin(), out.end(),
		          [](const CorpusEntry &a, const CorpusEntry &b) {
			          return a.file < b.file;
		          });
	}
	return out;
}

inline GroupPresentation load_presentation_file(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	GroupPresentation p = parse_presentation(ss.str());
	if (p.name.empty())
		p.name = std::filesystem::path(path).stem().string();
	return p;
}

struct VerifyRow
{
	std::string group;
	std::string check;
	std::string status; // PASS / FAIL / SKIP
	std::string detail;
};

struct VerifySummary
{
	std::vector<VerifyRow> rows;
	bool all_pass = true;

	void add(const std::string &group, const std::string &check, bool pass,
	         const std::string &detail = "")
	{
		rows.push_back({group, check, pass ? "PASS" : "FAIL", detail});
		if (!pass)
			all_pass = false;
	}
	void skip(const std::string &group, const std::string &check,
	          const std::string &detail = "")
	{
		rows.push_back({group, check, "SKIP", detail});
	}
};

// One row per (group, statement). Tag-dependent statements use the manifest:
// "nilpotent", "metabelian", "torsion_free", "zn" (presents Z^n).
inline VerifySummary run_verify(const std::string &dir,
                                const ReportOptions &opt = {})
{
	VerifySummary out;
	std::vector<CorpusEntry> entries = load_manifest(dir);

	struct Computed
	{
		CorpusEntry entry;
		GroupPresentation pres;
		AlexanderMatrix am;
		LaurentPoly delta;
		bool v11 = false;
	};
	std::vector<Computed> groups;
	for (const CorpusEntry &e : entries)
	{
		GroupPresentation p = load_presentation_file(
		    (std::filesystem::path(dir) / e.file).string());
		AlexanderMatrix am = alexander_matrix(p);
		LaurentPoly delta = alexander_poly(am);
		bool v11 = am.structure.b1 >= 1 ? v11_in_one(am) : true;
		groups.push_back(Computed{e, std::move(p), std::move(am),
		                          std::move(delta), v11});
	}

	for (const Computed &g : groups)
	{
		const std::string &name = g.entry.file;

		// nilpotent groups jump only at the trivial character
		if (g.entry.has("nilpotent"))
		{
			bool ok = true;
			std::string witness;
			for (long level : {2L, 3L, 4L, 6L})
				for (const auto &[chi, depth] : charvar_scan(g.am, level))
				{
					if (chi.is_trivial() && depth == g.am.structure.b1)
						continue;
					ok = false;
					witness = "unexpected jump at level " +
					          std::to_string(level) + " depth " +
					          std::to_string(depth);
				}
			out.add(name, "charvar-trivial-only", ok, witness);

			out.add(name, "alexander-variety-empty",
			        delta_variety_in_one(g.delta) == VarietySize::EmptyVariety,
			        "delta = " + to_string(g.delta));
		}

		// the degree-one nilpotence screen
		if (g.entry.has("nilpotent"))
			out.add(name, "nilpotence-screen", g.v11,
			        "nilpotent group must pass the torus test");
		else if (g.entry.has("torsion_free") && g.entry.has("metabelian") &&
		         g.am.structure.torsion.empty())
			out.add(name, "nilpotence-screen", !g.v11,
			        "non-nilpotent metabelian group must fail the torus test");
		else
			out.skip(name, "nilpotence-screen", "hypotheses not tagged");

		out.add(name, "delta-one-betti",
		        check_delta_one_betti(g.am, g.delta),
		        "delta(1) = " + g.delta.evaluate_at_one().str());

		out.add(name, "ideal-valuation-bound", check_ideal_valuation(g.am));

		// valuation of Delta under almost-principality with exponent d
		{
			int n0 = g.am.structure.b1;
			int d = opt.d;
			if (n0 >= 1 && n0 > d + 1 && almost_principal_check(g.am, d))
			{
				RationalField Q;
				SeriesOrder ord =
				    series_order(magnus(Q, g.delta, std::max(6, n0 + 1)));
				bool ok = ord.at_least(n0 - d - 1) &&
				          g.delta.evaluate_at_one() == 0;
				out.add(name, "alexander-valuation", ok,
				        "order >= " + std::to_string(n0 - d - 1));
			}
			else
				out.skip(name, "alexander-valuation",
				         "needs almost-principal E_1 and b1 > d + 1");
		}
	}

	// corpus-level: positive-deficiency groups passing the screen and the
	// torsion-free tag present Z or Z^2
	{
		bool ok = true;
		std::string witness;
		for (const Computed &g : groups)
		{
			bool in_set = g.v11 && g.entry.has("torsion_free") &&
			              g.pres.deficiency() > 0;
			bool expected = g.entry.has("zn") && g.pres.deficiency() > 0;
			if (in_set != expected)
			{
				ok = false;
				witness = g.entry.file;
			}
		}
		if (!groups.empty())
			out.add("(corpus)", "deficiency-classification", ok, witness);
	}
	return out;
}

inline std::string verify_to_text(const VerifySummary &s)
{
	std::ostringstream os;
	size_t wg = 8, wc = 8;
	for (const auto &r : s.rows)
	{
		wg = std::max(wg, r.group.size());
		wc = std::max(wc, r.check.size());
	}
	for (const auto &r : s.rows)
	{
		os << r.group << std::string(wg - r.group.size() + 2, ' ') << r.check
		   << std::string(wc - r.check.size() + 2, ' ') << r.status;
		if (!r.detail.empty())
			os << "  " << r.detail;
		os << "\n";
	}
	os << (s.all_pass ? "all rows pass" : "FAILURES present") << "\n";
	return os.str();
}

inline Json verify_to_json(const VerifySummary &s)
{
	Json rows = Json::array();
	for (const auto &r : s.rows)
		rows.push_back(Json{{"group", r.group},
		                    {"check", r.check},
		                    {"status", r.status},
		                    {"detail", r.detail}});
	return Json{{"rows", rows}, {"all_pass", s.all_pass}};
}

} // namespace nilpo
