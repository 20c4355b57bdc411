// nilpo: exact Alexander-type invariants and degree-one jump loci of
// finitely presented groups.

#include "nilpo/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

using namespace nilpo;

namespace {

FieldTag parse_field(const std::string &name)
{
	if (name == "Q")
		return FieldTag::Q();
	if (name == "F2")
		return FieldTag::Fp(2);
	if (name == "F3")
		return FieldTag::Fp(3);
	if (name == "F5")
		return FieldTag::Fp(5);
	throw CLI::ValidationError("--field", "expected one of Q, F2, F3, F5");
}

int cmd_report(const std::string &file, const ReportOptions &opt, bool json)
{
	Report r = compute_report(load_presentation_file(file), opt);
	if (json)
		std::cout << report_to_json(r).dump(2) << "\n";
	else
		std::cout << report_to_text(r);
	return r.all_checks_pass() ? 0 : 2;
}

int cmd_verify(const std::string &dir, const ReportOptions &opt, bool json)
{
	VerifySummary s = run_verify(dir, opt);
	if (json)
		std::cout << verify_to_json(s).dump(2) << "\n";
	else
		std::cout << verify_to_text(s);
	return s.all_pass ? 0 : 2;
}

int cmd_alexander(const std::string &file, bool json)
{
	GroupPresentation p = load_presentation_file(file);
	AlexanderMatrix am = alexander_matrix(p);
	LaurentPoly delta = alexander_poly(am);
	std::vector<std::string> gens;
	for (const LaurentPoly &g : elementary_ideal_gens(am, 1))
		gens.push_back(to_string(g));
	if (json)
	{
		Json j;
		j["group"] = p.name;
		j["b1"] = am.structure.b1;
		j["delta"] = to_string(delta);
		j["delta_at_1"] = delta.evaluate_at_one().str();
		j["e1_generators"] = gens;
		std::cout << j.dump(2) << "\n";
	}
	else
	{
		std::cout << "group: " << p.name << "\n";
		std::cout << "delta: " << to_string(delta) << "\n";
		std::cout << "E1:    {";
		for (size_t i = 0; i < gens.size(); ++i)
			std::cout << (i ? ", " : "") << gens[i];
		std::cout << "}\n";
	}
	return 0;
}

int cmd_charvar(const std::string &file, long level, bool json)
{
	GroupPresentation p = load_presentation_file(file);
	AlexanderMatrix am = alexander_matrix(p);
	auto scan = charvar_scan(am, level);
	if (json)
	{
		Json arr = Json::array();
		for (const auto &[chi, depth] : scan)
		{
			Json e;
			e["character"] = character_to_json(chi);
			e["depth"] = depth;
			arr.push_back(e);
		}
		std::cout << Json{{"group", p.name}, {"level", level}, {"jumps", arr}}
		                 .dump(2)
		          << "\n";
	}
	else
	{
		std::cout << "group " << p.name << ", level " << level << ", "
		          << scan.size() << " jump point(s)\n";
		for (const auto &[chi, depth] : scan)
		{
			std::cout << "  (";
			for (size_t i = 0; i < chi.free_exp.size(); ++i)
				std::cout << (i ? "," : "") << chi.free_exp[i];
			std::cout << ";";
			for (size_t i = 0; i < chi.torsion_exp.size(); ++i)
				std::cout << (i ? "," : "") << chi.torsion_exp[i];
			std::cout << ") depth " << depth
			          << (chi.is_trivial() ? " (trivial)" : "") << "\n";
		}
	}
	return 0;
}

int cmd_nilpotence(const std::string &file, long level, bool json)
{
	GroupPresentation p = load_presentation_file(file);
	AlexanderMatrix am = alexander_matrix(p);
	bool v11 = am.structure.b1 >= 1 ? v11_in_one(am) : true;
	size_t nontrivial = 0;
	for (const auto &[chi, depth] : charvar_scan(am, level))
	{
		(void)depth;
		if (!chi.is_trivial())
			++nontrivial;
	}
	if (json)
	{
		std::cout << Json{{"group", p.name},
		                  {"v11_in_one", v11},
		                  {"nontrivial_jumps", nontrivial}}
		                 .dump(2)
		          << "\n";
	}
	else
	{
		std::cout << "group " << p.name << "\n";
		std::cout << "torus test (zero set of E1 inside {1}): "
		          << (v11 ? "true" : "false") << "\n";
		std::cout << "nontrivial jump characters at level " << level << ": "
		          << nontrivial << "\n";
		std::cout << (v11 ? "consistent with a nilpotent group\n"
		                  : "not nilpotent\n");
	}
	return 0;
}

int cmd_lie_dims(const std::string &file, int degree, bool json)
{
	GroupPresentation p = load_presentation_file(file);
	MalcevPresentation mp = group_malcev_presentation(p, degree);
	std::vector<long> dims = malcev_gr_dims(mp, degree);
	if (json)
	{
		std::cout << Json{{"group", p.name},
		                  {"degree", degree},
		                  {"minimal_generators", mp.ngens},
		                  {"minimal_relators", mp.relators.size()},
		                  {"gr_dims", dims}}
		                 .dump(2)
		          << "\n";
	}
	else
	{
		std::cout << "group " << p.name << "\n";
		std::cout << "minimal presentation: " << mp.ngens << " generator(s), "
		          << mp.relators.size() << " relator(s)\n";
		std::cout << "gr dims: (";
		for (size_t i = 0; i < dims.size(); ++i)
			std::cout << (i ? ", " : "") << dims[i];
		std::cout << ")\n";
	}
	return 0;
}

int cmd_resonance(const std::string &file, bool json)
{
	GroupPresentation p = load_presentation_file(file);
	CupStructure cs = cup_structure(p);
	std::vector<std::string> eqs;
	if (cs.b1 <= 3)
	{
		std::vector<std::string> names;
		for (int i = 0; i < cs.b1; ++i)
			names.push_back("z" + std::to_string(i + 1));
		RationalField Q;
		for (const auto &f : r11_equations(cs))
			eqs.push_back(f.to_string(Q, names));
	}
	if (json)
	{
		std::cout << Json{{"group", p.name},
		                  {"b1", cs.b1},
		                  {"rank_mu", cs.rank_mu},
		                  {"dim_k", cs.dim_k},
		                  {"r11_equations", eqs}}
		                 .dump(2)
		          << "\n";
	}
	else
	{
		std::cout << "group " << p.name << "\n";
		std::cout << "rank mu = " << cs.rank_mu << ", dim K = " << cs.dim_k
		          << "\n";
		if (cs.b1 <= 3)
		{
			std::cout << "R11 equations:\n";
			if (eqs.empty())
				std::cout << "  (none: R11 is all of H^1)\n";
			for (const auto &e : eqs)
				std::cout << "  " << e << "\n";
		}
	}
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact Alexander invariants and cohomology jump loci of "
	             "finitely presented groups"};
	app.require_subcommand(1);

	bool json = false;
	ReportOptions opt;
	std::string field_name = "Q";
	std::string file, dir;

	auto add_common = [&](CLI::App *sub) {
		sub->add_flag("--json", json, "emit JSON instead of text");
		sub->add_option("--level", opt.level, "character scan level")
		    ->capture_default_str();
		sub->add_option("--degree", opt.degree, "Lie/Malcev truncation degree")
		    ->capture_default_str();
		sub->add_option("--field", field_name,
		                "coefficient field: Q, F2, F3, F5")
		    ->capture_default_str();
		sub->add_option("--d", opt.d, "almost-principality exponent")
		    ->capture_default_str();
	};

	auto *report = app.add_subcommand("report", "full invariant report");
	report->add_option("file", file, "presentation file")->required();
	auto *verify =
	    app.add_subcommand("verify", "run the verification battery on a corpus");
	verify->add_option("dir", dir, "corpus directory")->required();
	auto *alexander =
	    app.add_subcommand("alexander", "Alexander polynomial and E1");
	alexander->add_option("file", file, "presentation file")->required();
	auto *charvar =
	    app.add_subcommand("charvar", "degree-one jump characters");
	charvar->add_option("file", file, "presentation file")->required();
	auto *nilpotence =
	    app.add_subcommand("nilpotence", "degree-one nilpotence screen");
	nilpotence->add_option("file", file, "presentation file")->required();
	auto *liedims =
	    app.add_subcommand("lie-dims", "graded Lie algebra dimensions");
	liedims->add_option("file", file, "presentation file")->required();
	auto *resonance =
	    app.add_subcommand("resonance", "degree-one resonance data");
	resonance->add_option("file", file, "presentation file")->required();
	for (CLI::App *sub :
	     {report, verify, alexander, charvar, nilpotence, liedims, resonance})
		add_common(sub);

	CLI11_PARSE(app, argc, argv);

	try
	{
		opt.field = parse_field(field_name);
		if (report->parsed())
			return cmd_report(file, opt, json);
		if (verify->parsed())
			return cmd_verify(dir, opt, json);
		if (alexander->parsed())
			return cmd_alexander(file, json);
		if (charvar->parsed())
			return cmd_charvar(file, opt.level, json);
		if (nilpotence->parsed())
			return cmd_nilpotence(file, opt.level, json);
		if (liedims->parsed())
			return cmd_lie_dims(file, opt.degree, json);
		if (resonance->parsed())
			return cmd_resonance(file, json);
	}
	catch (const ParseError &e)
	{
		std::cerr << "parse error: " << e.what() << "\n";
		return 1;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
