#include "gtest/gtest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult
{
	int exit_code;
	std::string out;
};

RunResult run(const std::string &args)
{
	std::string cmd = std::string(NILPO_BIN) + " " + args + " 2>/dev/null";
	FILE *pipe = popen(cmd.c_str(), "r");
	EXPECT_NE(pipe, nullptr);
	std::string out;
	std::array<char, 4096> buf;
	size_t n;
	while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
		out.append(buf.data(), n);
	int status = pclose(pipe);
	return RunResult{WEXITSTATUS(status), out};
}

std::string corpus(const std::string &file)
{
	return (std::filesystem::path(CORPUS_DIR) / file).string();
}

using Json = nlohmann::ordered_json;

} // namespace

TEST(Cli, ReportFixtures)
{
	RunResult h = run("report " + corpus("heisenberg.grp") + " --json --degree 4");
	EXPECT_EQ(h.exit_code, 0);
	Json j = Json::parse(h.out);
	EXPECT_EQ(j.at("delta"), "1");
	EXPECT_EQ(j.at("v11_in_one"), true);
	EXPECT_EQ(j.at("gr_dims"), (std::vector<long>{2, 1, 0, 0}));
	EXPECT_EQ(j.at("b1"), 2);
	for (const Json &c : j.at("checks"))
		EXPECT_EQ(c.at("pass"), true) << c.at("name");

	RunResult k = run("report " + corpus("klein.grp") + " --json");
	EXPECT_EQ(k.exit_code, 0);
	Json jk = Json::parse(k.out);
	EXPECT_EQ(jk.at("delta"), "t + 1");
	EXPECT_EQ(jk.at("v11_in_one"), false);

	RunResult f = run("report " + corpus("free2.grp") + " --json --level 2");
	Json jf = Json::parse(f.out);
	EXPECT_EQ(jf.at("delta"), "0");
	// full torus jumps at level 2
	EXPECT_EQ(jf.at("charvar").size(), 4u);
}

TEST(Cli, JsonRoundTripAndDeterminism)
{
	RunResult a = run("report " + corpus("trefoil.grp") + " --json");
	RunResult b = run("report " + corpus("trefoil.grp") + " --json");
	EXPECT_EQ(a.out, b.out); // byte-identical across runs
	Json j = Json::parse(a.out);
	EXPECT_EQ(j.dump(2) + "\n", a.out); // parse(render) round trip
}

TEST(Cli, InputErrorsExitOne)
{
	EXPECT_EQ(run("report /nonexistent.grp").exit_code, 1);
	std::string bad = std::filesystem::temp_directory_path() / "bad.grp";
	std::ofstream(bad) << "gens x\nrel x q\n";
	EXPECT_EQ(run("report " + bad).exit_code, 1);
	EXPECT_EQ(run("alexander " + bad).exit_code, 1);
}

TEST(Cli, VerifyCorpusPasses)
{
	RunResult r = run("verify " + std::string(CORPUS_DIR) + " --json");
	EXPECT_EQ(r.exit_code, 0);
	Json j = Json::parse(r.out);
	EXPECT_TRUE(j.at("all_pass").get<bool>());
	EXPECT_GT(j.at("rows").size(), 0u);
}

TEST(Cli, VerifyFlagsMislabeledCorpus)
{
	namespace fs = std::filesystem;
	fs::path dir = fs::temp_directory_path() / "nilpo_bad_corpus";
	fs::create_directories(dir);
	fs::copy_file(corpus("klein.grp"), dir / "klein.grp",
	              fs::copy_options::overwrite_existing);
	std::ofstream(dir / "manifest.json")
	    << R"({"groups": [{"file": "klein.grp", )"
	    << R"("tags": ["nilpotent", "metabelian", "torsion_free"]}]})";
	RunResult r = run("verify " + dir.string());
	EXPECT_EQ(r.exit_code, 2);
	EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyEmptyCorpus)
{
	namespace fs = std::filesystem;
	fs::path dir = fs::temp_directory_path() / "nilpo_empty_corpus";
	fs::create_directories(dir);
	std::ofstream(dir / "manifest.json") << R"({"groups": []})";
	RunResult r = run("verify " + dir.string());
	EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, SubcommandSmoke)
{
	EXPECT_EQ(run("alexander " + corpus("trefoil.grp")).exit_code, 0);
	EXPECT_EQ(run("charvar " + corpus("klein.grp") + " --level 2").exit_code,
	          0);
	EXPECT_EQ(run("nilpotence " + corpus("heisenberg.grp")).exit_code, 0);
	EXPECT_EQ(
	    run("lie-dims " + corpus("z2.grp") + " --degree 4 --json").exit_code,
	    0);
	EXPECT_EQ(run("resonance " + corpus("borromean.grp")).exit_code, 0);

	RunResult t = run("alexander " + corpus("trefoil.grp"));
	EXPECT_NE(t.out.find("t^2 - t + 1"), std::string::npos);
}
