#include <catch_amalgamated.hpp>

#include <sstream>

#include <icg/cli.hpp>

using namespace icg;

namespace {

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args) {
	args.insert(args.begin(), "icg");
	std::vector<const char*> argv;
	for (const auto& a : args) argv.push_back(a.c_str());
	std::ostringstream out, err;
	const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
	return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ICG_DATA_DIR) + "/" + name; }

std::string verdict_line(const std::string& out, const std::string& family) {
	std::istringstream in(out);
	for (std::string line; std::getline(in, line);) {
		std::istringstream words(line);
		std::string first, second;
		words >> first >> second;
		if (first == family) return second;
	}
	return "";
}

} // namespace

TEST_CASE("classify (aa)*") {
	const auto r = run({"classify", "--regex", "(aa)*", "--alphabet", "a"});
	CHECK(r.code == 0);
	CHECK(verdict_line(r.out, "COMM") == "yes");
	CHECK(verdict_line(r.out, "NC") == "no");
	CHECK(verdict_line(r.out, "PS") == "no");
	CHECK(verdict_line(r.out, "CIRC") == "yes");

	const auto yes = run({"classify", "--regex", "(aa)*", "--alphabet", "a", "--family", "COMM"});
	CHECK(yes.code == 0);
	const auto no = run({"classify", "--regex", "(aa)*", "--alphabet", "a", "--family", "NC"});
	CHECK(no.code == 1);
}

TEST_CASE("membership in L1") {
	const auto r = run({"member", "--grammar", data("l1.ctx"), "--word", "daaebbcabab"});
	CHECK(r.code == 0);
	CHECK(r.out.rfind("true", 0) == 0);
	const auto traced = run({"member", "--grammar", data("l1.ctx"), "--word", "daaebbcabab", "--trace"});
	CHECK(traced.code == 0);
	CHECK(traced.out.find("=>") != std::string::npos);
	const auto miss = run({"member", "--grammar", data("l2.ctx"), "--word", "cacbc"});
	CHECK(miss.code == 1);
	CHECK(miss.out.rfind("false", 0) == 0);
}

TEST_CASE("witness commands") {
	const auto r = run({"witness", "run", "L2", "--max-len", "8"});
	INFO(r.out << r.err);
	CHECK(r.code == 0);
	CHECK(r.out.find("FAIL") == std::string::npos);
	CHECK(run({"witness", "list"}).code == 0);
	CHECK(run({"witness", "show", "L4", "--n", "2"}).code == 0);
	CHECK(run({"witness", "hierarchy", "--scope", "merged"}).code == 0);
	CHECK(run({"witness", "run", "L5"}).code == 2);
	CHECK(run({"witness", "run", "L4", "--n", "9"}).code == 2);
}

TEST_CASE("other commands") {
	const auto e = run({"enumerate", "--grammar", data("l2.ctx"), "--max-len", "4"});
	CHECK(e.code == 0);
	CHECK(e.out == "ab\nba\nacbc\ncabc\ncbca\n");
	const auto reg = run({"enumerate", "--regex", "a*b", "--alphabet", "ab", "--max-len", "2"});
	CHECK(reg.out == "b\nab\n");
	const auto m = run({"measure", "--regex", "(aa)*", "--alphabet", "a"});
	CHECK(m.code == 0);
	CHECK(m.out.find("states_Z: 2") != std::string::npos);
	const auto d = run({"derive", "--grammar", data("l2.ctx"), "--word", "ab"});
	CHECK(d.code == 0);
	CHECK(d.out.find("acbc") != std::string::npos);
	const auto c = run({"convert", "--regex", "b*c", "--alphabet", "bc", "--to", "regular"});
	CHECK(c.code == 0);
	CHECK(run({"convert", "--regex", "b*c", "--alphabet", "bc", "--to", "dfa"}).code == 0);
}

TEST_CASE("exit codes") {
	CHECK(run({}).code == 2);
	CHECK(run({"frobnicate"}).code == 2);
	CHECK(run({"classify", "--regex", "(a", "--alphabet", "a"}).code == 2);
	CHECK(run({"classify", "--regex", "a", "--dfa", data("l2.ctx")}).code == 2);
	CHECK(run({"member", "--grammar", data("missing.ctx"), "--word", "a"}).code == 2);
	CHECK(run({"measure", "--regex", "(a|b)*abb", "--alphabet", "ab", "--caps", "candidates=10"}).code == 3);
	CHECK(run({"measure", "--regex", "a", "--caps", "bogus=1"}).code == 2);
	const auto help = run({"--help"});
	CHECK(help.code == 0);
	CHECK(help.out.find("Exit codes") != std::string::npos);
	CHECK(help.out.find("3 resource") != std::string::npos);
}

TEST_CASE("machine output") {
	const std::vector<std::string> args{"classify", "--regex", "b*c", "--alphabet", "bc", "--format", "machine"};
	const auto r = run(args);
	REQUIRE(r.code == 0);
	const auto j = nlohmann::ordered_json::parse(r.out);
	const FamilyReport rep = report_from_json(j);
	CHECK(to_json(rep) == j);
	CHECK(rep.verdict(FamilyLabel(Family::DEF)) == Verdict::no);
	CHECK(rep.verdict(FamilyLabel(Family::SUF)) == Verdict::no);
	CHECK(rep.language == "b*c");
	const Regex re = parse_regex("b*c");
	CHECK(rep == classify(regex_to_dfa(re, Alphabet("bc")), Alphabet("bc"), &re, {}, "b*c"));
	SECTION("identical invocations are byte-identical") {
		CHECK(run(args).out == r.out);
		const auto a = run({"witness", "run", "all", "--format", "machine"});
		CHECK(a.out == run({"witness", "run", "all", "--format", "machine"}).out);
	}
}
