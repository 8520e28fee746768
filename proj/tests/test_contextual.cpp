#include <catch_amalgamated.hpp>

#include <random>

#include <icg/grammar_io.hpp>
#include <icg/hierarchy.hpp>

#include "oracles.hpp"

using namespace icg;

namespace {

oracle::WordSet plain(const WordSet& ws) { return {ws.begin(), ws.end()}; }

const char* const kL1 = R"(alphabet: a b c d e
axioms: c
pair
  alphabet: b c
  grammar: S -> b S; S -> c
  contexts: (ab,ab)
end
pair
  alphabet: a
  grammar:
    S -> aa S
    S -> @
  contexts: (d,e)
end
)";

const char* const kL2 = R"(alphabet: a b c
axioms: ab ba
pair
  alphabet: a b
  regex: ab|b
  contexts: (c,c)
end
)";

const char* const kL6 = R"(alphabet: a b
axioms: a b ab
pair
  alphabet: a b
  regex: ab
  contexts: (@,ab)
end
)";

// selection {c} ∪ {b,c}*{b}, given as a table
const char* const kDefinite = R"(alphabet: b c
axioms: c bc
pair
  alphabet: b c
  dfa:
    alphabet: b c
    states: 4
    initial: 0
    accepting: 1 2
    0: 1 2
    1: 1 3
    2: 1 3
    3: 1 3
  contexts: (b,@)
end
)";

ContextualGrammar grammar(const char* text) { return parse_contextual(text); }

// c^n a c^m b c^(n+m) and c^n b c^n a
oracle::WordSet l2_closed(std::size_t max_len) {
	oracle::WordSet out;
	for (std::size_t n = 0; n <= max_len; ++n) {
		for (std::size_t m = 0; n + m <= max_len; ++m) {
			const Word w = Word(n, 'c') + "a" + Word(m, 'c') + "b" + Word(n + m, 'c');
			if (w.size() <= max_len) out.insert(w);
		}
		const Word v = Word(n, 'c') + "b" + Word(n, 'c') + "a";
		if (v.size() <= max_len) out.insert(v);
	}
	return out;
}

} // namespace

TEST_CASE("grammar files") {
	const auto g = grammar(kL1);
	CHECK(g.alphabet == Alphabet("abcde"));
	CHECK(g.axioms == WordSet{"c"});
	REQUIRE(g.pairs.size() == 2);
	CHECK(g.pairs[0].contexts == std::vector<Context>{{"ab", "ab"}});
	CHECK(g.pairs[1].contexts == std::vector<Context>{{"d", "e"}});
	CHECK(g.pairs[1].grammar.has_value());
	for (const char* text : {kL1, kL2, kL6, kDefinite}) {
		const auto h = grammar(text);
		CHECK(parse_contextual(to_string(h)) == h);
		CHECK(to_string(parse_contextual(to_string(h))) == to_string(h));
	}
	SECTION("errors name the line") {
		try {
			(void)parse_contextual("alphabet: a b\naxioms: a\npair\n  alphabet: a\n  regex: a(\n  contexts: (a,b)\nend\n");
			FAIL("expected a parse error");
		} catch (const ParseError& e) {
			CHECK(e.line() == 5);
		}
		CHECK_THROWS_AS(parse_contextual("alphabet: a\naxioms: a\npair\n  alphabet: a\n  regex: a\nend\n"), ParseError);
		CHECK_THROWS_AS(parse_contextual("alphabet: a\naxioms: a\npair\n  alphabet: a\n  regex: a\n  contexts: (a\nend\n"),
		                ParseError);
	}
}

TEST_CASE("validation") {
	CHECK(validate(grammar(kL1)).empty());
	auto g = grammar(kL2);
	g.pairs[0].contexts.push_back({"", ""});
	auto diags = validate(g);
	REQUIRE(diags.size() == 1);
	CHECK(diags[0].find("empty context") != std::string::npos);

	auto stray = grammar(kL2);
	stray.pairs[0] = SelectionPair::from_regex(Alphabet("ab"), parse_regex("ac"), {{"c", "c"}});
	diags = validate(stray);
	REQUIRE_FALSE(diags.empty());
	CHECK(diags[0].find("outside the declared alphabet") != std::string::npos);

	auto foreign = grammar(kL2);
	foreign.axioms.insert("z");
	CHECK(validate(foreign).size() == 1);
	CHECK_THROWS_AS(enumerate_ic(foreign, 4), DomainError);
}

TEST_CASE("selection families") {
	const auto l1 = grammar(kL1);
	CHECK(selection_in_family(l1, FamilyLabel(Family::RL_P, 2)).verdict == Verdict::yes);
	CHECK(selection_in_family(l1, FamilyLabel(Family::RL_V, 1)).verdict == Verdict::yes);
	CHECK(selection_in_family(l1, FamilyLabel(Family::REG_Z, 3)).verdict == Verdict::yes);
	CHECK(selection_in_family(l1, FamilyLabel(Family::REG_Z, 2)).verdict == Verdict::no);
	CHECK(selection_in_family(l1, FamilyLabel(Family::FIN)).verdict == Verdict::no);
	CHECK(selection_in_family(grammar(kL6), FamilyLabel(Family::FIN)).verdict == Verdict::yes);
	const auto mon = parse_contextual("alphabet: a b c\naxioms: c\npair\n  alphabet: a b\n  regex: (a|b)*\n  contexts: (c,c)\nend\n");
	CHECK(selection_in_family(mon, FamilyLabel(Family::MON)).verdict == Verdict::yes);
	CHECK(selection_in_family(grammar(kDefinite), FamilyLabel(Family::DEF)).verdict == Verdict::yes);
	CHECK(selection_in_family(grammar(kL2), FamilyLabel(Family::REG_Z, 7)).verdict == Verdict::yes);
}

TEST_CASE("selection family verdicts are monotone along the subregular diagram") {
	const auto fig = hierarchy(Scope::subregular);
	std::vector<FamilyLabel> labels;
	for (int f = 0; f <= static_cast<int>(Family::REG); ++f) labels.emplace_back(static_cast<Family>(f));
	for (unsigned n : {1u, 2u}) labels.emplace_back(Family::REG_Z, n);
	for (unsigned n : {1u, 2u}) labels.emplace_back(Family::RL_V, n);
	auto node = [](const FamilyLabel& f) {
		return f.is_resource() ? subregular_node(family_name(f.family), f.n) : std::string(family_name(f.family));
	};
	for (const char* text : {kL1, kL2, kL6, kDefinite}) {
		const auto g = grammar(text);
		std::map<std::string, Verdict> v;
		for (const auto& f : labels) v[node(f)] = selection_in_family(g, f).verdict;
		for (const auto& x : labels) {
			for (const auto& y : labels) {
				if (v[node(x)] == Verdict::yes && fig.included(node(x), node(y))) {
					INFO(node(x) << " -> " << node(y));
					CHECK(v[node(y)] == Verdict::yes);
				}
			}
		}
	}
}

TEST_CASE("derivation steps") {
	const auto l1 = grammar(kL1);
	const auto steps = derive_step(l1, "c");
	REQUIRE_FALSE(steps.empty());
	CHECK(successors(l1, "c") == WordSet{"abcab", "dec", "cde"});
	for (const auto& s : steps) {
		CHECK(s.x1() + s.x2() + s.x3() == s.source);
		CHECK(s.target == s.x1() + s.context.left + s.x2() + s.context.right + s.x3());
		CHECK(s.target.size() > s.source.size());
		CHECK(accepts(l1.pairs[s.pair].selection, s.x2()));
	}
	// the empty selected word inserts at a single boundary
	const auto lambda = std::count_if(steps.begin(), steps.end(), [](const DerivationStep& s) { return s.x2_len == 0; });
	CHECK(lambda == 2);
	auto empty = grammar(kL2);
	empty.pairs[0] = SelectionPair::from_regex(Alphabet("ab"), Regex::empty_set(), {{"c", "c"}});
	CHECK(derive_step(empty, "abab").empty());
}

TEST_CASE("enumeration") {
	SECTION("L2 against its formula") {
		const auto g = grammar(kL2);
		CHECK(plain(enumerate_ic(g, 6)) == l2_closed(6));
		CHECK(plain(enumerate_ic(g, 8)) == l2_closed(8));
		CHECK(plain(enumerate_ic(g, 3)) == oracle::WordSet{"ab", "ba"});
	}
	SECTION("L6, n = 2") {
		CHECK(plain(enumerate_ic(grammar(kL6), 4)) == oracle::WordSet{"a", "b", "ab", "abab"});
	}
	SECTION("below every axiom") {
		CHECK(enumerate_ic(grammar(kL2), 1).empty());
	}
	SECTION("brute-force closure") {
		for (const char* text : {kL1, kL2, kL6, kDefinite}) {
			const auto g = grammar(text);
			CHECK(plain(enumerate_ic(g, 9)) == oracle::ic_language(g, 9));
		}
	}
	SECTION("frontier cap") {
		CHECK_THROWS_AS(enumerate_ic(grammar(kL1), 14, 10), ResourceError);
	}
}

TEST_CASE("membership") {
	const auto l1 = grammar(kL1);
	std::vector<DerivationStep> trace;
	REQUIRE(member_ic(l1, "daaebbcabab", &trace));
	REQUIRE_FALSE(trace.empty());
	CHECK(l1.axioms.count(trace.front().source));
	CHECK(trace.back().target == "daaebbcabab");
	for (std::size_t i = 0; i + 1 < trace.size(); ++i) CHECK(trace[i].target == trace[i + 1].source);
	CHECK(enumerate_ic(l1, 12).count("daaebbcabab"));
	CHECK(member_ic(l1, "c"));
	CHECK_FALSE(member_ic(grammar(kL2), "cacbc"));
	CHECK_FALSE(l2_closed(5).count("cacbc"));
	CHECK_FALSE(member_ic(l1, "zz"));
	SECTION("agrees with enumeration") {
		for (const char* text : {kL2, kL6, kDefinite}) {
			const auto g = grammar(text);
			const WordSet all = enumerate_ic(g, 8);
			for (const auto& w : oracle::words_up_to(g.alphabet.str(), 8)) {
				REQUIRE(member_ic(g, w) == (all.count(w) > 0));
			}
		}
	}
}

TEST_CASE("pump property") {
	std::mt19937_64 rng(77);
	for (const char* text : {kL1, kL2, kL6, kDefinite}) {
		const auto g = grammar(text);
		const auto words = enumerate_ic(g, 7);
		for (const auto& w : words) {
			const auto steps = derive_step(g, w);
			if (steps.empty()) continue;
			DerivationStep s = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
			const std::size_t grow = s.context.size();
			for (std::size_t k = 2; k <= 4; ++k) {
				auto next = reapply(g, s);
				REQUIRE(next);
				REQUIRE(next->target.size() == w.size() + k * grow);
				REQUIRE(next->x2() == s.x2());
				s = std::move(*next);
			}
		}
	}
}

TEST_CASE("splitting finite selections") {
	const auto g = grammar(kL2);
	const auto split = split_finite_selection(g);
	REQUIRE(split.pairs.size() == 2);
	std::set<WordSet> sels;
	for (const auto& p : split.pairs) {
		sels.insert(enumerate_regular(p.selection, 8));
		CHECK(p.contexts == std::vector<Context>{{"c", "c"}});
		REQUIRE(p.grammar);
		CHECK(count_resources(*p.grammar) == ResourceCount{1, 1});
	}
	CHECK(sels == std::set<WordSet>{{"ab"}, {"b"}});
	for (std::size_t len = 0; len <= 8; ++len) CHECK(enumerate_ic(split, len) == enumerate_ic(g, len));
	const auto again = split_finite_selection(split);
	CHECK(again.pairs.size() == split.pairs.size());
	CHECK_THROWS_AS(split_finite_selection(grammar(kL1)), DomainError);
}

TEST_CASE("splitting definite selections") {
	const auto g = grammar(kDefinite);
	const auto split = split_definite_selection(g);
	REQUIRE(split.pairs.size() == 2);
	std::set<std::string> certs;
	for (const auto& p : split.pairs) {
		REQUIRE(p.grammar);
		CHECK(count_resources(*p.grammar).nonterminals == 1);
		certs.insert(to_string(*p.grammar));
		CHECK(equivalent(grammar_to_dfa(*p.grammar), p.selection));
	}
	CHECK(certs == std::set<std::string>{"S -> c", "S -> b; S -> b S; S -> c S"});
	for (std::size_t len = 0; len <= 8; ++len) CHECK(enumerate_ic(split, len) == enumerate_ic(g, len));

	// no finite part: a single pair
	const auto tail = parse_contextual("alphabet: a b\naxioms: b\npair\n  alphabet: a b\n  regex: (a|b)*b\n  contexts: (a,@)\nend\n");
	const auto one = split_definite_selection(tail);
	REQUIRE(one.pairs.size() == 1);
	CHECK(enumerate_ic(one, 8) == enumerate_ic(tail, 8));
	CHECK_THROWS_AS(split_definite_selection(grammar(kL1)), DomainError);
}
