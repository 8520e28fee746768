#include <catch_amalgamated.hpp>

#include <random>

#include <icg/dfa_io.hpp>
#include <icg/monoid.hpp>
#include <icg/right_linear.hpp>

#include "oracles.hpp"

using namespace icg;

namespace {

oracle::WordSet plain(const WordSet& ws) { return {ws.begin(), ws.end()}; }

Dfa dfa_of(std::string_view expr, std::string_view u) { return regex_to_dfa(expr, Alphabet(u)); }

bool nfa_accepts(const Nfa& n, const Word& w) { return accepts(nfa_to_dfa(n), w); }

} // namespace

TEST_CASE("regex to nfa") {
	SECTION("empty word") {
		const Nfa n = regex_to_nfa(Regex::empty_word(), Alphabet("a"));
		CHECK(nfa_accepts(n, ""));
		CHECK_FALSE(nfa_accepts(n, "a"));
		CHECK(plain(enumerate_regular(nfa_to_dfa(n), 5)) == oracle::WordSet{""});
	}
	SECTION("(aa)*") {
		const Nfa n = regex_to_nfa(Regex::star(Regex::word("aa")), Alphabet("a"));
		CHECK(plain(enumerate_regular(nfa_to_dfa(n), 7)) == oracle::WordSet{"", "aa", "aaaa", "aaaaaa"});
	}
	SECTION("b*c against brute force") {
		const Regex r = parse_regex("b*c");
		const Dfa d = nfa_to_dfa(regex_to_nfa(r, Alphabet("bc")));
		oracle::WordSet want;
		for (const auto& w : oracle::words_up_to("bc", 6)) {
			if (!w.empty() && w.back() == 'c' && w.find('c') == w.size() - 1) want.insert(w);
		}
		CHECK(oracle::language(d, 6) == want);
	}
}

TEST_CASE("random expressions agree with structural enumeration") {
	std::mt19937_64 rng(7);
	for (int i = 0; i < 300; ++i) {
		const std::string letters = i % 2 ? "ab" : "abc";
		const Regex r = oracle::random_regex(rng, letters, 1 + i % 8);
		const Dfa d = nfa_to_dfa(regex_to_nfa(r, Alphabet(letters)));
		INFO(to_string(r));
		REQUIRE(plain(enumerate_regular(d, 6)) == oracle::regex_words(r, 6));
		REQUIRE(parse_regex(to_string(r)) == r);
	}
}

TEST_CASE("regex parser") {
	CHECK(regex_to_dfa("()", Alphabet("a")) == regex_to_dfa(Regex::empty_word(), Alphabet("a")));
	CHECK(is_empty_language(dfa_of("∅", "a")));
	CHECK(equivalent(dfa_of("a(b|∅)", "ab"), dfa_of("ab", "ab")));
	CHECK(equivalent(dfa_of("@|a", "a"), dfa_of("a|()", "a")));
	try {
		(void)parse_regex("a(b|c");
		FAIL("expected a parse error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 1);
		CHECK(e.column() == 2);
	}
	CHECK_THROWS_AS(parse_regex("a**|)"), ParseError);
	CHECK_THROWS_AS(parse_regex("ab", Alphabet("a")), ParseError);
}

TEST_CASE("right-linear grammars") {
	SECTION("S -> bS, S -> c") {
		const auto g = parse_right_linear("S -> b S; S -> c");
		const Dfa d = grammar_to_dfa(g);
		oracle::WordSet want;
		for (std::size_t n = 0; n < 6; ++n) want.insert(std::string(n, 'b') + "c");
		CHECK(oracle::language(d, 6) == want);
		CHECK(equivalent(nfa_to_dfa(grammar_to_nfa(g)), dfa_of("b*c", "bc")));
		CHECK(plain(enumerate_regular(d, 8)) == plain(enumerate_regular(dfa_of("b*c", "bc"), 8)));
	}
	SECTION("S -> lambda") {
		const auto g = parse_right_linear("S -> @", Alphabet("a"));
		CHECK(oracle::language(grammar_to_dfa(g), 4) == oracle::WordSet{""});
	}
	SECTION("(aa)*") {
		const auto g = parse_right_linear("S -> aa S\nS -> @");
		CHECK(equivalent(grammar_to_dfa(g), regex_to_dfa(Regex::star(Regex::word("aa")), Alphabet("a"))));
	}
	SECTION("parse errors carry positions") {
		try {
			(void)parse_right_linear("S -> a S\nS = b");
			FAIL("expected a parse error");
		} catch (const ParseError& e) {
			CHECK(e.line() == 2);
		}
		CHECK_THROWS_AS(parse_right_linear("S -> A b"), ParseError);
	}
	SECTION("regular normal form keeps the language") {
		std::mt19937_64 rng(11);
		for (int i = 0; i < 150; ++i) {
			const Dfa d = oracle::random_dfa(rng, Alphabet("ab"), 1 + i % 5);
			const auto g = dfa_to_grammar(d);
			const auto n = normalize_regular(g);
			for (const auto& r : n.rules()) {
				const bool lambda = r.word.empty() && !r.target;
				CHECK((r.word.size() == 1 || (lambda && r.lhs == n.start())));
			}
			REQUIRE(oracle::language(grammar_to_dfa(n), 7) == oracle::language(d, 7));
			REQUIRE(equivalent(grammar_to_dfa(g), d));
		}
		const auto wide = parse_right_linear("S -> abc S; S -> ba; S -> T; T -> @; T -> c T");
		CHECK(equivalent(grammar_to_dfa(normalize_regular(wide)), grammar_to_dfa(wide)));
	}
}

TEST_CASE("subset construction and minimization") {
	SECTION("empty language") {
		const Dfa d = minimize(nfa_to_dfa(regex_to_nfa(Regex::empty_set(), Alphabet("ab"))));
		CHECK(d.num_states() == 1);
		CHECK_FALSE(d.is_accepting(0));
	}
	SECTION("(aa)* has the two-state cycle") {
		const Dfa d = dfa_of("(aa)*", "a");
		REQUIRE(d.num_states() == 2);
		CHECK(d.is_accepting(d.initial()));
		const State other = d.next(d.initial(), 0);
		CHECK(other != d.initial());
		CHECK(d.next(other, 0) == d.initial());
	}
	SECTION("b*c has loop, accept and sink") {
		const Dfa d = dfa_of("b*c", "bc");
		REQUIRE(d.num_states() == 3);
		const State z0 = d.initial();
		const State z1 = d.next(z0, 1);
		const State sink = d.next(z1, 0);
		CHECK(d.next(z0, 0) == z0);
		CHECK(d.is_accepting(z1));
		CHECK_FALSE(d.is_accepting(sink));
		CHECK(d.next(sink, 0) == sink);
		CHECK(d.next(sink, 1) == sink);
	}
	SECTION("the four-state automaton of (a*ba*)^2") {
		// q_i counts the b's read so far; q_3 is the sink
		const Dfa drawn(Alphabet("ab"), 4, 0, {0, 1, 1, 2, 2, 3, 3, 3}, {false, false, true, false});
		CHECK(minimize(drawn).num_states() == 4);
		CHECK(equivalent(drawn, dfa_of("(a*ba*)(a*ba*)", "ab")));
	}
	SECTION("redundant six-state (aa)*") {
		const Dfa six(Alphabet("a"), 6, 0, {1, 2, 3, 4, 5, 0}, {true, false, true, false, true, false});
		const Dfa m = minimize(six);
		CHECK(m.num_states() == 2);
		CHECK(oracle::residual_classes(six, 8, 8) == 2);
		CHECK(equivalent(m, six));
	}
	SECTION("properties on random automata") {
		std::mt19937_64 rng(3);
		for (int i = 0; i < 400; ++i) {
			const Alphabet u(i % 3 == 0 ? "abc" : "ab");
			const Dfa d = oracle::random_dfa(rng, u, 1 + i % 6);
			const Dfa m = minimize(d);
			REQUIRE(m.num_states() <= d.num_states());
			REQUIRE(minimize(m) == m);
			REQUIRE(equivalent(m, d));
			REQUIRE(oracle::language(m, 6) == oracle::language(d, 6));
			REQUIRE(m.num_states() == oracle::residual_classes(d, 6, 6));
			// renaming states leaves the canonical form unchanged
			std::vector<State> perm(d.num_states());
			for (State q = 0; q < perm.size(); ++q) perm[q] = static_cast<State>(perm.size() - 1 - q);
			std::vector<State> delta(d.table().size());
			std::vector<bool> acc(d.num_states());
			for (State q = 0; q < d.num_states(); ++q) {
				acc[perm[q]] = d.is_accepting(q);
				for (std::size_t a = 0; a < u.size(); ++a) delta[perm[q] * u.size() + a] = perm[d.next(q, a)];
			}
			REQUIRE(minimize(Dfa(u, d.num_states(), perm[d.initial()], delta, acc)) == m);
		}
	}
}

TEST_CASE("equivalence") {
	const Dfa d = dfa_of("(a|b)*b", "ab");
	CHECK(equivalent(d, d));
	CHECK_FALSE(equivalent(dfa_of("(aa)*", "a"), dfa_of("a*", "a")));
	CHECK(shortest_difference(dfa_of("(aa)*", "a"), dfa_of("a*", "a")) == Word("a"));
	CHECK(equivalent(grammar_to_dfa(parse_right_linear("S -> bS; S -> c")), dfa_of("b*c", "bc")));
	CHECK_THROWS_AS(equivalent(dfa_of("a", "a"), dfa_of("a", "ab")), AlphabetMismatch);
}

TEST_CASE("boolean combination") {
	std::mt19937_64 rng(5);
	const Alphabet u("ab");
	const auto words = oracle::words_up_to("ab", 6);
	for (int i = 0; i < 100; ++i) {
		const Dfa x = oracle::random_dfa(rng, u, 1 + i % 4);
		const Dfa y = oracle::random_dfa(rng, u, 1 + (i / 4) % 4);
		const Dfa uni = combine(x, y, BoolOp::union_);
		const Dfa inter = combine(x, y, BoolOp::intersection);
		const Dfa diff = combine(x, y, BoolOp::difference);
		const Dfa sym = combine(x, y, BoolOp::symmetric_difference);
		const Dfa cx = complement(x);
		for (const auto& w : words) {
			const bool a = oracle::run(x, w), b = oracle::run(y, w);
			REQUIRE(accepts(uni, w) == (a || b));
			REQUIRE(accepts(inter, w) == (a && b));
			REQUIRE(accepts(diff, w) == (a && !b));
			REQUIRE(accepts(sym, w) == (a != b));
			REQUIRE(accepts(cx, w) == !a);
		}
	}
}

TEST_CASE("acceptance and enumeration") {
	const Dfa even = dfa_of("(aa)*", "a");
	CHECK(accepts(even, ""));
	CHECK_FALSE(accepts(even, "a"));
	CHECK(accepts(dfa_of("b*c", "bc"), "bbc"));
	CHECK(enumerate_regular(empty_dfa(Alphabet("ab")), 6).empty());
	CHECK(plain(enumerate_regular(even, 5)) == oracle::WordSet{"", "aa", "aaaa"});
	CHECK(plain(enumerate_regular(dfa_of("b*c", "bc"), 3)) == oracle::WordSet{"c", "bc", "bbc"});
	const WordSet ordered = enumerate_regular(dfa_of("(a|b)*", "ab"), 2);
	CHECK(std::vector<Word>(ordered.begin(), ordered.end()) == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("transition monoid") {
	SECTION("one state") {
		CHECK(transition_monoid(universal_dfa(Alphabet("abc"))).size() == 1);
	}
	SECTION("(aa)* contains an involution") {
		const auto m = transition_monoid(dfa_of("(aa)*", "a"));
		const auto& t = m.element(m.generator(0));
		const auto id = TransitionMonoid::power(t, 0);
		CHECK(t != id);
		CHECK(TransitionMonoid::then(t, t) == id);
	}
	SECTION("b*c is aperiodic") {
		const auto m = transition_monoid(dfa_of("b*c", "bc"));
		for (std::size_t i = 0; i < m.size(); ++i) {
			const auto& t = m.element(i);
			bool found = false;
			for (std::size_t k = 1; k <= 3 && !found; ++k) {
				found = TransitionMonoid::power(t, k) == TransitionMonoid::power(t, k + 1);
			}
			CHECK(found);
		}
	}
	SECTION("closed under composition and representatives are right") {
		std::mt19937_64 rng(9);
		for (int i = 0; i < 60; ++i) {
			const Dfa d = oracle::random_dfa(rng, Alphabet("ab"), 2 + i % 4);
			const auto m = transition_monoid(d);
			for (std::size_t x = 0; x < m.size(); ++x) {
				for (State q = 0; q < d.num_states(); ++q) REQUIRE(d.run(q, m.representative(x)) == m.element(x)[q]);
				for (std::size_t y = 0; y < m.size(); ++y) {
					REQUIRE(m.index_of(TransitionMonoid::then(m.element(x), m.element(y))).has_value());
				}
			}
		}
	}
	SECTION("cap") {
		const Dfa cycle(Alphabet("ab"), 5, 0, {1, 1, 2, 0, 3, 2, 4, 3, 0, 4}, {true, false, false, false, false});
		CHECK_THROWS_AS(transition_monoid(cycle, 10), ResourceError);
	}
}

TEST_CASE("dfa text format") {
	const Dfa d = dfa_of("b*c", "bc");
	CHECK(parse_dfa(dfa_to_string(d)) == d);
	const std::string table = "states: 2\ninitial: 0\naccepting: 0\n0: 1\n1: 0\n";
	CHECK(equivalent(parse_dfa(table, Alphabet("a")), dfa_of("(aa)*", "a")));
	try {
		(void)parse_dfa("alphabet: a\nstates: 2\ninitial: 0\naccepting: 0\n0: 1\n1: 7\n");
		FAIL("expected a parse error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 6);
	}
	CHECK_THROWS_AS(parse_dfa("alphabet: a\nstates: 2\ninitial: 0\naccepting: 0\n0: 1\n"), ParseError);
}
