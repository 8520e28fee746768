// One pass/fail line per acceptance criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include <icg/fixtures.hpp>
#include <icg/resources.hpp>
#include <icg/subregular.hpp>

#include "oracles.hpp"

using namespace icg;

namespace {

struct Outcome {
	bool ok = true;
	std::string detail;
	void fail(const std::string& why) {
		if (ok) detail = why;
		ok = false;
	}
};

std::vector<WitnessCase> default_cases() {
	std::vector<WitnessCase> out;
	for (WitnessId id : kAllWitnesses) out.push_back(build_witness(id));
	return out;
}

Outcome fixture_certification() {
	Outcome o;
	std::size_t claims = 0;
	for (const auto& c : default_cases()) {
		for (const auto& claim : c.positive) {
			++claims;
			const auto v = selection_in_family(c.grammars.at(claim.grammar), claim.family);
			if (v.verdict != Verdict::yes) o.fail(std::string(to_string(c.id)) + " " + to_string(claim.family) + " not certified");
		}
	}
	if (o.ok) o.detail = std::to_string(claims) + " claims certified";
	return o;
}

Outcome closed_forms() {
	Outcome o;
	const std::pair<WitnessId, std::optional<unsigned>> cases[] = {
	    {WitnessId::L2, std::nullopt}, {WitnessId::L4, 1u}, {WitnessId::L6, 2u}, {WitnessId::L7, 2u}};
	for (const auto& [id, n] : cases) {
		const auto start = std::chrono::steady_clock::now();
		const WordSet got = enumerate_ic(build_witness(id, n).grammar(), 8);
		const WordSet want = closed_form(id, n, 8);
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		if (got != want) o.fail(std::string(to_string(id)) + ": " + detail::first_difference(got, want));
		if (secs >= 10) o.fail(std::string(to_string(id)) + " took " + std::to_string(secs) + " s");
	}
	if (o.ok) o.detail = "L2, L4 n=1, L6 n=2, L7 n=2 equal at length 8";
	return o;
}

Outcome member_vs_enumerate() {
	Outcome o;
	std::mt19937_64 rng(2024);
	std::size_t words = 0;
	for (const auto& c : default_cases()) {
		const auto& g = c.grammar();
		const WordSet lang = enumerate_ic(g, 8);
		const std::string letters = g.alphabet.str();
		auto check = [&](const Word& w) {
			++words;
			if (member_ic(g, w) != (lang.count(w) > 0)) o.fail(std::string(to_string(c.id)) + " disagrees on " + show_word(w));
		};
		if (letters.size() <= 3) {
			for (const auto& w : oracle::words_up_to(letters, 8)) check(w);
			continue;
		}
		// every member, then uniform lengths with uniform letters
		for (const auto& w : lang) check(w);
		std::uniform_int_distribution<std::size_t> len(0, 8), letter(0, letters.size() - 1);
		for (int i = 0; i < 100'000; ++i) {
			Word w(len(rng), ' ');
			for (auto& x : w) x = letters[letter(rng)];
			check(w);
		}
	}
	if (o.ok) o.detail = std::to_string(words) + " words agree";
	return o;
}

Outcome implications() {
	Outcome o;
	std::mt19937_64 rng(1);
	const int total = 1200;
	int violations = 0;
	for (int i = 0; i < total; ++i) {
		const Alphabet u(std::string("abc").substr(0, 1 + i % 3));
		const Dfa d = oracle::random_dfa(rng, u, 1 + i % 6);
		try {
			const bool mon = is_monoidal(d, u), fin = is_finite(d, u), nil = is_nilpotent(d, u);
			const bool comb = is_combinational(d, u), def = is_definite(d, u), suf = is_suffix_closed(d, u);
			const bool ord = is_ordered(d, u), comm = is_commutative(d, u), circ = is_circular(d, u);
			// a monoid on at most six states has at most 6^6 elements
			const std::size_t cap = 46656;
			const bool nc = is_noncounting(d, u, cap), ps = is_power_separating(d, u, cap);
			const bool bad = (mon && !(nil && suf && comm)) || (fin && !nil) || (nil && !def) || (comb && !def) ||
			                 (def && !ord) || (ord && !nc) || (nc && !ps) || (suf && !ps) || (comm && !circ) ||
			                 (comb && min_states(d) > 2);
			if (bad) {
				++violations;
				o.fail("violation on\n" + dfa_to_string(d));
			}
		} catch (const ResourceError& e) {
			o.fail(std::string("resource limit: ") + e.what());
		}
	}
	if (o.ok) o.detail = std::to_string(total) + " automata, 0 violations";
	else if (violations) o.detail = std::to_string(violations) + " violations; first " + o.detail;
	return o;
}

Outcome splits() {
	Outcome o;
	auto same = [&](const ContextualGrammar& a, const ContextualGrammar& b, const std::string& what) {
		if (enumerate_ic(a, 8) != enumerate_ic(b, 8)) o.fail(what + " changes the language");
	};
	for (WitnessId id : {WitnessId::L2, WitnessId::L6, WitnessId::L7}) {
		const auto g = build_witness(id).grammar();
		const auto f = split_finite_selection(g);
		same(g, f, "finite split of " + std::string(to_string(id)));
		for (const auto& p : f.pairs) {
			if (!p.grammar) {
				o.fail("finite split without certificate");
				continue;
			}
			const ResourceCount rc = count_resources(*p.grammar);
			if (rc.nonterminals != 1) o.fail("finite certificate with " + std::to_string(rc.nonterminals) + " non-terminals");
			if (rc.rules > enumerate_regular(p.selection, 64).size()) o.fail("finite certificate has more rules than words");
		}
		same(g, split_definite_selection(g), "definite split of " + std::string(to_string(id)));
	}
	// {c} together with every word ending in b
	const ContextualGrammar def{Alphabet("bc"),
	                            {SelectionPair::from_regex(Alphabet("bc"), parse_regex("c|(b|c)*b"), {{"b", ""}})},
	                            {"c", "bc"}};
	const auto s = split_definite_selection(def);
	same(def, s, "definite split");
	for (const auto& p : s.pairs) {
		if (!p.grammar || count_resources(*p.grammar).nonterminals != 1) o.fail("definite certificate needs one non-terminal");
		else if (!equivalent(grammar_to_dfa(*p.grammar), p.selection)) o.fail("definite certificate differs from its selection");
	}
	if (o.ok) o.detail = "languages preserved, one non-terminal per certificate";
	return o;
}

Outcome one_state_automata() {
	Outcome o;
	std::size_t seen = 0;
	for (const char* letters : {"a", "ab", "abc"}) {
		const Alphabet u(letters);
		const auto all = oracle::words_up_to(letters, 6);
		for (bool acc : {false, true}) {
			++seen;
			const Dfa d(u, 1, 0, std::vector<State>(u.size(), 0), {acc});
			const auto lang = oracle::language(d, 6);
			if (!lang.empty() && lang != oracle::WordSet(all.begin(), all.end())) o.fail(std::string("over ") + letters);
			if (!(is_empty_language(d) || equivalent(d, universal_dfa(u)))) o.fail(std::string("library disagrees over ") + letters);
		}
	}
	if (o.ok) o.detail = std::to_string(seen) + " automata accept nothing or everything";
	return o;
}

Outcome pump() {
	Outcome o;
	std::mt19937_64 rng(7);
	const auto cases = default_cases();
	std::vector<std::vector<Word>> words;
	for (const auto& c : cases) {
		std::vector<Word> ws;
		for (const auto& w : enumerate_ic(c.grammar(), 7)) {
			if (!derive_step(c.grammar(), w).empty()) ws.push_back(w);
		}
		words.push_back(std::move(ws));
	}
	int samples = 0;
	while (samples < 100) {
		const std::size_t ci = std::uniform_int_distribution<std::size_t>(0, cases.size() - 1)(rng);
		if (words[ci].empty()) continue;
		const auto& g = cases[ci].grammar();
		const Word& w = words[ci][std::uniform_int_distribution<std::size_t>(0, words[ci].size() - 1)(rng)];
		const auto steps = derive_step(g, w);
		DerivationStep s = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
		++samples;
		const std::size_t grow = s.context.size();
		for (std::size_t k = 2; k <= 4; ++k) {
			const auto next = reapply(g, s);
			if (!next) {
				o.fail("no re-application from " + show_word(s.target));
				break;
			}
			if (next->target.size() != w.size() + k * grow || !member_ic(g, next->target, nullptr)) {
				o.fail("bad pump of " + show_word(w));
				break;
			}
			s = *next;
		}
	}
	if (o.ok) o.detail = std::to_string(samples) + " samples pumped to k = 4";
	return o;
}

Outcome l1_words() {
	Outcome o;
	const auto g = build_witness(WitnessId::L1).grammar();
	auto word = [](std::size_t m, std::size_t r) { return "d" + Word(m, 'a') + "e" + Word(m, 'b') + "c" + power("ab", r); };
	for (std::size_t k : {1, 2}) {
		if (!member_ic(g, word(2 * k, 2 * k))) o.fail("rejects " + word(2 * k, 2 * k));
	}
	if (member_ic(g, word(3, 3))) o.fail("accepts " + word(3, 3));
	if (o.ok) o.detail = "k = 1, 2 accepted; odd exponent rejected";
	return o;
}

} // namespace

int main() {
	struct Criterion {
		const char* name;
		double limit;
		std::function<Outcome()> run;
	};
	const Criterion criteria[] = {
	    {"fixture certification", 10, fixture_certification},
	    {"closed-form equality", 40, closed_forms},
	    {"membership agrees with enumeration", 60, member_vs_enumerate},
	    {"hierarchy implications on random automata", 60, implications},
	    {"selection splits", 10, splits},
	    {"one-state automata", 1, one_state_automata},
	    {"pump property", 10, pump},
	    {"L1 word checks", 30, l1_words},
	};
	int failed = 0;
	int index = 0;
	for (const auto& c : criteria) {
		++index;
		const auto start = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception& e) {
			o.fail(std::string("exception: ") + e.what());
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		if (secs >= c.limit) o.fail("took " + std::to_string(secs) + " s");
		std::printf("%s %d %s (%.2f s, limit %.0f s): %s\n", o.ok ? "PASS" : "FAIL", index, c.name, secs, c.limit,
		            o.detail.c_str());
		if (!o.ok) ++failed;
	}
	return failed == 0 ? 0 : 1;
}
