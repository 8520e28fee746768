#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "contextual.hpp"
#include "hierarchy.hpp"

namespace icg {

enum class WitnessId { L1, L2, L3, L4, L6, L7 };

inline constexpr WitnessId kAllWitnesses[] = {WitnessId::L1, WitnessId::L2, WitnessId::L3,
                                              WitnessId::L4, WitnessId::L6, WitnessId::L7};

inline std::string_view to_string(WitnessId id) {
	switch (id) {
	case WitnessId::L1: return "L1";
	case WitnessId::L2: return "L2";
	case WitnessId::L3: return "L3";
	case WitnessId::L4: return "L4";
	case WitnessId::L6: return "L6";
	case WitnessId::L7: return "L7";
	}
	return "?";
}

inline WitnessId parse_witness_id(std::string_view s) {
	for (WitnessId id : kAllWitnesses) {
		if (to_string(id) == s) return id;
	}
	throw DomainError("unknown witness '" + std::string(s) + "' (known: L1 L2 L3 L4 L6 L7)");
}

/// Default and allowed range of the parameter n per witness.
struct ParamRange {
	unsigned fallback;
	unsigned min;
	unsigned max;
};

inline ParamRange param_range(WitnessId id) {
	switch (id) {
	case WitnessId::L3:
	case WitnessId::L4: return {1, 1, 3};
	case WitnessId::L6:
	case WitnessId::L7: return {2, 2, 3};
	default: return {0, 0, 0};
	}
}

/// A claim L in IC(F), certified on grammar `grammar` of the case (0 is the
/// defining grammar, higher indices are the alternative grammars).
struct FamilyClaim {
	FamilyLabel family;
	std::size_t grammar = 0;
};

struct WitnessCase {
	WitnessId id = WitnessId::L1;
	unsigned n = 0;
	/// grammars[0] defines the language; the others generate the same language.
	std::vector<ContextualGrammar> grammars;
	std::vector<FamilyClaim> positive;
	std::vector<FamilyLabel> negative;
	bool has_closed_form = false;

	const ContextualGrammar& grammar() const { return grammars.front(); }
};

namespace detail {

inline std::vector<Context> contexts(std::initializer_list<std::pair<const char*, const char*>> list) {
	std::vector<Context> out;
	for (const auto& [u, v] : list) out.push_back({u, v});
	return out;
}

inline SelectionPair regex_pair(std::string_view u, std::string_view expr, std::vector<Context> cs) {
	const Alphabet a(u);
	return SelectionPair::from_regex(a, parse_regex(expr, a), std::move(cs));
}

inline SelectionPair grammar_pair(std::string_view u, std::string_view rules, std::vector<Context> cs) {
	const Alphabet a(u);
	return SelectionPair::from_grammar(a, parse_right_linear(rules, a), std::move(cs));
}

inline std::string letters(char first, unsigned n, unsigned stride = 1) {
	std::string s;
	for (unsigned i = 0; i < n; ++i) s.push_back(static_cast<char>(first + i * stride));
	return s;
}

inline WordSet words_of_length(const Alphabet& v, std::size_t lo, std::size_t hi) {
	WordSet out;
	for (auto& w : all_words(v, hi)) {
		if (w.size() >= lo) out.insert(std::move(w));
	}
	return out;
}

inline std::string alternatives(const std::vector<Word>& ws) {
	std::string out;
	for (const auto& w : ws) {
		if (!out.empty()) out += "|";
		out += w.empty() ? "@" : w;
	}
	return out;
}

} // namespace detail

/// The witness grammars. Letters: for L3 the i-th block a_i, b_i, c_i, d_i is
/// four consecutive letters starting at 'a' + 4(i-1); for L6 and L7 a_i is the
/// i-th letter of the alphabet.
inline WitnessCase build_witness(WitnessId id, std::optional<unsigned> param = std::nullopt) {
	const ParamRange range = param_range(id);
	const unsigned n = param.value_or(range.fallback);
	if (range.max == 0 && param && *param != 0) throw DomainError(std::string(to_string(id)) + " takes no parameter");
	if (range.max != 0 && (n < range.min || n > range.max)) {
		throw DomainError(std::string(to_string(id)) + " needs n in " + std::to_string(range.min) + ".." + std::to_string(range.max));
	}
	WitnessCase c;
	c.id = id;
	c.n = n;
	using detail::contexts;
	switch (id) {
	case WitnessId::L1: {
		ContextualGrammar g{Alphabet("abcde"),
		                    {detail::grammar_pair("bc", "S -> bS; S -> c", contexts({{"ab", "ab"}})),
		                     detail::grammar_pair("a", "S -> aaS; S -> @", contexts({{"d", "e"}}))},
		                    {"c"}};
		ContextualGrammar z = g;
		z.pairs[0] = detail::regex_pair("bc", "b*c(b*c)*", contexts({{"ab", "ab"}}));
		z.pairs[1] = detail::regex_pair("a", "(aa)*", contexts({{"d", "e"}}));
		c.grammars = {std::move(g), std::move(z)};
		c.positive = {{FamilyLabel(Family::RL_V, 1), 0}, {FamilyLabel(Family::RL_P, 2), 0}, {FamilyLabel(Family::REG_Z, 2), 1}};
		c.negative = {FamilyLabel(Family::PS)};
		break;
	}
	case WitnessId::L2: {
		ContextualGrammar g{Alphabet("abc"), {detail::regex_pair("ab", "ab|b", contexts({{"c", "c"}}))}, {"ab", "ba"}};
		ContextualGrammar z{Alphabet("abc"), {detail::regex_pair("abc", "(a|b|c)*b", contexts({{"c", "c"}}))}, {"ab", "ba"}};
		c.grammars = {std::move(g), std::move(z)};
		c.positive = {{FamilyLabel(Family::RL_V, 1), 0}, {FamilyLabel(Family::RL_P, 2), 0}, {FamilyLabel(Family::REG_Z, 2), 1}};
		c.negative = {FamilyLabel(Family::CIRC), FamilyLabel(Family::SUF)};
		c.has_closed_form = true;
		break;
	}
	case WitnessId::L3: {
		const std::string a = detail::letters('a', n, 4), b = detail::letters('b', n, 4);
		const std::string cc = detail::letters('c', n, 4), d = detail::letters('d', n, 4);
		std::vector<Context> p, q;
		for (char x : a) {
			for (char y : cc) p.push_back({Word(1, x), Word(1, y)});
		}
		for (char x : b) {
			for (char y : d) q.push_back({Word(1, x), Word(1, y)});
		}
		WordSet axioms;
		for (char w : a) {
			for (char x : b) {
				for (char y : cc) {
					for (char z : d) axioms.insert(Word{w, x, y, z});
				}
			}
		}
		auto any = [](const std::string& s) {
			std::string r;
			for (char x : s) r += r.empty() ? std::string(1, x) : std::string("|") + x;
			return "(" + r + ")*";
		};
		ContextualGrammar g{Alphabet(detail::letters('a', 4 * n)),
		                    {detail::regex_pair(b, any(b), std::move(p)), detail::regex_pair(cc, any(cc), std::move(q))},
		                    std::move(axioms)};
		c.grammars = {std::move(g)};
		c.positive = {{FamilyLabel(Family::MON), 0}};
		c.negative = {FamilyLabel(Family::RL_P, n)};
		break;
	}
	case WitnessId::L4: {
		std::string sel;
		for (unsigned i = 0; i <= n; ++i) sel += "a*ba*";
		ContextualGrammar g{Alphabet("ab"), {detail::regex_pair("ab", sel, contexts({{"a", "a"}}))}, {power("ab", 2 * n + 1) + "a"}};
		c.grammars = {std::move(g)};
		c.positive = {{FamilyLabel(Family::COMM), 0}, {FamilyLabel(Family::ORD), 0}};
		c.negative = {FamilyLabel(Family::RL_V, n)};
		c.has_closed_form = true;
		break;
	}
	case WitnessId::L6: {
		const std::string v = detail::letters('a', n);
		WordSet axioms = detail::words_of_length(Alphabet(v), n - 1, n - 1);
		axioms.insert(v);
		ContextualGrammar g{Alphabet(v), {detail::regex_pair(v, v, {Context{"", v}})}, std::move(axioms)};
		c.grammars = {std::move(g)};
		c.positive = {{FamilyLabel(Family::FIN), 0}};
		c.negative = {FamilyLabel(Family::REG_Z, n)};
		c.has_closed_form = true;
		break;
	}
	case WitnessId::L7: {
		const std::string v = detail::letters('a', n);
		const Alphabet va(v);
		std::vector<Context> cs;
		std::vector<Word> block;
		for (const auto& w : detail::words_of_length(va, n, n)) {
			cs.push_back({"", w});
			block.push_back(w);
		}
		ContextualGrammar g{va, {detail::regex_pair(v, detail::alternatives(block), std::move(cs))},
		                    detail::words_of_length(va, 0, n)};
		c.grammars = {std::move(g)};
		c.positive = {{FamilyLabel(Family::COMM), 0}};
		c.negative = {FamilyLabel(Family::REG_Z, n)};
		c.has_closed_form = true;
		break;
	}
	}
	return c;
}

/// The language of a witness up to max_len, enumerated from its defining formula.
inline WordSet closed_form(WitnessId id, std::optional<unsigned> param, std::size_t max_len) {
	const ParamRange range = param_range(id);
	const unsigned n = param.value_or(range.fallback);
	if (range.max != 0 && (n < range.min || n > range.max)) throw DomainError("parameter out of range");
	WordSet out;
	auto keep = [&](Word w) {
		if (w.size() <= max_len) out.insert(std::move(w));
	};
	switch (id) {
	case WitnessId::L2:
		for (std::size_t i = 0; 2 * i + 2 <= max_len; ++i) {
			for (std::size_t j = 0; 2 * (i + j) + 2 <= max_len; ++j) {
				keep(Word(i, 'c') + "a" + Word(j, 'c') + "b" + Word(i + j, 'c'));
			}
			keep(Word(i, 'c') + "b" + Word(i, 'c') + "a");
		}
		break;
	case WitnessId::L4: {
		// exponents p_0..p_n >= 1, the block a^p_0 b ... a^p_n written twice with b between
		const std::size_t blocks = n + 1;
		std::vector<std::size_t> p(blocks, 1);
		for (;;) {
			std::size_t sum = 0;
			for (auto x : p) sum += x;
			if (2 * sum + 2 * n + 1 <= max_len) {
				Word half;
				for (std::size_t i = 0; i < blocks; ++i) {
					half += Word(p[i], 'a');
					if (i + 1 < blocks) half += "b";
				}
				keep(half + "b" + half);
			}
			std::size_t i = 0;
			while (i < blocks) {
				++p[i];
				std::size_t s = 0;
				for (auto x : p) s += x;
				if (2 * s + 2 * n + 1 <= max_len) break;
				p[i] = 1;
				++i;
			}
			if (i == blocks) break;
		}
		break;
	}
	case WitnessId::L6: {
		const Word block = detail::letters('a', n);
		for (Word w = block; w.size() <= max_len; w += block) keep(w);
		for (auto& w : detail::words_of_length(Alphabet(block), n - 1, n - 1)) keep(w);
		break;
	}
	case WitnessId::L7: {
		const Alphabet v(detail::letters('a', n));
		for (auto& w : all_words(v, max_len)) {
			if (w.size() <= n - 1 || w.size() % n == 0) keep(std::move(w));
		}
		break;
	}
	default: throw DomainError(std::string(to_string(id)) + " has no closed form; use the enumerator");
	}
	return out;
}

/// Minimal complete automata over u with at most max_states states, one per language.
inline std::vector<Dfa> small_automata(const Alphabet& u, std::size_t max_states) {
	std::set<std::pair<std::vector<State>, std::vector<bool>>> seen;
	std::vector<Dfa> out;
	const std::size_t k = u.size();
	for (std::size_t n = 1; n <= max_states; ++n) {
		const std::size_t cells = n * k;
		std::vector<State> delta(cells, 0);
		for (;;) {
			for (std::uint32_t acc = 0; acc < (1u << n); ++acc) {
				std::vector<bool> a(n);
				for (std::size_t q = 0; q < n; ++q) a[q] = (acc >> q) & 1u;
				Dfa m = minimize(Dfa(u, n, 0, delta, a));
				if (seen.insert({m.table(), m.accepting()}).second) out.push_back(std::move(m));
			}
			std::size_t i = 0;
			while (i < cells && ++delta[i] == n) delta[i++] = 0;
			if (i == cells) break;
		}
	}
	return out;
}

struct CheckLine {
	std::string name;
	bool passed = true;
	std::string detail;
};

struct WitnessReport {
	WitnessId id = WitnessId::L1;
	unsigned n = 0;
	std::size_t max_len = 0;
	std::vector<CheckLine> lines;

	bool ok() const {
		return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
	}
};

struct CheckOptions {
	/// Bound for the member/enumerate agreement check.
	std::size_t member_len = 8;
	/// Alphabets larger than this are sampled instead of checked exhaustively.
	std::size_t exhaustive_alphabet = 3;
	std::size_t samples = 100'000;
	std::uint64_t seed = 20240611;
	/// Bound (0: the checked length) and candidate states for the informational
	/// search behind negative claims.
	std::size_t negative_len = 0;
	std::size_t negative_states = 2;
	std::size_t negative_candidates = 20'000;
	bool run_negative = true;
};

namespace detail {

inline std::string first_difference(const WordSet& a, const WordSet& b) {
	for (const auto& w : a) {
		if (!b.count(w)) return "'" + show_word(w) + "' only in the first set";
	}
	for (const auto& w : b) {
		if (!a.count(w)) return "'" + show_word(w) + "' only in the second set";
	}
	return "";
}

// Forward enumeration that stops at the first word outside `target`.
inline bool generates_exactly(const ContextualGrammar& g, const WordSet& target, std::size_t max_len) {
	WordSet seen;
	std::vector<Word> frontier;
	for (const auto& a : g.axioms) {
		if (a.size() > max_len) continue;
		if (!target.count(a)) return false;
		if (seen.insert(a).second) frontier.push_back(a);
	}
	while (!frontier.empty()) {
		std::vector<Word> next;
		for (const auto& w : frontier) {
			for (auto& s : derive_step(g, w)) {
				if (s.target.size() > max_len) continue;
				if (!target.count(s.target)) return false;
				if (seen.insert(s.target).second) next.push_back(std::move(s.target));
			}
		}
		frontier = std::move(next);
	}
	return seen.size() == target.size();
}

inline CheckLine negative_search(const WitnessCase& c, const FamilyLabel& f, const WordSet& target, const CheckOptions& opt) {
	const ContextualGrammar& g = c.grammar();
	std::vector<std::vector<Dfa>> pools;
	std::size_t combos = 1;
	for (const auto& p : g.pairs) {
		std::vector<Dfa> pool;
		for (auto& d : small_automata(p.declared, opt.negative_states)) {
			const SelectionPair probe = SelectionPair::from_dfa(p.declared, d, p.contexts);
			ClassifyOptions co;
			co.caps.max_rules = 2;
			co.caps.max_rhs_len = 2;
			if (pair_in_family(probe, f, co).verdict == Verdict::yes) pool.push_back(std::move(d));
		}
		combos *= std::max<std::size_t>(pool.size(), 1);
		pools.push_back(std::move(pool));
	}
	const std::string name = "negative " + to_string(f);
	if (combos > opt.negative_candidates) {
		return {name, true, "not searched: " + std::to_string(combos) + " candidates exceed the limit"};
	}
	std::vector<std::size_t> idx(pools.size(), 0);
	std::size_t tried = 0;
	for (bool more = combos > 0 && std::all_of(pools.begin(), pools.end(), [](const auto& p) { return !p.empty(); }); more;) {
		ContextualGrammar h = g;
		for (std::size_t i = 0; i < pools.size(); ++i) {
			h.pairs[i] = SelectionPair::from_dfa(g.pairs[i].declared, pools[i][idx[i]], g.pairs[i].contexts);
		}
		++tried;
		if (generates_exactly(h, target, opt.negative_len)) {
			return {name, true, "inconclusive: a candidate with " + to_string(f) + " selections agrees up to length " +
			                        std::to_string(opt.negative_len)};
		}
		std::size_t i = 0;
		while (i < idx.size() && ++idx[i] == pools[i].size()) idx[i++] = 0;
		more = i < idx.size();
	}
	return {name, true, "consistent at bound " + std::to_string(opt.negative_len) + ": none of " + std::to_string(tried) +
	                        " candidate grammar(s) (same contexts and axioms, selections from " + to_string(f) + " with <= " +
	                        std::to_string(opt.negative_states) + " states) generates the language; not a proof"};
}

} // namespace detail

/// Runs every check of a witness case: validity, positive claims, agreement of
/// the alternative grammars, closed form, forward/backward agreement, and the
/// informational bounded search behind each negative claim.
inline WitnessReport check_witness(const WitnessCase& c, std::size_t max_len, const CheckOptions& opt = {}) {
	WitnessReport rep{c.id, c.n, max_len, {}};
	auto add = [&](std::string name, bool ok, std::string detail) { rep.lines.push_back({std::move(name), ok, std::move(detail)}); };

	for (std::size_t i = 0; i < c.grammars.size(); ++i) {
		const auto diags = validate(c.grammars[i]);
		add("valid grammar " + std::to_string(i), diags.empty(), diags.empty() ? "" : diags.front());
		if (!diags.empty()) return rep;
	}
	for (const auto& claim : c.positive) {
		const SelectionVerdict v = selection_in_family(c.grammars.at(claim.grammar), claim.family);
		std::string detail;
		for (std::size_t i = 0; i < v.pairs.size(); ++i) {
			if (!detail.empty()) detail += "; ";
			detail += "pair " + std::to_string(i + 1) + ": " + std::string(to_string(v.pairs[i].verdict)) + " (" + v.pairs[i].evidence + ")";
		}
		add("positive " + to_string(claim.family) + " (grammar " + std::to_string(claim.grammar) + ")", v.verdict == Verdict::yes,
		    detail);
	}
	const WordSet lang = enumerate_ic(c.grammar(), max_len);
	bool axioms_in = std::all_of(c.grammar().axioms.begin(), c.grammar().axioms.end(),
	                             [&](const Word& a) { return a.size() > max_len || lang.count(a); });
	add("axioms generated", axioms_in, std::to_string(lang.size()) + " word(s) up to length " + std::to_string(max_len));
	for (std::size_t i = 1; i < c.grammars.size(); ++i) {
		const WordSet other = enumerate_ic(c.grammars[i], max_len);
		const std::string diff = detail::first_difference(lang, other);
		add("grammar " + std::to_string(i) + " generates the same words", diff.empty(), diff);
	}
	if (c.has_closed_form) {
		const WordSet cf = closed_form(c.id, c.n, max_len);
		const std::string diff = detail::first_difference(lang, cf);
		add("closed form", diff.empty(), diff.empty() ? std::to_string(cf.size()) + " word(s)" : diff);
	}
	{
		const std::size_t len = std::min(max_len, opt.member_len);
		const Alphabet& v = c.grammar().alphabet;
		std::size_t checked = 0, disagreements = 0;
		std::string first;
		auto probe = [&](const Word& w) {
			++checked;
			const bool fwd = lang.count(w) > 0;
			if (member_ic(c.grammar(), w) != fwd) {
				if (disagreements++ == 0) first = "'" + show_word(w) + "'";
			}
		};
		std::string how;
		if (v.size() <= opt.exhaustive_alphabet) {
			for (const auto& w : all_words(v, len)) probe(w);
			how = "all words up to length " + std::to_string(len);
		} else {
			for (const auto& w : lang) {
				if (w.size() <= len) probe(w);
			}
			std::mt19937_64 rng(opt.seed);
			std::uniform_int_distribution<std::size_t> length(0, len);
			std::uniform_int_distribution<std::size_t> letter(0, v.size() - 1);
			for (std::size_t s = 0; s < opt.samples; ++s) {
				Word w(length(rng), ' ');
				for (char& ch : w) ch = v[letter(rng)];
				probe(w);
			}
			how = "generated words plus " + std::to_string(opt.samples) + " sampled words up to length " + std::to_string(len);
		}
		add("member agrees with enumeration", disagreements == 0,
		    how + ", " + std::to_string(checked) + " checked" + (disagreements ? ", first disagreement " + first : ""));
	}
	if (opt.run_negative) {
		CheckOptions o = opt;
		if (o.negative_len == 0) o.negative_len = max_len;
		const WordSet target = o.negative_len == max_len ? lang : enumerate_ic(c.grammar(), o.negative_len);
		for (const auto& f : c.negative) rep.lines.push_back(detail::negative_search(c, f, target, o));
	}
	return rep;
}

inline std::string to_string(const WitnessReport& r) {
	std::string out = std::string(to_string(r.id));
	if (r.n) out += " (n=" + std::to_string(r.n) + ")";
	out += ", max length " + std::to_string(r.max_len) + ": " + (r.ok() ? "ok" : "FAILED") + "\n";
	for (const auto& l : r.lines) {
		out += std::string("  ") + (l.passed ? "pass  " : "FAIL  ") + l.name;
		if (!l.detail.empty()) out += ": " + l.detail;
		out += "\n";
	}
	return out;
}

} // namespace icg
