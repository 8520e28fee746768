#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfa.hpp"
#include "nfa.hpp"
#include "text.hpp"

namespace icg {

/// A rule `lhs -> word target` or `lhs -> word` when target is empty.
struct Rule {
	std::string lhs;
	Word word;
	std::optional<std::string> target;

	friend auto operator<=>(const Rule&, const Rule&) = default;
	friend bool operator==(const Rule&, const Rule&) = default;
};

inline std::string to_string(const Rule& r) {
	std::string rhs = r.word;
	if (r.target) {
		if (!rhs.empty()) rhs += ' ';
		rhs += *r.target;
	}
	return r.lhs + " -> " + (rhs.empty() ? std::string("@") : rhs);
}

/// Right-linear grammar (N, T, P, S) in the general form: right-hand sides
/// are arbitrary terminal words optionally followed by one non-terminal.
class RightLinearGrammar {
public:
	RightLinearGrammar() = default;

	/// Non-terminals are the start symbol plus every symbol mentioned in `rules`.
	RightLinearGrammar(Alphabet terminals, std::string start, std::vector<Rule> rules)
		: terminals_(std::move(terminals)), start_(std::move(start)) {
		if (start_.empty()) throw DomainError("empty start symbol");
		std::set<Rule> unique(rules.begin(), rules.end());
		rules_.assign(unique.begin(), unique.end());
		nonterminals_.insert(start_);
		for (const auto& r : rules_) {
			if (!terminals_.contains_word(r.word)) {
				throw DomainError("rule '" + to_string(r) + "' uses a letter outside " + terminals_.to_string());
			}
			nonterminals_.insert(r.lhs);
			if (r.target) nonterminals_.insert(*r.target);
		}
	}

	const Alphabet& terminals() const noexcept { return terminals_; }
	const std::string& start() const noexcept { return start_; }
	const std::vector<Rule>& rules() const noexcept { return rules_; }
	const std::set<std::string>& nonterminals() const noexcept { return nonterminals_; }

	/// True iff every rule is A -> xB, A -> x with a single letter x, or S -> lambda.
	bool is_regular_form() const {
		return std::all_of(rules_.begin(), rules_.end(), [&](const Rule& r) {
			if (r.word.empty()) return !r.target && r.lhs == start_;
			return r.word.size() == 1;
		});
	}

	friend bool operator==(const RightLinearGrammar&, const RightLinearGrammar&) = default;

private:
	Alphabet terminals_;
	std::string start_ = "S";
	std::vector<Rule> rules_;
	std::set<std::string> nonterminals_{"S"};
};

inline bool is_nonterminal_start(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_nonterminal_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

/// Parses rules separated by newlines or ';', with '|' for alternatives:
///
///     S -> aa S | @
///     S -> bS; S -> c
///
/// `@` is lambda. An optional `start: X` line overrides the default start
/// symbol (the left side of the first rule). Terminals default to the letters
/// used in the rules.
inline RightLinearGrammar parse_right_linear(std::string_view input, std::optional<Alphabet> terminals = std::nullopt,
                                             std::size_t first_line = 1) {
	std::optional<std::string> start;
	std::vector<Rule> rules;
	std::string letters;
	for (const auto& line : text::lines(input, first_line)) {
		std::string_view rest = line.content;
		while (!rest.empty()) {
			const std::size_t semi = rest.find(';');
			std::string_view part = text::trim(rest.substr(0, semi));
			rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
			if (part.empty()) continue;
			std::string_view key, value;
			if (part.find("->") == std::string_view::npos && text::key_value(part, key, value) && key == "start") {
				if (value.empty() || !is_nonterminal_start(value.front())) text::fail(line, value, "start symbol must begin with an upper-case letter");
				start = std::string(value);
				continue;
			}
			const std::size_t arrow = part.find("->");
			if (arrow == std::string_view::npos) text::fail(line, part, "expected 'A -> w B'");
			const std::string_view lhs = text::trim(part.substr(0, arrow));
			if (lhs.empty() || !is_nonterminal_start(lhs.front()) ||
			    !std::all_of(lhs.begin(), lhs.end(), is_nonterminal_char)) {
				text::fail(line, part, "left-hand side must be a non-terminal");
			}
			std::string_view alternatives = part.substr(arrow + 2);
			while (true) {
				const std::size_t bar = alternatives.find('|');
				std::string_view alt = text::trim(alternatives.substr(0, bar));
				if (alt.empty()) text::fail(line, alternatives.empty() ? part : alternatives, "empty right-hand side (write @ for lambda)");
				Rule rule{std::string(lhs), {}, std::nullopt};
				if (alt != "@") {
					std::size_t i = 0;
					for (; i < alt.size() && !is_nonterminal_start(alt[i]); ++i) {
						const char c = alt[i];
						if (text::is_blank(c)) continue;
						if (!is_symbol_char(c)) text::fail(line, alt.substr(i), std::string("unexpected '") + c + "'");
						if (terminals && !terminals->contains(c)) text::fail(line, alt.substr(i), std::string("letter '") + c + "' not in alphabet " + terminals->to_string());
						rule.word.push_back(c);
						letters.push_back(c);
					}
					if (i < alt.size()) {
						const std::string_view nt = alt.substr(i);
						if (!std::all_of(nt.begin(), nt.end(), is_nonterminal_char)) text::fail(line, nt, "malformed non-terminal (it must end the rule)");
						rule.target = std::string(nt);
					}
				}
				rules.push_back(std::move(rule));
				if (bar == std::string_view::npos) break;
				alternatives = alternatives.substr(bar + 1);
			}
			if (!start) start = std::string(lhs);
		}
	}
	return RightLinearGrammar(terminals ? *terminals : Alphabet(letters), start.value_or("S"), std::move(rules));
}

/// Rules joined by `separator`, start-symbol rules first. A grammar whose
/// start symbol has no rules gets an explicit `start:` entry.
inline std::string to_string(const RightLinearGrammar& g, std::string_view separator = "; ") {
	std::vector<Rule> ordered;
	for (const auto& r : g.rules()) if (r.lhs == g.start()) ordered.push_back(r);
	for (const auto& r : g.rules()) if (r.lhs != g.start()) ordered.push_back(r);
	std::string out;
	if (ordered.empty() || ordered.front().lhs != g.start()) out = "start: " + g.start();
	for (const auto& r : ordered) {
		if (!out.empty()) out += separator;
		out += to_string(r);
	}
	return out;
}

/// One state per non-terminal plus intermediate states for long words.
inline Nfa grammar_to_nfa(const RightLinearGrammar& g) {
	Nfa nfa(g.terminals());
	std::map<std::string, State> id;
	for (const auto& nt : g.nonterminals()) id[nt] = nfa.add_state();
	const State final_state = nfa.add_state();
	nfa.set_accepting(final_state);
	nfa.add_initial(id.at(g.start()));
	for (const auto& r : g.rules()) {
		State cursor = id.at(r.lhs);
		const State end = r.target ? id.at(*r.target) : final_state;
		if (r.word.empty()) {
			nfa.add_edge(cursor, Nfa::kEpsilon, end);
			continue;
		}
		for (std::size_t i = 0; i < r.word.size(); ++i) {
			const State t = i + 1 == r.word.size() ? end : nfa.add_state();
			nfa.add_symbol_edge(cursor, r.word[i], t);
			cursor = t;
		}
	}
	return nfa;
}

inline Dfa grammar_to_dfa(const RightLinearGrammar& g) { return minimize(nfa_to_dfa(grammar_to_nfa(g))); }

/// Equivalent grammar in regular form: A -> xB, A -> x, and S -> lambda only
/// when S never occurs on a right-hand side.
inline RightLinearGrammar normalize_regular(const RightLinearGrammar& g) {
	std::set<std::string> names = g.nonterminals();
	std::size_t counter = 0;
	auto fresh = [&] {
		std::string n;
		do {
			n = "N" + std::to_string(++counter);
		} while (names.count(n));
		names.insert(n);
		return n;
	};

	// 1. split words longer than one letter
	std::vector<Rule> split;
	for (const auto& r : g.rules()) {
		if (r.word.size() <= 1) {
			split.push_back(r);
			continue;
		}
		std::string cur = r.lhs;
		for (std::size_t i = 0; i + 1 < r.word.size(); ++i) {
			const std::string nxt = fresh();
			split.push_back({cur, Word(1, r.word[i]), nxt});
			cur = nxt;
		}
		split.push_back({cur, Word(1, r.word.back()), r.target});
	}

	// 2. remove unit rules A -> B through their closure
	std::map<std::string, std::set<std::string>> unit;
	for (const auto& n : names) unit[n].insert(n);
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : split) {
			if (!r.word.empty() || !r.target) continue;
			for (auto& [a, reach] : unit) {
				if (reach.count(r.lhs) && !reach.count(*r.target)) {
					reach.insert(*r.target);
					changed = true;
				}
			}
		}
	}
	std::set<Rule> no_unit;
	for (const auto& [a, reach] : unit) {
		for (const auto& r : split) {
			if (r.word.empty() && r.target) continue;
			if (reach.count(r.lhs)) no_unit.insert({a, r.word, r.target});
		}
	}

	// 3. remove lambda rules
	std::set<std::string> nullable;
	for (const auto& r : no_unit) {
		if (r.word.empty()) nullable.insert(r.lhs);
	}
	std::set<Rule> result;
	for (const auto& r : no_unit) {
		if (r.word.empty()) continue;
		result.insert(r);
		if (r.target && nullable.count(*r.target)) result.insert({r.lhs, r.word, std::nullopt});
	}
	std::string start = g.start();
	if (nullable.count(start)) {
		const bool start_on_rhs = std::any_of(result.begin(), result.end(), [&](const Rule& r) { return r.target == start; });
		if (start_on_rhs) {
			const std::string s0 = fresh();
			std::vector<Rule> copies;
			for (const auto& r : result) {
				if (r.lhs == start) copies.push_back({s0, r.word, r.target});
			}
			result.insert(copies.begin(), copies.end());
			start = s0;
		}
		result.insert({start, Word{}, std::nullopt});
	}

	// 4. drop rules into non-terminals that derive no terminal word
	std::set<std::string> productive;
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : result) {
			if ((!r.target || productive.count(*r.target)) && productive.insert(r.lhs).second) changed = true;
		}
	}
	std::erase_if(result, [&](const Rule& r) { return !productive.count(r.lhs) || (r.target && !productive.count(*r.target)); });
	return RightLinearGrammar(g.terminals(), start, std::vector<Rule>(result.begin(), result.end()));
}

/// Regular grammar read off an automaton: one non-terminal per reachable,
/// co-reachable state, `q -> a q'` per transition and `q -> @` per accepting state.
inline RightLinearGrammar dfa_to_grammar(const Dfa& input) {
	const Dfa d = minimize(input);
	const std::vector<bool> live = coreachable(d);
	auto name = [&](State q) { return q == d.initial() ? std::string("S") : "Q" + std::to_string(q); };
	std::vector<Rule> rules;
	if (live[d.initial()]) {
		for (State q = 0; q < d.num_states(); ++q) {
			if (!live[q]) continue;
			if (d.is_accepting(q)) rules.push_back({name(q), Word{}, std::nullopt});
			for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
				const State t = d.next(q, a);
				if (live[t]) rules.push_back({name(q), Word(1, d.alphabet()[a]), name(t)});
			}
		}
	}
	return RightLinearGrammar(d.alphabet(), "S", std::move(rules));
}

} // namespace icg
