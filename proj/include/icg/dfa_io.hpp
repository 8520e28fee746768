#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfa.hpp"
#include "text.hpp"

namespace icg {

/// Parses a transition table from pre-split lines:
///
///     alphabet: a b        (may be omitted when `alphabet` is supplied)
///     states: 2
///     initial: 0
///     accepting: 0
///     0: 1 0               (one row per state, one target per letter)
///     1: 0 1
inline Dfa parse_dfa_lines(const std::vector<text::Line>& lines, std::optional<Alphabet> alphabet = std::nullopt) {
	std::optional<std::size_t> states;
	std::optional<State> initial;
	std::vector<State> accepting;
	std::vector<std::optional<std::vector<State>>> rows;
	const text::Line* last = nullptr;
	for (const auto& line : lines) {
		last = &line;
		std::string_view key, value;
		if (!text::key_value(line.content, key, value)) {
			text::fail(line, line.content, "expected 'key: value'");
		}
		if (key == "alphabet") {
			try {
				alphabet = Alphabet::parse(value);
			} catch (const DomainError& e) {
				text::fail(line, value, e.what());
			}
		} else if (key == "states") {
			states = text::parse_number(line, value);
			if (*states == 0) text::fail(line, value, "a complete automaton needs at least one state");
			rows.assign(*states, std::nullopt);
		} else if (key == "initial") {
			initial = static_cast<State>(text::parse_number(line, value));
		} else if (key == "accepting") {
			for (auto tok : text::tokens(value)) {
				if (tok == "-") continue;
				accepting.push_back(static_cast<State>(text::parse_number(line, tok)));
			}
		} else {
			if (!states) text::fail(line, key, "'states:' must precede the transition rows");
			if (!alphabet) text::fail(line, key, "alphabet unknown; add an 'alphabet:' line");
			const std::size_t q = text::parse_number(line, key);
			if (q >= *states) text::fail(line, key, "state " + std::to_string(q) + " out of range");
			if (rows[q]) text::fail(line, key, "duplicate row for state " + std::to_string(q));
			std::vector<State> row;
			const auto toks = text::tokens(value);
			if (toks.size() != alphabet->size()) {
				text::fail(line, value, "row needs " + std::to_string(alphabet->size()) + " targets, got " + std::to_string(toks.size()));
			}
			for (auto tok : toks) {
				const std::size_t t = text::parse_number(line, tok);
				if (t >= *states) text::fail(line, tok, "target " + std::to_string(t) + " out of range");
				row.push_back(static_cast<State>(t));
			}
			rows[q] = std::move(row);
		}
	}
	if (!last) throw ParseError("empty automaton description", 1, 1);
	if (!alphabet) text::fail(*last, last->content, "missing 'alphabet:'");
	if (!states) text::fail(*last, last->content, "missing 'states:'");
	if (!initial) text::fail(*last, last->content, "missing 'initial:'");
	if (*initial >= *states) text::fail(*last, last->content, "initial state out of range");
	std::vector<State> delta;
	for (std::size_t q = 0; q < *states; ++q) {
		if (!rows[q]) text::fail(*last, last->content, "missing row for state " + std::to_string(q) + " (table must be total)");
		delta.insert(delta.end(), rows[q]->begin(), rows[q]->end());
	}
	std::vector<bool> acc(*states, false);
	for (State q : accepting) {
		if (q >= *states) text::fail(*last, last->content, "accepting state " + std::to_string(q) + " out of range");
		acc[q] = true;
	}
	return Dfa(*alphabet, *states, *initial, std::move(delta), std::move(acc));
}

inline Dfa parse_dfa(std::string_view input, std::optional<Alphabet> alphabet = std::nullopt) {
	return parse_dfa_lines(text::lines(input), std::move(alphabet));
}

/// Inverse of parse_dfa. Each line is prefixed with `indent`.
inline std::string dfa_to_string(const Dfa& d, std::string_view indent = "", bool with_alphabet = true) {
	std::string out;
	auto line = [&](const std::string& s) {
		out += indent;
		out += s;
		out += '\n';
	};
	if (with_alphabet) {
		std::string letters;
		for (Symbol c : d.alphabet()) {
			letters += ' ';
			letters += c;
		}
		line("alphabet:" + letters);
	}
	line("states: " + std::to_string(d.num_states()));
	line("initial: " + std::to_string(d.initial()));
	std::string acc = "accepting:";
	bool any = false;
	for (State q = 0; q < d.num_states(); ++q) {
		if (d.is_accepting(q)) {
			acc += ' ' + std::to_string(q);
			any = true;
		}
	}
	line(any ? acc : acc + " -");
	for (State q = 0; q < d.num_states(); ++q) {
		std::string row = std::to_string(q) + ":";
		for (std::size_t a = 0; a < d.alphabet().size(); ++a) row += ' ' + std::to_string(d.next(q, a));
		line(row);
	}
	return out;
}

} // namespace icg
