#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "contextual.hpp"
#include "dfa_io.hpp"
#include "text.hpp"

namespace icg {

// Grammar files look like
//
//     alphabet: a b c d e
//     axioms: c
//     pair
//       alphabet: b c
//       regex: b*c
//       contexts: (ab,ab)
//     end
//
// A selection is given by exactly one of `regex: <expr>`, `grammar: <rules>`
// (rules on the same line separated by ';', or on the following indented
// lines) or `dfa:` followed by an indented table. `@` is the empty word and
// `axioms: -` declares no axioms.

namespace detail {

inline std::vector<Context> parse_contexts(const text::Line& line, std::string_view value) {
	std::vector<Context> out;
	std::size_t i = 0;
	while (i < value.size()) {
		if (text::is_blank(value[i]) || value[i] == ',') {
			++i;
			continue;
		}
		if (value[i] != '(') text::fail(line, value.substr(i), "expected '(u,v)'");
		const std::size_t close = value.find(')', i);
		if (close == std::string_view::npos) text::fail(line, value.substr(i), "unclosed context");
		const std::string_view inner = value.substr(i + 1, close - i - 1);
		const std::size_t comma = inner.find(',');
		if (comma == std::string_view::npos) text::fail(line, value.substr(i), "context needs two words '(u,v)'");
		Context c;
		for (int side = 0; side < 2; ++side) {
			const std::string_view part = text::trim(side == 0 ? inner.substr(0, comma) : inner.substr(comma + 1));
			if (part.empty()) text::fail(line, value.substr(i), "empty side in context (write @ for lambda)");
			Word w;
			if (part != "@") {
				for (char ch : part) {
					if (!is_symbol_char(ch)) text::fail(line, part, std::string("unexpected '") + ch + "' in context");
					w.push_back(ch);
				}
			}
			(side == 0 ? c.left : c.right) = std::move(w);
		}
		out.push_back(std::move(c));
		i = close + 1;
	}
	return out;
}

inline WordSet parse_axioms(const text::Line& line, std::string_view value) {
	WordSet out;
	std::string cleaned(value);
	for (char& c : cleaned) {
		if (c == ',') c = ' ';
	}
	const auto toks = text::tokens(cleaned);
	if (toks.size() == 1 && toks.front() == "-") return out;
	for (auto tok : toks) {
		const std::size_t offset = static_cast<std::size_t>(tok.data() - cleaned.data());
		if (tok != "@") {
			for (char c : tok) {
				if (!is_symbol_char(c)) text::fail(line, value.substr(offset), std::string("unexpected '") + c + "' in axiom");
			}
		}
		out.insert(tok == "@" ? Word{} : Word(tok));
	}
	return out;
}

inline Alphabet parse_alphabet_value(const text::Line& line, std::string_view value) {
	try {
		return Alphabet::parse(value);
	} catch (const DomainError& e) {
		text::fail(line, value, e.what());
	}
}

} // namespace detail

inline ContextualGrammar parse_contextual(std::string_view input) {
	const auto ls = text::lines(input);
	ContextualGrammar g;
	bool have_alphabet = false, have_axioms = false;
	std::size_t i = 0;
	while (i < ls.size()) {
		const auto& line = ls[i];
		if (line.content == "pair") {
			const text::Line& head = line;
			++i;
			std::optional<Alphabet> declared;
			std::optional<std::vector<Context>> contexts;
			enum class Kind { none, regex, grammar, dfa } kind = Kind::none;
			Regex regex;
			RightLinearGrammar rules;
			Dfa table;
			bool closed = false;
			while (i < ls.size()) {
				const auto& l = ls[i];
				if (l.content == "end") {
					closed = true;
					++i;
					break;
				}
				std::string_view key, value;
				if (!text::key_value(l.content, key, value)) text::fail(l, l.content, "expected 'key: value' inside pair");
				// indented continuation lines of a grammar or dfa block
				std::vector<text::Line> block;
				std::size_t j = i + 1;
				while (j < ls.size() && ls[j].indent > l.indent && ls[j].content != "end") block.push_back(ls[j++]);
				auto set_kind = [&](Kind k) {
					if (kind != Kind::none) text::fail(l, key, "selection given twice");
					kind = k;
				};
				if (key == "alphabet") {
					if (!block.empty()) text::fail(block.front(), block.front().content, "unexpected indented line");
					declared = detail::parse_alphabet_value(l, value);
				} else if (key == "contexts") {
					if (!block.empty()) text::fail(block.front(), block.front().content, "unexpected indented line");
					auto cs = detail::parse_contexts(l, value);
					if (contexts) contexts->insert(contexts->end(), cs.begin(), cs.end());
					else contexts = std::move(cs);
				} else if (key == "regex") {
					set_kind(Kind::regex);
					try {
						regex = parse_regex(value);
					} catch (const ParseError& e) {
						throw ParseError(std::string(e.what()) + " (in regex)", l.number, text::column_of(l, value));
					}
				} else if (key == "grammar") {
					set_kind(Kind::grammar);
					std::string body(value);
					std::size_t first = l.number;
					if (value.empty()) {
						if (block.empty()) text::fail(l, key, "grammar has no rules");
						first = block.front().number;
						body.clear();
						for (const auto& b : block) body += std::string(b.content) + "\n";
					} else if (!block.empty()) {
						text::fail(block.front(), block.front().content, "unexpected indented line");
					}
					rules = parse_right_linear(body, std::nullopt, first);
				} else if (key == "dfa") {
					set_kind(Kind::dfa);
					if (!value.empty() || block.empty()) text::fail(l, key, "dfa: expects an indented table on the following lines");
					table = parse_dfa_lines(block);
				} else {
					text::fail(l, key, "unknown pair entry '" + std::string(key) + "'");
				}
				i = j;
			}
			if (!closed) text::fail(head, head.content, "pair without 'end'");
			if (!declared) text::fail(head, head.content, "pair needs 'alphabet:'");
			if (!contexts) text::fail(head, head.content, "pair needs 'contexts:'");
			switch (kind) {
			case Kind::none: text::fail(head, head.content, "pair needs a selection (regex:, grammar: or dfa:)");
			case Kind::regex: g.pairs.push_back(SelectionPair::from_regex(*declared, std::move(regex), std::move(*contexts))); break;
			case Kind::grammar: {
				RightLinearGrammar wide(declared->united(rules.terminals()), rules.start(), rules.rules());
				g.pairs.push_back(SelectionPair::from_grammar(*declared, std::move(wide), std::move(*contexts)));
				break;
			}
			case Kind::dfa: g.pairs.push_back(SelectionPair::from_dfa(*declared, table, std::move(*contexts))); break;
			}
			continue;
		}
		std::string_view key, value;
		if (!text::key_value(line.content, key, value)) text::fail(line, line.content, "expected 'alphabet:', 'axioms:' or 'pair'");
		if (key == "alphabet") {
			if (have_alphabet) text::fail(line, key, "duplicate 'alphabet:'");
			g.alphabet = detail::parse_alphabet_value(line, value);
			have_alphabet = true;
		} else if (key == "axioms") {
			auto more = detail::parse_axioms(line, value);
			g.axioms.insert(more.begin(), more.end());
			have_axioms = true;
		} else {
			text::fail(line, key, "unknown entry '" + std::string(key) + "'");
		}
		++i;
	}
	if (!have_alphabet) throw ParseError("missing 'alphabet:'", 1, 1);
	if (!have_axioms) throw ParseError("missing 'axioms:'", 1, 1);
	return g;
}

inline std::string to_string(const ContextualGrammar& g) {
	auto spaced = [](const Alphabet& a) {
		std::string s;
		for (Symbol c : a) {
			if (!s.empty()) s += ' ';
			s += c;
		}
		return s;
	};
	std::string out = "alphabet: " + spaced(g.alphabet) + "\naxioms:";
	if (g.axioms.empty()) out += " -";
	for (const auto& a : g.axioms) out += " " + show_word(a);
	out += "\n";
	for (const auto& p : g.pairs) {
		out += "pair\n  alphabet: " + spaced(p.declared) + "\n";
		if (p.regex) {
			out += "  regex: " + to_string(*p.regex) + "\n";
		} else if (p.grammar) {
			out += "  grammar: " + to_string(*p.grammar) + "\n";
		} else {
			out += "  dfa:\n" + dfa_to_string(p.selection, "    ", true);
		}
		out += "  contexts:";
		for (const auto& c : p.contexts) out += " " + to_string(c);
		out += "\nend\n";
	}
	return out;
}

inline ContextualGrammar load_contextual(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw Error("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_contextual(ss.str());
}

} // namespace icg
