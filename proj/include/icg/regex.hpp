#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"

namespace icg {

/// Regular expression tree. Union and concatenation nodes always carry at
/// least two children; the factory functions flatten and collapse as needed.
struct Regex {
	enum class Kind { empty_set, empty_word, literal, concat, alt, star };

	Kind kind = Kind::empty_set;
	Symbol symbol = 0;
	std::vector<Regex> children;

	static Regex empty_set() { return Regex{}; }
	static Regex empty_word() { return Regex{Kind::empty_word, 0, {}}; }
	static Regex lit(Symbol c) { return Regex{Kind::literal, c, {}}; }

	static Regex concat(std::vector<Regex> parts) { return nary(Kind::concat, std::move(parts), empty_word()); }
	static Regex alt(std::vector<Regex> parts) { return nary(Kind::alt, std::move(parts), empty_set()); }
	static Regex star(Regex child) { return Regex{Kind::star, 0, {std::move(child)}}; }

	/// Concatenation of the letters of `w` (lambda for the empty word).
	static Regex word(std::string_view w) {
		std::vector<Regex> parts;
		for (char c : w) parts.push_back(lit(c));
		return concat(std::move(parts));
	}

	/// Number of nodes in the tree.
	std::size_t size() const {
		std::size_t n = 1;
		for (const auto& c : children) n += c.size();
		return n;
	}

	friend bool operator==(const Regex&, const Regex&) = default;

private:
	static Regex nary(Kind kind, std::vector<Regex> parts, Regex neutral) {
		std::vector<Regex> flat;
		for (auto& p : parts) {
			if (p.kind == kind) {
				for (auto& c : p.children) flat.push_back(std::move(c));
			} else {
				flat.push_back(std::move(p));
			}
		}
		if (flat.empty()) return neutral;
		if (flat.size() == 1) return std::move(flat.front());
		return Regex{kind, 0, std::move(flat)};
	}
};

/// Letters occurring in the expression.
inline Alphabet regex_letters(const Regex& r) {
	std::string letters;
	auto walk = [&](auto&& self, const Regex& node) -> void {
		if (node.kind == Regex::Kind::literal) letters.push_back(node.symbol);
		for (const auto& c : node.children) self(self, c);
	};
	walk(walk, r);
	return Alphabet(letters);
}

namespace detail {

class RegexParser {
public:
	explicit RegexParser(std::string_view text) : text_(text) {}

	Regex parse() {
		skip_space();
		if (at_end()) {
			throw error("empty expression");
		}
		Regex r = parse_alt();
		skip_space();
		if (!at_end()) {
			throw error(std::string("unexpected '") + text_[pos_] + "'");
		}
		return r;
	}

private:
	// alt := concat ('|' concat)*
	Regex parse_alt() {
		std::vector<Regex> parts{parse_concat()};
		skip_space();
		while (!at_end() && text_[pos_] == '|') {
			++pos_;
			parts.push_back(parse_concat());
			skip_space();
		}
		return Regex::alt(std::move(parts));
	}

	// concat := postfix+
	Regex parse_concat() {
		std::vector<Regex> parts;
		for (;;) {
			skip_space();
			if (at_end() || text_[pos_] == '|' || text_[pos_] == ')') break;
			parts.push_back(parse_postfix());
		}
		if (parts.empty()) {
			throw error("expected an expression");
		}
		return Regex::concat(std::move(parts));
	}

	Regex parse_postfix() {
		Regex r = parse_atom();
		skip_space();
		while (!at_end() && text_[pos_] == '*') {
			++pos_;
			r = Regex::star(std::move(r));
			skip_space();
		}
		return r;
	}

	Regex parse_atom() {
		const char c = text_[pos_];
		if (text_.substr(pos_).starts_with(kEmptySet)) {
			pos_ += kEmptySet.size();
			return Regex::empty_set();
		}
		if (c == '@') {
			++pos_;
			return Regex::empty_word();
		}
		if (c == '(') {
			const std::size_t open = pos_++;
			skip_space();
			if (!at_end() && text_[pos_] == ')') {
				++pos_;
				return Regex::empty_word();
			}
			Regex inner = parse_alt();
			skip_space();
			if (at_end() || text_[pos_] != ')') {
				pos_ = open;
				throw error("unbalanced '('");
			}
			++pos_;
			return inner;
		}
		if (is_symbol_char(c)) {
			++pos_;
			return Regex::lit(c);
		}
		throw error(std::string("unexpected '") + c + "'");
	}

	void skip_space() {
		while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
	}

	bool at_end() const { return pos_ >= text_.size(); }

	ParseError error(const std::string& what) const {
		std::size_t line = 1, column = 1;
		for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
			if (text_[i] == '\n') {
				++line;
				column = 1;
			} else {
				++column;
			}
		}
		return ParseError(what, line, column);
	}

	static constexpr std::string_view kEmptySet = "\xE2\x88\x85"; // U+2205

	std::string_view text_;
	std::size_t pos_ = 0;
};

inline int precedence(const Regex& r) {
	switch (r.kind) {
	case Regex::Kind::alt: return 0;
	case Regex::Kind::concat: return 1;
	case Regex::Kind::star: return 2;
	default: return 3;
	}
}

inline void print_regex(const Regex& r, std::string& out) {
	auto child = [&](const Regex& c, int min_prec) {
		if (precedence(c) < min_prec) {
			out += '(';
			print_regex(c, out);
			out += ')';
		} else {
			print_regex(c, out);
		}
	};
	switch (r.kind) {
	case Regex::Kind::empty_set: out += "\xE2\x88\x85"; break;
	case Regex::Kind::empty_word: out += "()"; break;
	case Regex::Kind::literal: out += r.symbol; break;
	case Regex::Kind::concat:
		for (const auto& c : r.children) child(c, 2);
		break;
	case Regex::Kind::alt:
		for (std::size_t i = 0; i < r.children.size(); ++i) {
			if (i) out += '|';
			child(r.children[i], 1);
		}
		break;
	case Regex::Kind::star:
		child(r.children.front(), 3);
		out += '*';
		break;
	}
}

} // namespace detail

/// Parses `|`, juxtaposition, postfix `*`, parentheses, `()` or `@` for lambda
/// and `∅` for the empty language. Blanks are ignored.
inline Regex parse_regex(std::string_view text) {
	return detail::RegexParser(text).parse();
}

/// Parses and additionally requires every literal to belong to `alphabet`.
inline Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
	Regex r = parse_regex(text);
	for (std::size_t i = 0; i < text.size(); ++i) {
		if (is_symbol_char(text[i]) && !alphabet.contains(text[i])) {
			throw ParseError(std::string("letter '") + text[i] + "' not in alphabet " + alphabet.to_string(), 1, i + 1);
		}
	}
	return r;
}

/// Inverse of parse_regex up to redundant parentheses.
inline std::string to_string(const Regex& r) {
	std::string out;
	detail::print_regex(r, out);
	return out;
}

} // namespace icg
