#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace icg::text {

/// One physical line of input with its 1-based number and comment stripped.
struct Line {
	std::size_t number = 0;
	std::size_t indent = 0;
	std::string_view content; // without leading blanks and trailing comment/blanks
};

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

inline std::string_view trim(std::string_view s) {
	while (!s.empty() && (is_blank(s.front()) || s.front() == '\n')) s.remove_prefix(1);
	while (!s.empty() && (is_blank(s.back()) || s.back() == '\n')) s.remove_suffix(1);
	return s;
}

/// Splits into lines, drops `#` comments and blank lines.
inline std::vector<Line> lines(std::string_view input, std::size_t first_line = 1) {
	std::vector<Line> out;
	std::size_t number = first_line;
	while (!input.empty()) {
		const std::size_t nl = input.find('\n');
		std::string_view raw = input.substr(0, nl);
		input = nl == std::string_view::npos ? std::string_view{} : input.substr(nl + 1);
		if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
		std::size_t indent = 0;
		while (indent < raw.size() && is_blank(raw[indent])) ++indent;
		std::string_view content = trim(raw);
		if (!content.empty()) out.push_back({number, indent, content});
		++number;
	}
	return out;
}

/// Splits on blanks.
inline std::vector<std::string_view> tokens(std::string_view s) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < s.size()) {
		while (i < s.size() && is_blank(s[i])) ++i;
		const std::size_t start = i;
		while (i < s.size() && !is_blank(s[i])) ++i;
		if (i > start) out.push_back(s.substr(start, i - start));
	}
	return out;
}

/// For a line "key: value" returns true and fills key/value.
inline bool key_value(std::string_view content, std::string_view& key, std::string_view& value) {
	const std::size_t colon = content.find(':');
	if (colon == std::string_view::npos) return false;
	key = trim(content.substr(0, colon));
	value = trim(content.substr(colon + 1));
	return true;
}

inline std::size_t column_of(const Line& line, std::string_view part) {
	return line.indent + static_cast<std::size_t>(part.data() - line.content.data()) + 1;
}

[[noreturn]] inline void fail(const Line& line, std::string_view part, const std::string& what) {
	throw ParseError(what, line.number, column_of(line, part));
}

inline std::size_t parse_number(const Line& line, std::string_view token) {
	if (token.empty() || token.size() > 9) fail(line, token, "expected a number");
	std::size_t v = 0;
	for (char c : token) {
		if (!std::isdigit(static_cast<unsigned char>(c))) fail(line, token, "expected a number, got '" + std::string(token) + "'");
		v = v * 10 + static_cast<std::size_t>(c - '0');
	}
	return v;
}

} // namespace icg::text
