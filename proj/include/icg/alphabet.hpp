#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace icg {

/// A letter. Letters are single printable characters drawn from [a-z0-9];
/// upper case is reserved for non-terminals in the grammar text formats.
using Symbol = char;

/// A word is a plain string of letters; the empty string is lambda.
using Word = std::string;

inline bool is_symbol_char(char c) noexcept {
	return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

/// Shortlex order: shorter words first, equal lengths lexicographically.
struct ShortLex {
	bool operator()(const Word& a, const Word& b) const noexcept {
		if (a.size() != b.size()) {
			return a.size() < b.size();
		}
		return a < b;
	}
};

using WordSet = std::set<Word, ShortLex>;

/// Ordered finite set of distinct letters.
class Alphabet {
public:
	Alphabet() { index_.fill(-1); }

	Alphabet(std::initializer_list<Symbol> symbols) : Alphabet(std::string_view(symbols.begin(), symbols.size())) {}

	/// Every character of `symbols` becomes a letter; duplicates collapse.
	explicit Alphabet(std::string_view symbols) {
		index_.fill(-1);
		for (char c : symbols) {
			if (!is_symbol_char(c)) {
				throw DomainError(std::string("invalid letter '") + c + "'");
			}
			symbols_.push_back(c);
		}
		std::sort(symbols_.begin(), symbols_.end());
		symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
		for (std::size_t i = 0; i < symbols_.size(); ++i) {
			index_[static_cast<unsigned char>(symbols_[i])] = static_cast<int>(i);
		}
	}

	/// Accepts "ab", "a,b", "a b" and "{a,b}".
	static Alphabet parse(std::string_view text) {
		std::string letters;
		for (char c : text) {
			if (c == ',' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) {
				continue;
			}
			if (!is_symbol_char(c)) {
				throw DomainError(std::string("invalid letter '") + c + "' in alphabet");
			}
			letters.push_back(c);
		}
		return Alphabet(letters);
	}

	static Alphabet of_word(std::string_view w) { return Alphabet(w); }

	std::size_t size() const noexcept { return symbols_.size(); }
	bool empty() const noexcept { return symbols_.empty(); }
	Symbol operator[](std::size_t i) const { return symbols_[i]; }
	const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
	auto begin() const noexcept { return symbols_.begin(); }
	auto end() const noexcept { return symbols_.end(); }

	/// Position of `c`, or -1 when `c` is not a letter of this alphabet.
	int index_of(Symbol c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
	bool contains(Symbol c) const noexcept { return index_of(c) >= 0; }

	bool contains_word(std::string_view w) const noexcept {
		return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
	}

	bool is_subset_of(const Alphabet& other) const noexcept {
		return std::all_of(symbols_.begin(), symbols_.end(), [&](char c) { return other.contains(c); });
	}

	Alphabet united(const Alphabet& other) const {
		return Alphabet(str() + other.str());
	}

	/// Letters concatenated in order, e.g. "abc".
	std::string str() const { return std::string(symbols_.begin(), symbols_.end()); }

	/// Set notation, e.g. "{a,b,c}".
	std::string to_string() const {
		std::string out = "{";
		for (std::size_t i = 0; i < symbols_.size(); ++i) {
			if (i) out += ',';
			out += symbols_[i];
		}
		return out + "}";
	}

	friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept { return a.symbols_ == b.symbols_; }

private:
	std::vector<Symbol> symbols_;
	std::array<int, 256> index_{};
};

/// Renders lambda as "@" so that empty words stay visible in listings.
inline std::string show_word(const Word& w) { return w.empty() ? std::string("@") : w; }

/// Inverse of show_word.
inline Word read_word(std::string_view token) {
	if (token == "@") {
		return {};
	}
	return Word(token);
}

/// All words over `alphabet` of length at most `max_len`, shortlex order.
inline std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len) {
	std::vector<Word> out{Word{}};
	std::size_t level_begin = 0;
	for (std::size_t len = 1; len <= max_len; ++len) {
		const std::size_t level_end = out.size();
		for (std::size_t i = level_begin; i < level_end; ++i) {
			for (Symbol c : alphabet) {
				out.push_back(out[i] + c);
			}
		}
		level_begin = level_end;
	}
	return out;
}

inline Word power(const Word& w, std::size_t k) {
	Word out;
	out.reserve(w.size() * k);
	for (std::size_t i = 0; i < k; ++i) {
		out += w;
	}
	return out;
}

} // namespace icg
