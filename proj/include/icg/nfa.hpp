#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "regex.hpp"

namespace icg {

using State = std::uint32_t;

/// Nondeterministic automaton with lambda moves. Letters are referred to by
/// their index in the alphabet; kEpsilon labels a lambda move.
class Nfa {
public:
	static constexpr int kEpsilon = -1;

	struct Edge {
		int letter;
		State to;
	};

	explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

	State add_state() {
		edges_.emplace_back();
		accepting_.push_back(false);
		return static_cast<State>(edges_.size() - 1);
	}

	void add_edge(State from, int letter, State to) { edges_.at(from).push_back({letter, to}); }

	void add_symbol_edge(State from, Symbol c, State to) {
		const int idx = alphabet_.index_of(c);
		if (idx < 0) {
			throw DomainError(std::string("letter '") + c + "' not in alphabet " + alphabet_.to_string());
		}
		add_edge(from, idx, to);
	}

	void add_initial(State q) { initial_.push_back(q); }
	void set_accepting(State q, bool value = true) { accepting_.at(q) = value; }

	const Alphabet& alphabet() const noexcept { return alphabet_; }
	std::size_t num_states() const noexcept { return edges_.size(); }
	const std::vector<Edge>& edges(State q) const { return edges_.at(q); }
	const std::vector<State>& initial() const noexcept { return initial_; }
	bool is_accepting(State q) const { return accepting_.at(q); }

private:
	Alphabet alphabet_;
	std::vector<std::vector<Edge>> edges_;
	std::vector<State> initial_;
	std::vector<bool> accepting_;
};

namespace detail {

// Builds a fragment for `r` between fresh states; returns (entry, exit).
inline std::pair<State, State> thompson(Nfa& nfa, const Regex& r) {
	const State in = nfa.add_state();
	const State out = nfa.add_state();
	switch (r.kind) {
	case Regex::Kind::empty_set:
		break;
	case Regex::Kind::empty_word:
		nfa.add_edge(in, Nfa::kEpsilon, out);
		break;
	case Regex::Kind::literal:
		nfa.add_symbol_edge(in, r.symbol, out);
		break;
	case Regex::Kind::concat: {
		State cursor = in;
		for (const auto& c : r.children) {
			auto [ci, co] = thompson(nfa, c);
			nfa.add_edge(cursor, Nfa::kEpsilon, ci);
			cursor = co;
		}
		nfa.add_edge(cursor, Nfa::kEpsilon, out);
		break;
	}
	case Regex::Kind::alt:
		for (const auto& c : r.children) {
			auto [ci, co] = thompson(nfa, c);
			nfa.add_edge(in, Nfa::kEpsilon, ci);
			nfa.add_edge(co, Nfa::kEpsilon, out);
		}
		break;
	case Regex::Kind::star: {
		auto [ci, co] = thompson(nfa, r.children.front());
		nfa.add_edge(in, Nfa::kEpsilon, out);
		nfa.add_edge(in, Nfa::kEpsilon, ci);
		nfa.add_edge(co, Nfa::kEpsilon, ci);
		nfa.add_edge(co, Nfa::kEpsilon, out);
		break;
	}
	}
	return {in, out};
}

} // namespace detail

/// Thompson construction. Throws DomainError if a literal is outside `alphabet`.
inline Nfa regex_to_nfa(const Regex& r, const Alphabet& alphabet) {
	Nfa nfa(alphabet);
	auto [in, out] = detail::thompson(nfa, r);
	nfa.add_initial(in);
	nfa.set_accepting(out);
	return nfa;
}

/// Uses the letters of `r` as alphabet.
inline Nfa regex_to_nfa(const Regex& r) { return regex_to_nfa(r, regex_letters(r)); }

} // namespace icg
