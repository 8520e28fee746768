#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "nfa.hpp"
#include "regex.hpp"

namespace icg {

/// Complete deterministic finite automaton. The transition table is total:
/// every state has exactly one successor per letter.
class Dfa {
public:
	Dfa() : Dfa(Alphabet{}, 1, 0, {}, {false}) {}

	/// `delta` is row-major: delta[q * |alphabet| + i] is the successor of q on letter i.
	Dfa(Alphabet alphabet, std::size_t num_states, State initial, std::vector<State> delta, std::vector<bool> accepting)
		: alphabet_(std::move(alphabet)), num_states_(num_states), initial_(initial), delta_(std::move(delta)),
		  accepting_(std::move(accepting)) {
		if (num_states_ == 0) {
			throw DomainError("a complete automaton needs at least one state");
		}
		if (initial_ >= num_states_) {
			throw DomainError("initial state out of range");
		}
		if (delta_.size() != num_states_ * alphabet_.size()) {
			throw DomainError("transition table is not total");
		}
		if (accepting_.size() != num_states_) {
			throw DomainError("accepting flags do not match the state count");
		}
		for (State t : delta_) {
			if (t >= num_states_) {
				throw DomainError("transition target out of range");
			}
		}
	}

	const Alphabet& alphabet() const noexcept { return alphabet_; }
	std::size_t num_states() const noexcept { return num_states_; }
	State initial() const noexcept { return initial_; }
	bool is_accepting(State q) const { return accepting_[q]; }
	State next(State q, std::size_t letter) const { return delta_[q * alphabet_.size() + letter]; }

	/// Runs `w` from `q`. Throws DomainError on a foreign letter.
	State run(State q, std::string_view w) const {
		for (char c : w) {
			const int idx = alphabet_.index_of(c);
			if (idx < 0) {
				throw DomainError(std::string("letter '") + c + "' not in alphabet " + alphabet_.to_string());
			}
			q = next(q, static_cast<std::size_t>(idx));
		}
		return q;
	}

	/// Same automaton with a different initial state.
	Dfa with_initial(State q) const { return Dfa(alphabet_, num_states_, q, delta_, accepting_); }

	const std::vector<State>& table() const noexcept { return delta_; }
	const std::vector<bool>& accepting() const noexcept { return accepting_; }

	friend bool operator==(const Dfa&, const Dfa&) = default;

private:
	Alphabet alphabet_;
	std::size_t num_states_;
	State initial_;
	std::vector<State> delta_;
	std::vector<bool> accepting_;
};

inline bool accepts(const Dfa& d, std::string_view w) { return d.is_accepting(d.run(d.initial(), w)); }

/// Language of all words over `alphabet`, one accepting state.
inline Dfa universal_dfa(const Alphabet& alphabet) {
	return Dfa(alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {true});
}

/// Empty language, one rejecting state.
inline Dfa empty_dfa(const Alphabet& alphabet) {
	return Dfa(alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {false});
}

inline Dfa complement(const Dfa& d) {
	std::vector<bool> acc(d.num_states());
	for (State q = 0; q < d.num_states(); ++q) acc[q] = !d.is_accepting(q);
	return Dfa(d.alphabet(), d.num_states(), d.initial(), d.table(), std::move(acc));
}

/// Subset construction. The empty subset becomes the sink when it is reachable.
inline Dfa nfa_to_dfa(const Nfa& nfa) {
	const std::size_t k = nfa.alphabet().size();
	auto closure = [&](std::vector<State> set) {
		std::vector<bool> seen(nfa.num_states(), false);
		std::vector<State> stack = set;
		for (State q : set) seen[q] = true;
		while (!stack.empty()) {
			const State q = stack.back();
			stack.pop_back();
			for (const auto& e : nfa.edges(q)) {
				if (e.letter == Nfa::kEpsilon && !seen[e.to]) {
					seen[e.to] = true;
					set.push_back(e.to);
					stack.push_back(e.to);
				}
			}
		}
		std::sort(set.begin(), set.end());
		set.erase(std::unique(set.begin(), set.end()), set.end());
		return set;
	};

	std::map<std::vector<State>, State> ids;
	std::vector<std::vector<State>> subsets;
	std::vector<State> delta;
	std::vector<bool> accepting;
	auto intern = [&](std::vector<State> s) {
		auto [it, inserted] = ids.emplace(s, static_cast<State>(subsets.size()));
		if (inserted) {
			subsets.push_back(std::move(s));
		}
		return it->second;
	};

	intern(closure(nfa.initial()));
	for (std::size_t i = 0; i < subsets.size(); ++i) {
		const std::vector<State> current = subsets[i];
		accepting.push_back(std::any_of(current.begin(), current.end(), [&](State q) { return nfa.is_accepting(q); }));
		for (std::size_t a = 0; a < k; ++a) {
			std::vector<State> target;
			for (State q : current) {
				for (const auto& e : nfa.edges(q)) {
					if (e.letter == static_cast<int>(a)) target.push_back(e.to);
				}
			}
			delta.push_back(intern(closure(std::move(target))));
		}
	}
	return Dfa(nfa.alphabet(), subsets.size(), 0, std::move(delta), std::move(accepting));
}

/// Renumbers the states reachable from the initial state breadth-first,
/// exploring letters in alphabet order; drops everything unreachable.
/// State i is then the i-th state in shortlex order of least access words.
inline Dfa canonical_numbering(const Dfa& d) {
	const std::size_t k = d.alphabet().size();
	std::vector<long> number(d.num_states(), -1);
	std::vector<State> order{d.initial()};
	number[d.initial()] = 0;
	for (std::size_t i = 0; i < order.size(); ++i) {
		for (std::size_t a = 0; a < k; ++a) {
			const State t = d.next(order[i], a);
			if (number[t] < 0) {
				number[t] = static_cast<long>(order.size());
				order.push_back(t);
			}
		}
	}
	std::vector<State> delta;
	std::vector<bool> acc;
	for (State q : order) {
		acc.push_back(d.is_accepting(q));
		for (std::size_t a = 0; a < k; ++a) delta.push_back(static_cast<State>(number[d.next(q, a)]));
	}
	return Dfa(d.alphabet(), order.size(), 0, std::move(delta), std::move(acc));
}

/// Minimal complete automaton in canonical numbering (Moore refinement).
/// Two automata accept the same language iff their minimizations compare equal.
inline Dfa minimize(const Dfa& input) {
	const Dfa d = canonical_numbering(input);
	const std::size_t n = d.num_states();
	const std::size_t k = d.alphabet().size();
	std::vector<std::size_t> cls(n);
	for (State q = 0; q < n; ++q) cls[q] = d.is_accepting(q) ? 1 : 0;
	std::size_t num_classes = 0;
	for (;;) {
		std::map<std::vector<std::size_t>, std::size_t> signature_ids;
		std::vector<std::size_t> next_cls(n);
		for (State q = 0; q < n; ++q) {
			std::vector<std::size_t> sig{cls[q]};
			for (std::size_t a = 0; a < k; ++a) sig.push_back(cls[d.next(q, a)]);
			next_cls[q] = signature_ids.emplace(std::move(sig), signature_ids.size()).first->second;
		}
		const std::size_t count = signature_ids.size();
		cls = std::move(next_cls);
		if (count == num_classes) break;
		num_classes = count;
	}
	std::vector<State> delta(num_classes * k);
	std::vector<bool> acc(num_classes);
	for (State q = 0; q < n; ++q) {
		acc[cls[q]] = d.is_accepting(q);
		for (std::size_t a = 0; a < k; ++a) delta[cls[q] * k + a] = static_cast<State>(cls[d.next(q, a)]);
	}
	return canonical_numbering(Dfa(d.alphabet(), num_classes, static_cast<State>(cls[d.initial()]), std::move(delta), std::move(acc)));
}

/// regex -> NFA -> DFA -> minimal DFA.
inline Dfa regex_to_dfa(const Regex& r, const Alphabet& alphabet) { return minimize(nfa_to_dfa(regex_to_nfa(r, alphabet))); }

inline Dfa regex_to_dfa(std::string_view text, const Alphabet& alphabet) { return regex_to_dfa(parse_regex(text, alphabet), alphabet); }

inline void require_same_alphabet(const Dfa& a, const Dfa& b) {
	if (!(a.alphabet() == b.alphabet())) {
		throw AlphabetMismatch("alphabets differ: " + a.alphabet().to_string() + " vs " + b.alphabet().to_string());
	}
}

enum class BoolOp { union_, intersection, difference, symmetric_difference };

/// Product automaton restricted to reachable pairs.
inline Dfa combine(const Dfa& a, const Dfa& b, BoolOp op) {
	require_same_alphabet(a, b);
	const std::size_t k = a.alphabet().size();
	std::map<std::pair<State, State>, State> ids;
	std::vector<std::pair<State, State>> pairs;
	auto intern = [&](std::pair<State, State> p) {
		auto [it, inserted] = ids.emplace(p, static_cast<State>(pairs.size()));
		if (inserted) pairs.push_back(p);
		return it->second;
	};
	intern({a.initial(), b.initial()});
	std::vector<State> delta;
	std::vector<bool> acc;
	for (std::size_t i = 0; i < pairs.size(); ++i) {
		const auto [p, q] = pairs[i];
		const bool x = a.is_accepting(p), y = b.is_accepting(q);
		switch (op) {
		case BoolOp::union_: acc.push_back(x || y); break;
		case BoolOp::intersection: acc.push_back(x && y); break;
		case BoolOp::difference: acc.push_back(x && !y); break;
		case BoolOp::symmetric_difference: acc.push_back(x != y); break;
		}
		for (std::size_t c = 0; c < k; ++c) delta.push_back(intern({a.next(p, c), b.next(q, c)}));
	}
	return Dfa(a.alphabet(), pairs.size(), 0, std::move(delta), std::move(acc));
}

/// Shortlex-least word leading from `from` to a state satisfying `goal`.
template <typename Goal>
std::optional<Word> shortest_word_to(const Dfa& d, State from, Goal goal) {
	const std::size_t k = d.alphabet().size();
	std::vector<long> parent(d.num_states(), -2);
	std::vector<int> via(d.num_states(), -1);
	std::deque<State> queue{from};
	parent[from] = -1;
	while (!queue.empty()) {
		const State q = queue.front();
		queue.pop_front();
		if (goal(q)) {
			Word w;
			for (State s = q; parent[s] >= 0; s = static_cast<State>(parent[s])) w.push_back(d.alphabet()[via[s]]);
			std::reverse(w.begin(), w.end());
			return w;
		}
		for (std::size_t a = 0; a < k; ++a) {
			const State t = d.next(q, a);
			if (parent[t] == -2) {
				parent[t] = static_cast<long>(q);
				via[t] = static_cast<int>(a);
				queue.push_back(t);
			}
		}
	}
	return std::nullopt;
}

/// Shortest word in exactly one of the two languages, if any.
inline std::optional<Word> shortest_difference(const Dfa& a, const Dfa& b) {
	const Dfa x = combine(a, b, BoolOp::symmetric_difference);
	return shortest_word_to(x, x.initial(), [&](State q) { return x.is_accepting(q); });
}

inline bool equivalent(const Dfa& a, const Dfa& b) { return !shortest_difference(a, b).has_value(); }

/// Shortest word accepted by `a` but not by `b`.
inline std::optional<Word> inclusion_counterexample(const Dfa& a, const Dfa& b) {
	const Dfa x = combine(a, b, BoolOp::difference);
	return shortest_word_to(x, x.initial(), [&](State q) { return x.is_accepting(q); });
}

inline bool is_subset(const Dfa& a, const Dfa& b) { return !inclusion_counterexample(a, b).has_value(); }

inline bool is_empty_language(const Dfa& d) {
	return !shortest_word_to(d, d.initial(), [&](State q) { return d.is_accepting(q); }).has_value();
}

/// For each state, its shortlex-least access word; nullopt when unreachable.
inline std::vector<std::optional<Word>> access_words(const Dfa& d) {
	std::vector<std::optional<Word>> out(d.num_states());
	out[d.initial()] = Word{};
	std::deque<State> queue{d.initial()};
	while (!queue.empty()) {
		const State q = queue.front();
		queue.pop_front();
		for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
			const State t = d.next(q, a);
			if (!out[t]) {
				out[t] = *out[q] + d.alphabet()[a];
				queue.push_back(t);
			}
		}
	}
	return out;
}

/// States from which some accepting state is reachable.
inline std::vector<bool> coreachable(const Dfa& d) {
	std::vector<bool> live(d.num_states());
	for (State q = 0; q < d.num_states(); ++q) live[q] = d.is_accepting(q);
	for (bool changed = true; changed;) {
		changed = false;
		for (State q = 0; q < d.num_states(); ++q) {
			if (live[q]) continue;
			for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
				if (live[d.next(q, a)]) {
					live[q] = true;
					changed = true;
					break;
				}
			}
		}
	}
	return live;
}

/// Shortest word accepted from exactly one of `p` and `q`.
inline std::optional<Word> distinguishing_suffix(const Dfa& d, State p, State q) {
	return shortest_difference(d.with_initial(p), d.with_initial(q));
}

/// All accepted words of length at most `max_len`.
inline WordSet enumerate_regular(const Dfa& d, std::size_t max_len) {
	WordSet out;
	const std::vector<bool> live = coreachable(d);
	std::vector<std::pair<Word, State>> level{{Word{}, d.initial()}};
	for (std::size_t len = 0; len <= max_len && !level.empty(); ++len) {
		std::vector<std::pair<Word, State>> next;
		for (const auto& [w, q] : level) {
			if (d.is_accepting(q)) out.insert(w);
			if (len == max_len) continue;
			for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
				const State t = d.next(q, a);
				if (live[t]) next.emplace_back(w + d.alphabet()[a], t);
			}
		}
		level = std::move(next);
	}
	return out;
}

/// Minimal automaton for a finite set of words over `alphabet`.
inline Dfa finite_language_dfa(const Alphabet& alphabet, const WordSet& words) {
	std::vector<Regex> parts;
	for (const auto& w : words) {
		if (!alphabet.contains_word(w)) {
			throw DomainError("word '" + w + "' not over " + alphabet.to_string());
		}
		parts.push_back(Regex::word(w));
	}
	return regex_to_dfa(Regex::alt(std::move(parts)), alphabet);
}

/// Same language, read over a larger alphabet: new letters lead to a rejecting sink.
inline Dfa extend_alphabet(const Dfa& d, const Alphabet& wider) {
	if (!d.alphabet().is_subset_of(wider)) {
		throw AlphabetMismatch(d.alphabet().to_string() + " is not contained in " + wider.to_string());
	}
	const std::size_t n = d.num_states();
	const State sink = static_cast<State>(n);
	std::vector<State> delta;
	std::vector<bool> acc = d.accepting();
	acc.push_back(false);
	for (State q = 0; q <= n; ++q) {
		for (Symbol c : wider) {
			const int idx = d.alphabet().index_of(c);
			delta.push_back(q == sink || idx < 0 ? sink : d.next(q, static_cast<std::size_t>(idx)));
		}
	}
	return minimize(Dfa(wider, n + 1, d.initial(), std::move(delta), std::move(acc)));
}

} // namespace icg
