#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfa.hpp"
#include "monoid.hpp"
#include "regex.hpp"

namespace icg {

/// A word together with its claimed membership in the classified language.
struct Witness {
	Word word;
	bool member = false;

	friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of one decision procedure. `witnesses` back a negative answer and
/// can be re-checked with `accepts`.
struct Decision {
	bool holds = false;
	std::string evidence;
	std::vector<Witness> witnesses;

	explicit operator bool() const noexcept { return holds; }
};

namespace detail {

/// Minimal automaton of `d` after checking that it is read over `declared`.
inline Dfa prepare(const Dfa& d, const Alphabet& declared) {
	if (!(d.alphabet() == declared)) {
		throw AlphabetMismatch("automaton over " + d.alphabet().to_string() + " classified relative to " + declared.to_string());
	}
	return minimize(d);
}

inline std::string quote(const Word& w) { return "'" + show_word(w) + "'"; }

inline Witness witness(const Dfa& m, Word w) {
	const bool member = accepts(m, w);
	return {std::move(w), member};
}

/// Some state c among `allowed` with a non-empty word y such that c.y = c.
inline std::optional<std::pair<State, Word>> find_cycle(const Dfa& d, const std::vector<bool>& allowed) {
	const std::size_t n = d.num_states();
	const std::size_t k = d.alphabet().size();
	std::vector<int> colour(n, 0); // 0 new, 1 on stack, 2 done
	std::vector<State> stack_states;
	std::vector<Symbol> stack_letters;
	std::optional<std::pair<State, Word>> found;
	std::function<void(State)> dfs = [&](State q) {
		colour[q] = 1;
		stack_states.push_back(q);
		for (std::size_t a = 0; a < k && !found; ++a) {
			const State t = d.next(q, a);
			if (!allowed[t]) continue;
			if (colour[t] == 1) {
				const auto pos = std::find(stack_states.begin(), stack_states.end(), t) - stack_states.begin();
				Word y(stack_letters.begin() + pos, stack_letters.end());
				y.push_back(d.alphabet()[a]);
				found = std::make_pair(t, std::move(y));
			} else if (colour[t] == 0) {
				stack_letters.push_back(d.alphabet()[a]);
				dfs(t);
				stack_letters.pop_back();
			}
		}
		stack_states.pop_back();
		colour[q] = 2;
	};
	for (State q = 0; q < n && !found; ++q) {
		if (allowed[q] && colour[q] == 0) dfs(q);
	}
	return found;
}

} // namespace detail

/// L = U*.
inline Decision decide_monoidal(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	if (m.num_states() == 1 && m.is_accepting(0)) {
		return {true, "minimal automaton is a single accepting state", {}};
	}
	const Word w = *shortest_word_to(m, m.initial(), [&](State q) { return !m.is_accepting(q); });
	return {false, detail::quote(w) + " is rejected", {{w, false}}};
}

/// L is finite: no cycle through states that are reachable and co-reachable.
inline Decision decide_finite(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	const std::vector<bool> live = coreachable(m);
	const auto cycle = detail::find_cycle(m, live);
	if (!cycle) {
		return {true, "no loop on an accepting path", {}};
	}
	const auto access = access_words(m);
	const auto [c, y] = *cycle;
	const Word z = *shortest_word_to(m, c, [&](State q) { return m.is_accepting(q); });
	Word w = *access[c];
	while (w.size() + z.size() < m.num_states()) w += y;
	w += z;
	return {false,
	        "accepts " + detail::quote(w) + ", longer than the " + std::to_string(m.num_states()) +
	            "-state minimal automaton allows for a finite language",
	        {{w, true}}};
}

/// L or U* \ L is finite.
inline Decision decide_nilpotent(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	Decision fin = decide_finite(m, declared);
	if (fin.holds) return {true, "finite", {}};
	Decision cofin = decide_finite(complement(m), declared);
	if (cofin.holds) return {true, "complement is finite", {}};
	std::vector<Witness> ws = fin.witnesses;
	for (const auto& w : cofin.witnesses) ws.push_back({w.word, false});
	return {false, "both the language and its complement are infinite", std::move(ws)};
}

/// L = U*X with X the set of letters that end some word of L.
inline Decision decide_combinational(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	const std::size_t k = declared.size();
	std::vector<bool> in_x(k, false);
	std::vector<Word> ending(k);
	const auto access = access_words(m);
	for (State q = 0; q < m.num_states(); ++q) {
		for (std::size_t a = 0; a < k; ++a) {
			if (!in_x[a] && m.is_accepting(m.next(q, a))) {
				in_x[a] = true;
				ending[a] = *access[q] + declared[a];
			}
		}
	}
	std::string x = "{";
	std::vector<State> delta;
	for (std::size_t row = 0; row < 2; ++row) {
		for (std::size_t a = 0; a < k; ++a) delta.push_back(in_x[a] ? 1 : 0);
	}
	for (std::size_t a = 0; a < k; ++a) {
		if (!in_x[a]) continue;
		if (x.size() > 1) x += ',';
		x += declared[a];
	}
	x += "}";
	const Dfa target(declared, 2, 0, std::move(delta), {false, true});
	const auto diff = shortest_difference(m, target);
	if (!diff) {
		return {true, "L = U*X with X = " + x, {}};
	}
	if (diff->empty()) {
		return {false, "contains the empty word", {{Word{}, true}}};
	}
	// diff ends in a letter of X but is rejected; `ending` has the same last letter and is accepted
	const std::size_t a = static_cast<std::size_t>(declared.index_of(diff->back()));
	return {false, "membership is not determined by the last letter", {{*diff, false}, {ending[a], true}}};
}

namespace detail {

struct DefiniteAnalysis {
	std::optional<std::pair<std::size_t, Word>> cycle; // pair id p*n+q and a word fixing it
	std::size_t k = 0;
};

// Graph of ordered pairs of distinct states of a minimal automaton: the
// language is definite iff it is acyclic, and k is one more than its longest path.
inline DefiniteAnalysis analyse_definite(const Dfa& m) {
	const std::size_t n = m.num_states();
	const std::size_t k = m.alphabet().size();
	auto id = [n](State p, State q) { return static_cast<std::size_t>(p) * n + q; };
	std::vector<State> delta(n * n * k);
	std::vector<bool> allowed(n * n);
	for (State p = 0; p < n; ++p) {
		for (State q = 0; q < n; ++q) {
			allowed[id(p, q)] = p != q;
			for (std::size_t a = 0; a < k; ++a) delta[id(p, q) * k + a] = static_cast<State>(id(m.next(p, a), m.next(q, a)));
		}
	}
	const Dfa pairs(m.alphabet(), n * n, 0, std::move(delta), std::vector<bool>(n * n, false));
	DefiniteAnalysis out;
	if (auto cycle = find_cycle(pairs, allowed)) {
		out.cycle = std::make_pair(static_cast<std::size_t>(cycle->first), std::move(cycle->second));
		return out;
	}
	std::vector<long> longest(n * n, -1);
	std::function<long(std::size_t)> depth = [&](std::size_t v) -> long {
		if (longest[v] >= 0) return longest[v];
		long best = 0;
		for (std::size_t a = 0; a < k; ++a) {
			const std::size_t t = pairs.next(static_cast<State>(v), a);
			if (allowed[t]) best = std::max(best, 1 + depth(t));
		}
		return longest[v] = best;
	};
	for (std::size_t v = 0; v < n * n; ++v) {
		if (allowed[v]) out.k = std::max(out.k, static_cast<std::size_t>(depth(v) + 1));
	}
	return out;
}

} // namespace detail

/// Membership of every word of length >= k depends only on its last k letters.
inline Decision decide_definite(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	const std::size_t n = m.num_states();
	const detail::DefiniteAnalysis an = detail::analyse_definite(m);
	if (an.cycle) {
		const auto& [pq, c] = *an.cycle;
		const State p = static_cast<State>(pq / n), q = static_cast<State>(pq % n);
		const auto access = access_words(m);
		const Word z = *distinguishing_suffix(m, p, q);
		Word suffix;
		while (suffix.size() + z.size() < n) suffix += c;
		suffix += z;
		Word w1 = *access[p] + suffix, w2 = *access[q] + suffix;
		return {false,
		        detail::quote(w1) + " and " + detail::quote(w2) + " share a suffix of length " + std::to_string(suffix.size()) +
		            " but differ in membership",
		        {detail::witness(m, std::move(w1)), detail::witness(m, std::move(w2))}};
	}
	const std::string k = std::to_string(an.k);
	return {true, "membership of words of length >= " + k + " depends only on the last " + k + " letters", {}};
}

/// When L is definite, the representation L = A ∪ U*B with the fewest words:
/// B holds the words w with U*w ⊆ L none of whose proper suffixes has that
/// property, A the remaining accepted words (all shorter than the degree).
inline std::optional<std::pair<WordSet, WordSet>> definite_decomposition(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	const detail::DefiniteAnalysis an = detail::analyse_definite(m);
	if (an.cycle) return std::nullopt;
	const auto access = access_words(m);
	auto everywhere = [&](const Word& w) {
		for (State q = 0; q < m.num_states(); ++q) {
			if (access[q] && !m.is_accepting(m.run(q, w))) return false;
		}
		return true;
	};
	auto covered = [](const WordSet& b, const Word& w) {
		for (std::size_t i = 0; i <= w.size(); ++i) {
			if (b.count(w.substr(i))) return true;
		}
		return false;
	};
	WordSet a, b;
	for (const Word& w : all_words(declared, an.k)) {
		if (!covered(b, w) && everywhere(w)) b.insert(w);
	}
	for (const Word& w : all_words(declared, an.k)) {
		if (accepts(m, w) && !covered(b, w)) a.insert(w);
	}
	return std::make_pair(std::move(a), std::move(b));
}

/// xy in L implies y in L: the language of every reachable state is contained in L.
inline Decision decide_suffix_closed(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	const auto access = access_words(m);
	for (State q = 0; q < m.num_states(); ++q) {
		if (auto y = inclusion_counterexample(m.with_initial(q), m)) {
			const Word xy = *access[q] + *y;
			return {false, detail::quote(xy) + " is accepted, its suffix " + detail::quote(*y) + " is not", {{xy, true}, {*y, false}}};
		}
	}
	return {true, "every reachable state accepts a subset of L", {}};
}

namespace detail {

// Search for a total order on the states compatible with every letter. The
// search gives up (reporting no order) after `budget` branching steps.
class OrderSearch {
public:
	explicit OrderSearch(const Dfa& d, std::size_t budget = 200000) : d_(d), n_(d.num_states()), budget_(budget), rel_(n_ * n_, 0) {}

	std::optional<std::vector<State>> run() {
		if (!solve(rel_)) return std::nullopt;
		std::vector<State> order(n_);
		for (State q = 0; q < n_; ++q) order[q] = q;
		std::sort(order.begin(), order.end(), [&](State a, State b) { return rel_[a * n_ + b] == 1; });
		return order;
	}

	bool exhausted() const noexcept { return budget_ == 0; }

private:
	// rel[p*n+q]: 0 unknown, 1 p before q, 2 p after q
	bool solve(std::vector<char>& rel) {
		for (State p = 0; p < n_; ++p) {
			for (State q = p + 1; q < n_; ++q) {
				if (rel[p * n_ + q] != 0) continue;
				for (const bool less : {true, false}) {
					if (budget_ == 0) return false;
					--budget_;
					std::vector<char> trial = rel;
					if (assign(trial, less ? p : q, less ? q : p) && solve(trial)) {
						rel = std::move(trial);
						return true;
					}
				}
				return false;
			}
		}
		return true;
	}

	// records p < q and closes under transitivity and letter monotonicity
	bool assign(std::vector<char>& rel, State p0, State q0) const {
		std::vector<std::pair<State, State>> todo{{p0, q0}};
		while (!todo.empty()) {
			const auto [p, q] = todo.back();
			todo.pop_back();
			if (p == q) continue;
			const char cur = rel[p * n_ + q];
			if (cur == 2) return false;
			if (cur == 1) continue;
			rel[p * n_ + q] = 1;
			rel[q * n_ + p] = 2;
			for (std::size_t a = 0; a < d_.alphabet().size(); ++a) {
				const State pa = d_.next(p, a), qa = d_.next(q, a);
				if (pa != qa) todo.emplace_back(pa, qa);
			}
			for (State r = 0; r < n_; ++r) {
				if (rel[r * n_ + p] == 1) todo.emplace_back(r, q);
				if (rel[q * n_ + r] == 1) todo.emplace_back(p, r);
			}
		}
		return true;
	}

	const Dfa& d_;
	std::size_t n_;
	std::size_t budget_;
	std::vector<char> rel_;
};

inline bool is_monotone(const Dfa& d, const std::vector<State>& order) {
	std::vector<std::size_t> rank(order.size());
	for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
	for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
		for (std::size_t i = 0; i + 1 < order.size(); ++i) {
			if (rank[d.next(order[i], a)] > rank[d.next(order[i + 1], a)]) return false;
		}
	}
	return true;
}

// The automaton remembering the last k letters (the whole word while it is
// shorter), or nullopt when it has more than `limit` states.
inline std::optional<Dfa> last_letters_automaton(const Dfa& m, std::size_t k, std::size_t limit) {
	long double count = 0, level = 1;
	for (std::size_t i = 0; i <= k; ++i, level *= static_cast<long double>(m.alphabet().size())) count += level;
	if (count > static_cast<long double>(limit)) return std::nullopt;
	const std::vector<Word> words = all_words(m.alphabet(), k);
	std::map<Word, State> index;
	for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<State>(i));
	std::vector<State> delta;
	std::vector<bool> acc;
	for (const Word& w : words) {
		for (Symbol a : m.alphabet()) {
			Word t = w + a;
			if (t.size() > k) t.erase(0, 1);
			delta.push_back(index.at(t));
		}
		acc.push_back(accepts(m, w));
	}
	return Dfa(m.alphabet(), words.size(), 0, std::move(delta), std::move(acc));
}

// Compare remembered suffixes from their last letter backwards; a missing
// letter (the word was shorter) comes first.
inline std::vector<State> backwards_order(const Dfa& d, std::size_t k) {
	const std::vector<Word> words = all_words(d.alphabet(), k);
	auto key = [&](const Word& w) {
		std::string s(k - w.size(), '\0');
		s += w;
		std::reverse(s.begin(), s.end());
		return s;
	};
	std::vector<State> order(words.size());
	for (State q = 0; q < order.size(); ++q) order[q] = q;
	std::sort(order.begin(), order.end(), [&](State p, State q) { return key(words[p]) < key(words[q]); });
	return order;
}

// Reachable product of m with the automaton remembering the last j letters.
inline Dfa refine_by_suffix(const Dfa& m, std::size_t j) {
	std::map<std::pair<State, Word>, State> index;
	std::vector<std::pair<State, Word>> states{{m.initial(), Word{}}};
	index.emplace(states.front(), 0);
	std::vector<State> delta;
	std::vector<bool> acc;
	for (std::size_t i = 0; i < states.size(); ++i) {
		const auto [q, w] = states[i];
		acc.push_back(m.is_accepting(q));
		for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
			Word t = w + m.alphabet()[a];
			if (t.size() > j) t.erase(0, 1);
			auto key = std::make_pair(m.next(q, a), std::move(t));
			auto [it, fresh] = index.emplace(key, static_cast<State>(states.size()));
			if (fresh) states.push_back(std::move(key));
			delta.push_back(it->second);
		}
	}
	return Dfa(m.alphabet(), states.size(), 0, std::move(delta), std::move(acc));
}

inline std::string chain(const std::vector<State>& order) {
	std::string out;
	for (std::size_t i = 0; i < order.size(); ++i) {
		if (i) out += " < ";
		out += "z" + std::to_string(order[i]);
	}
	return out;
}

inline constexpr std::size_t kMaxRefinement = 2;
inline constexpr std::size_t kMaxRefinedStates = 48;
inline constexpr std::size_t kRefinementBudget = 20000;

} // namespace detail

inline Decision decide_noncounting(const Dfa& d, const Alphabet& declared, std::size_t cap);

/// Some complete automaton for L carries a total order on its states that
/// every letter preserves. Tried in turn: the minimal automaton; for definite
/// languages of degree k, the automaton remembering the last k letters; the
/// minimal automaton refined by the last one or two letters. Ordered languages
/// are non-counting, so a counting language is rejected with word witnesses;
/// otherwise a negative answer means none of the automata above is ordered.
inline Decision decide_ordered(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	detail::OrderSearch search(m);
	if (auto order = search.run()) return {true, "minimal automaton is ordered by " + detail::chain(*order), {}};
	const detail::DefiniteAnalysis an = detail::analyse_definite(m);
	if (!an.cycle) {
		if (auto sk = detail::last_letters_automaton(m, an.k, 100000)) {
			const auto order = detail::backwards_order(*sk, an.k);
			if (detail::is_monotone(*sk, order) && minimize(*sk) == m) {
				return {true,
				        "the automaton remembering the last " + std::to_string(an.k) + " letters (" +
				            std::to_string(sk->num_states()) + " states) is ordered by comparing the remembered suffixes from the end",
				        {}};
			}
			throw InternalError("last-letters automaton failed to be ordered");
		}
	}
	try {
		Decision nc = decide_noncounting(m, declared, kDefaultMonoidCap);
		if (!nc.holds) {
			nc.evidence = "not non-counting, which every ordered language is: " + nc.evidence;
			return nc;
		}
	} catch (const ResourceError&) {
	}
	for (std::size_t j = 1; j <= detail::kMaxRefinement; ++j) {
		const Dfa r = detail::refine_by_suffix(m, j);
		if (r.num_states() > detail::kMaxRefinedStates) break;
		if (auto order = detail::OrderSearch(r, detail::kRefinementBudget).run()) {
			if (!detail::is_monotone(r, *order)) throw InternalError("order search returned a non-monotone order");
			return {true,
			        "the minimal automaton refined by the last " + std::to_string(j) + " letter(s) (" +
			            std::to_string(r.num_states()) + " states) is ordered by " + detail::chain(*order),
			        {}};
		}
	}
	return {false,
	        "no monotone total order on the minimal automaton" + std::string(search.exhausted() ? " (search budget exhausted)" : "") +
	            " or on its refinements by the last " + std::to_string(detail::kMaxRefinement) +
	            " letters; the language is non-counting but not definite (larger automata not searched)",
	        {}};
}

/// For every state q and letters a, b of the minimal automaton, q.ab = q.ba.
inline Decision decide_commutative(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	const auto access = access_words(m);
	const std::size_t k = declared.size();
	for (State q = 0; q < m.num_states(); ++q) {
		for (std::size_t a = 0; a < k; ++a) {
			for (std::size_t b = a + 1; b < k; ++b) {
				const State ab = m.next(m.next(q, a), b), ba = m.next(m.next(q, b), a);
				if (ab == ba) continue;
				const Word z = *distinguishing_suffix(m, ab, ba);
				Word w1 = *access[q] + declared[a] + declared[b] + z;
				Word w2 = *access[q] + declared[b] + declared[a] + z;
				return {false, detail::quote(w1) + " and its permutation " + detail::quote(w2) + " differ in membership",
				        {detail::witness(m, std::move(w1)), detail::witness(m, std::move(w2))}};
			}
		}
	}
	return {true, "adjacent letters commute in every state", {}};
}

/// L contains every cyclic shift of its words. Shifting by one letter
/// generates all shifts, so it suffices that aw in L implies wa in L: the
/// language of the a-successor of the initial state must be contained in
/// { w : wa in L }.
inline Decision decide_circular(const Dfa& d, const Alphabet& declared) {
	const Dfa m = detail::prepare(d, declared);
	for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
		std::vector<bool> before_a(m.num_states());
		for (State q = 0; q < m.num_states(); ++q) before_a[q] = m.is_accepting(m.next(q, a));
		const Dfa after(m.alphabet(), m.num_states(), m.initial(), m.table(), std::move(before_a));
		if (auto w = inclusion_counterexample(m.with_initial(m.next(m.initial(), a)), after)) {
			const Symbol c = m.alphabet()[a];
			Word in = c + *w;
			Word out = *w + c;
			return {false, detail::quote(in) + " is accepted, its shift " + detail::quote(out) + " is not",
			        {{std::move(in), true}, {std::move(out), false}}};
		}
	}
	return {true, "closed under cyclic shifts", {}};
}

/// Every element t of the transition monoid satisfies t^k = t^(k+1).
/// Throws ResourceError when the monoid exceeds `cap`.
inline Decision decide_noncounting(const Dfa& d, const Alphabet& declared, std::size_t cap = kDefaultMonoidCap) {
	const Dfa m = detail::prepare(d, declared);
	const TransitionMonoid mon = transition_monoid(m, cap);
	std::size_t max_index = 0;
	for (std::size_t i = 0; i < mon.size(); ++i) {
		const Transformation& t = mon.element(i);
		std::map<Transformation, std::size_t> seen;
		Transformation cur = t;
		std::size_t step = 1;
		while (!seen.count(cur)) {
			seen.emplace(cur, step++);
			cur = TransitionMonoid::then(cur, t);
		}
		const std::size_t first = seen.at(cur);
		const std::size_t period = step - first;
		if (period == 1) {
			max_index = std::max(max_index, first);
			continue;
		}
		// t^k differs from t^(k+1) for every k >= first
		const std::size_t k = std::max(first, m.num_states());
		const Transformation tk = TransitionMonoid::power(t, k);
		const Transformation tk1 = TransitionMonoid::then(tk, t);
		const auto access = access_words(m);
		for (State p = 0; p < m.num_states(); ++p) {
			if (tk[p] == tk1[p]) continue;
			const Word z = *distinguishing_suffix(m, tk[p], tk1[p]);
			const Word& y = mon.representative(i);
			Word w1 = *access[p] + power(y, k) + z;
			Word w2 = *access[p] + power(y, k + 1) + z;
			return {false,
			        "the transformation of " + detail::quote(y) + " has period " + std::to_string(period) + "; x y^" + std::to_string(k) +
			            " z and x y^" + std::to_string(k + 1) + " z differ for x = " + detail::quote(*access[p]) + ", z = " + detail::quote(z),
			        {detail::witness(m, std::move(w1)), detail::witness(m, std::move(w2))}};
		}
	}
	return {true, "transition monoid of " + std::to_string(mon.size()) + " elements is aperiodic (k = " + std::to_string(std::max<std::size_t>(max_index, 1)) + ")", {}};
}

/// There is m such that for every x the powers x^n, n >= m, are all in L or all outside.
/// For each monoid element the orbit of the initial state is ultimately periodic;
/// acceptance must be constant on its cycle, and m is the largest pre-period.
inline Decision decide_power_separating(const Dfa& d, const Alphabet& declared, std::size_t cap = kDefaultMonoidCap) {
	const Dfa m = detail::prepare(d, declared);
	const TransitionMonoid mon = transition_monoid(m, cap);
	std::size_t bound = 1;
	for (std::size_t i = 0; i < mon.size(); ++i) {
		const Transformation& t = mon.element(i);
		std::vector<long> when(m.num_states(), -1);
		std::vector<State> orbit;
		State s = m.initial();
		while (when[s] < 0) {
			when[s] = static_cast<long>(orbit.size());
			orbit.push_back(s);
			s = t[s];
		}
		const std::size_t pre = static_cast<std::size_t>(when[s]);
		bound = std::max(bound, pre);
		for (std::size_t j = pre; j < orbit.size(); ++j) {
			if (m.is_accepting(orbit[j]) == m.is_accepting(orbit[pre])) continue;
			// shift both exponents beyond the state count
			const std::size_t period = orbit.size() - pre;
			std::size_t e1 = pre, e2 = j;
			while (e1 < m.num_states()) {
				e1 += period;
				e2 += period;
			}
			const Word& x = mon.representative(i);
			Word w1 = power(x, e1), w2 = power(x, e2);
			return {false,
			        "powers of " + detail::quote(x) + " alternate between accepted and rejected forever (period " + std::to_string(period) + ")",
			        {detail::witness(m, std::move(w1)), detail::witness(m, std::move(w2))}};
		}
	}
	return {true, "every power sequence is eventually constant; m = " + std::to_string(bound), {}};
}

/// Syntactic test: `yes` iff the expression uses neither union nor the empty set.
inline bool is_union_free_syntactic(const Regex& r) {
	if (r.kind == Regex::Kind::alt || r.kind == Regex::Kind::empty_set) return false;
	return std::all_of(r.children.begin(), r.children.end(), [](const Regex& c) { return is_union_free_syntactic(c); });
}

inline bool is_monoidal(const Dfa& d, const Alphabet& u) { return decide_monoidal(d, u).holds; }
inline bool is_finite(const Dfa& d, const Alphabet& u) { return decide_finite(d, u).holds; }
inline bool is_nilpotent(const Dfa& d, const Alphabet& u) { return decide_nilpotent(d, u).holds; }
inline bool is_combinational(const Dfa& d, const Alphabet& u) { return decide_combinational(d, u).holds; }
inline bool is_definite(const Dfa& d, const Alphabet& u) { return decide_definite(d, u).holds; }
inline bool is_suffix_closed(const Dfa& d, const Alphabet& u) { return decide_suffix_closed(d, u).holds; }
inline bool is_ordered(const Dfa& d, const Alphabet& u) { return decide_ordered(d, u).holds; }
inline bool is_commutative(const Dfa& d, const Alphabet& u) { return decide_commutative(d, u).holds; }
inline bool is_circular(const Dfa& d, const Alphabet& u) { return decide_circular(d, u).holds; }
inline bool is_noncounting(const Dfa& d, const Alphabet& u, std::size_t cap = kDefaultMonoidCap) { return decide_noncounting(d, u, cap).holds; }
inline bool is_power_separating(const Dfa& d, const Alphabet& u, std::size_t cap = kDefaultMonoidCap) { return decide_power_separating(d, u, cap).holds; }

} // namespace icg
