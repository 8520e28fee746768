#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "dfa.hpp"
#include "regex.hpp"
#include "resources.hpp"
#include "right_linear.hpp"
#include "subregular.hpp"

namespace icg {

/// A context (u, v); derivations wrap u and v around a selected subword.
struct Context {
	Word left;
	Word right;

	bool empty() const noexcept { return left.empty() && right.empty(); }
	std::size_t size() const noexcept { return left.size() + right.size(); }

	friend auto operator<=>(const Context&, const Context&) = default;
};

inline std::string to_string(const Context& c) { return "(" + show_word(c.left) + "," + show_word(c.right) + ")"; }

/// Selection language with its declared alphabet U and its contexts. The
/// automaton is kept minimal; the expression or grammar it came from, if any,
/// is retained for union-freeness and resource certificates.
struct SelectionPair {
	Alphabet declared;
	Dfa selection;
	std::optional<Regex> regex;
	std::optional<RightLinearGrammar> grammar;
	std::vector<Context> contexts;

	// The automaton is built over U plus any stray letters of the source, so
	// that validate() can report them instead of construction failing.
	static SelectionPair from_regex(Alphabet u, Regex r, std::vector<Context> cs) {
		const Alphabet over = u.united(regex_letters(r));
		Dfa d = regex_to_dfa(r, over);
		return make(std::move(u), std::move(d), std::move(r), std::nullopt, std::move(cs));
	}

	static SelectionPair from_grammar(Alphabet u, RightLinearGrammar g, std::vector<Context> cs) {
		const Alphabet over = u.united(g.terminals());
		RightLinearGrammar wide(over, g.start(), g.rules());
		Dfa d = grammar_to_dfa(wide);
		return make(std::move(u), std::move(d), std::nullopt, std::move(g), std::move(cs));
	}

	static SelectionPair from_dfa(Alphabet u, const Dfa& d, std::vector<Context> cs) {
		return make(std::move(u), minimize(d), std::nullopt, std::nullopt, std::move(cs));
	}

	bool selects(std::string_view w) const {
		if (!selection.alphabet().contains_word(w)) return false;
		return accepts(selection, w);
	}

	friend bool operator==(const SelectionPair&, const SelectionPair&) = default;

private:
	static SelectionPair make(Alphabet u, Dfa d, std::optional<Regex> r, std::optional<RightLinearGrammar> g,
	                          std::vector<Context> cs) {
		std::sort(cs.begin(), cs.end());
		cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
		return {std::move(u), std::move(d), std::move(r), std::move(g), std::move(cs)};
	}
};

struct ContextualGrammar {
	Alphabet alphabet;
	std::vector<SelectionPair> pairs;
	WordSet axioms;

	friend bool operator==(const ContextualGrammar&, const ContextualGrammar&) = default;
};

/// One diagnostic per violated structural constraint; empty means valid.
inline std::vector<std::string> validate(const ContextualGrammar& g) {
	std::vector<std::string> out;
	if (g.alphabet.empty()) out.push_back("grammar alphabet is empty");
	for (const auto& a : g.axioms) {
		if (!g.alphabet.contains_word(a)) out.push_back("axiom '" + show_word(a) + "' uses a letter outside " + g.alphabet.to_string());
	}
	for (std::size_t i = 0; i < g.pairs.size(); ++i) {
		const auto& p = g.pairs[i];
		const std::string at = "pair " + std::to_string(i + 1) + ": ";
		if (p.declared.empty()) out.push_back(at + "declared alphabet is empty");
		if (!p.declared.is_subset_of(g.alphabet)) {
			out.push_back(at + "declared alphabet " + p.declared.to_string() + " is not contained in " + g.alphabet.to_string());
		}
		if (!(p.selection.alphabet() == p.declared)) {
			out.push_back(at + "selection uses letters " + p.selection.alphabet().to_string() + " outside the declared alphabet " +
			              p.declared.to_string());
		}
		if (p.contexts.empty()) out.push_back(at + "no contexts");
		for (const auto& c : p.contexts) {
			if (c.empty()) out.push_back(at + "empty context");
			if (!g.alphabet.contains_word(c.left) || !g.alphabet.contains_word(c.right)) {
				out.push_back(at + "context " + to_string(c) + " uses a letter outside " + g.alphabet.to_string());
			}
		}
	}
	return out;
}

inline void require_valid(const ContextualGrammar& g) {
	const auto diags = validate(g);
	if (!diags.empty()) throw DomainError("invalid contextual grammar: " + diags.front());
}

/// x1 x2 x3 => x1 u x2 v x3 using pair `pair` and context (u, v).
struct DerivationStep {
	Word source;
	std::size_t x1_len = 0;
	std::size_t x2_len = 0;
	std::size_t pair = 0;
	Context context;
	Word target;

	Word x1() const { return source.substr(0, x1_len); }
	Word x2() const { return source.substr(x1_len, x2_len); }
	Word x3() const { return source.substr(x1_len + x2_len); }

	friend auto operator<=>(const DerivationStep&, const DerivationStep&) = default;
};

inline std::string to_string(const DerivationStep& s) {
	return show_word(s.source) + " => " + show_word(s.target) + "  [pair " + std::to_string(s.pair + 1) + ", x2 = " +
	       show_word(s.x2()) + " at " + std::to_string(s.x1_len) + ", context " + to_string(s.context) + "]";
}

/// Every single step from w, over all splits, pairs and contexts, in the order
/// pair, x1 length, x2 length, context.
inline std::vector<DerivationStep> derive_step(const ContextualGrammar& g, const Word& w) {
	std::vector<DerivationStep> out;
	for (std::size_t p = 0; p < g.pairs.size(); ++p) {
		const auto& pair = g.pairs[p];
		const Dfa& d = pair.selection;
		for (std::size_t i = 0; i <= w.size(); ++i) {
			State q = d.initial();
			for (std::size_t j = i;; ++j) {
				if (d.is_accepting(q)) {
					for (const auto& c : pair.contexts) {
						Word t = w.substr(0, i) + c.left + w.substr(i, j - i) + c.right + w.substr(j);
						out.push_back({w, i, j - i, p, c, std::move(t)});
					}
				}
				if (j == w.size()) break;
				const int a = d.alphabet().index_of(w[j]);
				if (a < 0) break;
				q = d.next(q, static_cast<std::size_t>(a));
			}
		}
	}
	return out;
}

/// Distinct targets of derive_step.
inline WordSet successors(const ContextualGrammar& g, const Word& w) {
	WordSet out;
	for (auto& s : derive_step(g, w)) out.insert(std::move(s.target));
	return out;
}

/// Re-applies the step at the same occurrence of x2 inside its own target.
inline std::optional<DerivationStep> reapply(const ContextualGrammar& g, const DerivationStep& s) {
	const std::size_t x1 = s.x1_len + s.context.left.size();
	for (auto& t : derive_step(g, s.target)) {
		if (t.pair == s.pair && t.context == s.context && t.x1_len == x1 && t.x2_len == s.x2_len) return std::move(t);
	}
	return std::nullopt;
}

inline constexpr std::size_t kDefaultFrontierCap = 2'000'000;

/// All words of L(G) up to max_len, by breadth-first closure from the axioms.
inline WordSet enumerate_ic(const ContextualGrammar& g, std::size_t max_len, std::size_t cap = kDefaultFrontierCap) {
	require_valid(g);
	WordSet seen;
	std::vector<Word> frontier;
	for (const auto& a : g.axioms) {
		if (a.size() <= max_len && seen.insert(a).second) frontier.push_back(a);
	}
	while (!frontier.empty()) {
		std::vector<Word> next;
		for (const auto& w : frontier) {
			for (auto& s : derive_step(g, w)) {
				if (s.target.size() > max_len) continue;
				if (seen.insert(s.target).second) {
					if (seen.size() > cap) throw ResourceError("enumeration exceeded " + std::to_string(cap) + " words");
					next.push_back(std::move(s.target));
				}
			}
		}
		frontier = std::move(next);
	}
	return seen;
}

namespace detail {

class MembershipSearch {
public:
	explicit MembershipSearch(const ContextualGrammar& g) : g_(g) {}

	bool member(const Word& w) {
		if (auto it = memo_.find(w); it != memo_.end()) return it->second;
		bool result = g_.axioms.count(w) > 0;
		if (!result) {
			for_each_predecessor(w, [&](DerivationStep s) {
				if (!member(s.source)) return false;
				parent_.emplace(w, std::move(s));
				return true;
			});
			result = parent_.count(w) > 0;
		}
		memo_.emplace(w, result);
		return result;
	}

	/// Steps from an axiom to w; w must be a member.
	std::vector<DerivationStep> trace(const Word& w) const {
		std::vector<DerivationStep> out;
		Word cur = w;
		while (!g_.axioms.count(cur)) {
			const DerivationStep& s = parent_.at(cur);
			out.push_back(s);
			cur = s.source;
		}
		std::reverse(out.begin(), out.end());
		return out;
	}

private:
	// Calls visit(step) for each way of reading w as x1 u x2 v x3 with x2
	// selected, until visit returns true.
	template <typename Visit>
	void for_each_predecessor(const Word& w, Visit visit) const {
		for (std::size_t p = 0; p < g_.pairs.size(); ++p) {
			const auto& pair = g_.pairs[p];
			const Dfa& d = pair.selection;
			for (const auto& c : pair.contexts) {
				const std::size_t lu = c.left.size();
				const std::size_t lv = c.right.size();
				if (lu + lv > w.size()) continue;
				for (std::size_t i = 0; i + lu + lv <= w.size(); ++i) {
					if (w.compare(i, lu, c.left) != 0) continue;
					State q = d.initial();
					for (std::size_t j = i + lu;; ++j) {
						if (j + lv > w.size()) break;
						if (d.is_accepting(q) && w.compare(j, lv, c.right) == 0) {
							Word src = w.substr(0, i) + w.substr(i + lu, j - i - lu) + w.substr(j + lv);
							DerivationStep s{std::move(src), i, j - i - lu, p, c, w};
							if (visit(std::move(s))) return;
						}
						if (j == w.size()) break;
						const int a = d.alphabet().index_of(w[j]);
						if (a < 0) break;
						q = d.next(q, static_cast<std::size_t>(a));
					}
				}
			}
		}
	}

	const ContextualGrammar& g_;
	std::unordered_map<Word, bool> memo_;
	std::unordered_map<Word, DerivationStep> parent_;
};

} // namespace detail

/// Exact membership by searching predecessors, which are strictly shorter.
/// When `trace` is given and w is a member, it receives a derivation from an
/// axiom, each step of which is also produced by derive_step.
inline bool member_ic(const ContextualGrammar& g, const Word& w, std::vector<DerivationStep>* trace = nullptr) {
	require_valid(g);
	detail::MembershipSearch search(g);
	const bool ok = search.member(w);
	if (ok && trace) *trace = search.trace(w);
	return ok;
}

/// Verdict of one family for all selections of a grammar, with the verdict
/// and evidence of each pair.
struct SelectionVerdict {
	Verdict verdict = Verdict::yes;
	std::vector<FamilyEntry> pairs;
};

/// Verdict of a family for one selection language relative to its declared
/// alphabet. Source grammars count as certificates for RL_V and RL_P.
inline FamilyEntry pair_in_family(const SelectionPair& p, const FamilyLabel& f, const ClassifyOptions& opt = {}) {
	ClassifyOptions o = opt;
	o.grammar_measures = opt.grammar_measures && (f.family == Family::RL_V || f.family == Family::RL_P || f.family == Family::UF);
	const FamilyReport rep = classify(p.selection, p.declared, p.regex ? &*p.regex : nullptr, o);
	const auto* v = rep.find(FamilyLabel(Family::RL_V, 2));
	const std::size_t states = rep.measures.front().upper;
	auto measure_upper = [&](ResourceKind k) -> std::optional<std::size_t> {
		for (const auto& m : rep.measures) {
			if (m.kind == k) return m.upper;
		}
		return std::nullopt;
	};
	if (p.grammar && (f.family == Family::RL_V || f.family == Family::RL_P)) {
		const ResourceCount rc = count_resources(*p.grammar);
		const std::size_t have = f.family == Family::RL_V ? rc.nonterminals : rc.rules;
		if (have <= f.n) return {f, Verdict::yes, "source grammar " + to_string(*p.grammar), {}};
	}
	if (const auto* e = rep.find(f)) return *e;
	// resource bounds beyond the classified range
	switch (f.family) {
	case Family::REG_Z:
		return {f, states <= f.n ? Verdict::yes : Verdict::no,
		        "minimal complete automaton has " + std::to_string(states) + " state(s)", {}};
	case Family::RL_V: {
		if ((v && v->verdict == Verdict::yes) || states <= f.n) return {f, Verdict::yes, "implied by a smaller bound", {}};
		const auto up = measure_upper(ResourceKind::nonterminals_V);
		if (up && *up <= f.n) return {f, Verdict::yes, "grammar certificate with " + std::to_string(*up) + " non-terminal(s)", {}};
		return {f, Verdict::unknown, "no certificate within the search caps", {}};
	}
	case Family::RL_P: {
		const auto up = measure_upper(ResourceKind::rules_P);
		if (up && *up <= f.n) return {f, Verdict::yes, "grammar certificate with " + std::to_string(*up) + " rule(s)", {}};
		return {f, Verdict::unknown, "no certificate within the search caps", {}};
	}
	default: break;
	}
	throw InternalError("family " + to_string(f) + " missing from the classification");
}

inline SelectionVerdict selection_in_family(const ContextualGrammar& g, const FamilyLabel& f, const ClassifyOptions& opt = {}) {
	require_valid(g);
	SelectionVerdict out;
	bool unknown = false;
	for (const auto& p : g.pairs) {
		FamilyEntry e = pair_in_family(p, f, opt);
		if (e.verdict == Verdict::no) out.verdict = Verdict::no;
		if (e.verdict == Verdict::unknown) unknown = true;
		out.pairs.push_back(std::move(e));
	}
	if (out.verdict != Verdict::no && unknown) out.verdict = Verdict::unknown;
	return out;
}

/// Replaces each finite selection S by one pair ({w}, C) per word w of S; each
/// new pair carries the one-rule grammar S -> w.
inline ContextualGrammar split_finite_selection(const ContextualGrammar& g) {
	require_valid(g);
	ContextualGrammar out{g.alphabet, {}, g.axioms};
	for (std::size_t i = 0; i < g.pairs.size(); ++i) {
		const auto& p = g.pairs[i];
		if (!decide_finite(p.selection, p.declared).holds) {
			throw DomainError("pair " + std::to_string(i + 1) + " has an infinite selection language");
		}
		for (const Word& w : enumerate_regular(p.selection, p.selection.num_states())) {
			RightLinearGrammar cert(p.declared, "S", {Rule{"S", w, std::nullopt}});
			out.pairs.push_back(SelectionPair::from_grammar(p.declared, std::move(cert), p.contexts));
		}
	}
	return out;
}

/// Finite sets A and B with S = A u U*B for one selection.
struct DefiniteSplit {
	WordSet finite;
	WordSet suffixes;
};

/// Replaces each selection S = A u U*B by the pairs (A, C) and (U*B, C) with
/// the one-non-terminal grammars {S -> w : w in A} and
/// {S -> xS : x in U} u {S -> w : w in B}. Empty parts are dropped.
inline ContextualGrammar split_definite_selection(const ContextualGrammar& g, const std::vector<DefiniteSplit>& parts) {
	require_valid(g);
	if (parts.size() != g.pairs.size()) throw DomainError("need one decomposition per selection pair");
	ContextualGrammar out{g.alphabet, {}, g.axioms};
	for (std::size_t i = 0; i < g.pairs.size(); ++i) {
		const auto& p = g.pairs[i];
		const auto& [a, b] = parts[i];
		std::vector<Rule> ra, rb;
		for (const Word& w : a) ra.push_back({"S", w, std::nullopt});
		for (Symbol x : p.declared) rb.push_back({"S", Word(1, x), std::string("S")});
		for (const Word& w : b) rb.push_back({"S", w, std::nullopt});
		for (const Word& w : a) {
			if (!p.declared.contains_word(w)) throw DomainError("pair " + std::to_string(i + 1) + ": word '" + w + "' outside U");
		}
		for (const Word& w : b) {
			if (!p.declared.contains_word(w)) throw DomainError("pair " + std::to_string(i + 1) + ": word '" + w + "' outside U");
		}
		RightLinearGrammar ga(p.declared, "S", std::move(ra));
		RightLinearGrammar gb(p.declared, "S", std::move(rb));
		const Dfa both = combine(grammar_to_dfa(ga), grammar_to_dfa(gb), BoolOp::union_);
		if (auto w = shortest_difference(both, p.selection)) {
			throw DomainError("pair " + std::to_string(i + 1) + ": decomposition differs from the selection on '" + show_word(*w) + "'");
		}
		if (!a.empty()) out.pairs.push_back(SelectionPair::from_grammar(p.declared, std::move(ga), p.contexts));
		if (!b.empty()) out.pairs.push_back(SelectionPair::from_grammar(p.declared, std::move(gb), p.contexts));
	}
	return out;
}

/// Same, with decompositions computed from the selection automata.
inline ContextualGrammar split_definite_selection(const ContextualGrammar& g) {
	std::vector<DefiniteSplit> parts;
	for (std::size_t i = 0; i < g.pairs.size(); ++i) {
		auto ab = definite_decomposition(g.pairs[i].selection, g.pairs[i].declared);
		if (!ab) throw DomainError("pair " + std::to_string(i + 1) + " has a selection that is not definite");
		parts.push_back({std::move(ab->first), std::move(ab->second)});
	}
	return split_definite_selection(g, parts);
}

} // namespace icg
