#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dfa.hpp"
#include "family.hpp"
#include "right_linear.hpp"

namespace icg {

enum class ResourceKind { states_Z, nonterminals_V, rules_P };

inline std::string_view to_string(ResourceKind k) {
	switch (k) {
	case ResourceKind::states_Z: return "states_Z";
	case ResourceKind::nonterminals_V: return "nonterminals_V";
	case ResourceKind::rules_P: return "rules_P";
	}
	return "?";
}

inline ResourceKind parse_resource_kind(std::string_view s) {
	if (s == "states_Z") return ResourceKind::states_Z;
	if (s == "nonterminals_V") return ResourceKind::nonterminals_V;
	if (s == "rules_P") return ResourceKind::rules_P;
	throw DomainError("unknown resource kind '" + std::string(s) + "'");
}

/// Bounds of the exhaustive grammar search.
struct SearchCaps {
	std::size_t max_nonterminals = 2;
	std::size_t max_rules = 4;
	std::size_t max_rhs_len = 3;
	std::size_t check_len = 8;
	/// Upper limit on candidate grammars; larger search spaces raise ResourceError.
	std::size_t max_candidates = 5'000'000;
};

/// Value of a measure: exact when lower == upper. For grammar measures the
/// bounds are relative to the search caps: `lower` = cap + 1 means "no grammar
/// within the caps", and `upper` is witnessed by `grammar`.
struct ResourceMeasure {
	ResourceKind kind = ResourceKind::states_Z;
	std::size_t lower = 0;
	std::size_t upper = 0;
	std::optional<RightLinearGrammar> grammar;
	std::optional<Dfa> automaton;
	std::string note;

	bool exact() const noexcept { return lower == upper; }

	/// yes when the upper bound fits n, no when the lower bound exceeds it.
	Verdict within(std::size_t n) const {
		if (upper <= n) return Verdict::yes;
		if (lower > n) return Verdict::no;
		return Verdict::unknown;
	}
};

/// State count of the minimal complete automaton (sink included).
inline std::size_t min_states(const Dfa& d) { return minimize(d).num_states(); }

inline ResourceMeasure measure_states(const Dfa& d) {
	Dfa m = minimize(d);
	const std::size_t n = m.num_states();
	return {ResourceKind::states_Z, n, n, std::nullopt, std::move(m), "minimal complete automaton"};
}

struct ResourceCount {
	std::size_t nonterminals = 0;
	std::size_t rules = 0;

	friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
};

/// The grammar's own counts; lambda rules count like any other rule.
inline ResourceCount count_resources(const RightLinearGrammar& g) { return {g.nonterminals().size(), g.rules().size()}; }

namespace detail {

// Equivalence of a tiny grammar with a minimal automaton, by exploring the
// product of the subset construction with the automaton. Grammar NFA states
// are bits of a 64-bit mask.
class GrammarChecker {
public:
	explicit GrammarChecker(const Dfa& target) : m_(target), k_(target.alphabet().size()) {}

	bool equivalent(const std::vector<Rule>& rules, const std::vector<std::string>& nts) {
		build(rules, nts);
		if (overflow_) return slow_equivalent(rules, nts);
		struct Item {
			std::uint64_t mask;
			State q;
		};
		std::set<std::pair<std::uint64_t, State>> seen;
		std::deque<Item> queue;
		const Item start{closure(std::uint64_t{1}), m_.initial()};
		queue.push_back(start);
		seen.insert({start.mask, start.q});
		while (!queue.empty()) {
			const Item it = queue.front();
			queue.pop_front();
			const bool acc = (it.mask >> final_) & 1u;
			if (acc != m_.is_accepting(it.q)) return false;
			for (std::size_t a = 0; a < k_; ++a) {
				std::uint64_t nxt = 0;
				for (std::size_t s = 0; s < num_; ++s) {
					if ((it.mask >> s) & 1u) nxt |= step_[s * k_ + a];
				}
				nxt = closure(nxt);
				const State q = m_.next(it.q, a);
				if (seen.insert({nxt, q}).second) queue.push_back({nxt, q});
			}
		}
		return true;
	}

private:
	void build(const std::vector<Rule>& rules, const std::vector<std::string>& nts) {
		overflow_ = false;
		num_ = nts.size() + 1;
		final_ = nts.size();
		std::size_t extra = 0;
		for (const auto& r : rules) extra += r.word.empty() ? 0 : r.word.size() - 1;
		if (num_ + extra > 64) {
			overflow_ = true;
			return;
		}
		step_.assign((num_ + extra) * k_, 0);
		eps_.assign(num_ + extra, 0);
		auto index = [&](const std::string& name) {
			return static_cast<std::size_t>(std::find(nts.begin(), nts.end(), name) - nts.begin());
		};
		for (const auto& r : rules) {
			std::size_t cur = index(r.lhs);
			const std::size_t end = r.target ? index(*r.target) : final_;
			if (r.word.empty()) {
				eps_[cur] |= std::uint64_t{1} << end;
				continue;
			}
			for (std::size_t i = 0; i < r.word.size(); ++i) {
				std::size_t t = end;
				if (i + 1 < r.word.size()) {
					t = num_++;
				}
				const auto a = static_cast<std::size_t>(m_.alphabet().index_of(r.word[i]));
				step_[cur * k_ + a] |= std::uint64_t{1} << t;
				cur = t;
			}
		}
	}

	std::uint64_t closure(std::uint64_t mask) const {
		for (;;) {
			std::uint64_t next = mask;
			for (std::size_t s = 0; s < num_; ++s) {
				if ((mask >> s) & 1u) next |= eps_[s];
			}
			if (next == mask) return mask;
			mask = next;
		}
	}

	bool slow_equivalent(const std::vector<Rule>& rules, const std::vector<std::string>& nts) const {
		return icg::equivalent(grammar_to_dfa(RightLinearGrammar(m_.alphabet(), nts.front(), rules)), m_);
	}

	const Dfa& m_;
	std::size_t k_;
	std::size_t num_ = 0;
	std::size_t final_ = 0;
	bool overflow_ = false;
	std::vector<std::uint64_t> step_;
	std::vector<std::uint64_t> eps_;
};

inline const std::vector<std::string>& nonterminal_names() {
	static const std::vector<std::string> names{"S", "T", "R", "U", "W", "X", "Y", "Z"};
	return names;
}

// Candidate rules for grammars with `count` non-terminals. Rules of the start
// symbol that can never appear in a grammar for L are dropped: S -> w needs w
// in L, and S -> wS needs wL to be contained in L.
inline std::vector<Rule> rule_universe(const Dfa& m, std::size_t count, std::size_t max_rhs_len) {
	const auto& names = nonterminal_names();
	const std::vector<Word> words = all_words(m.alphabet(), max_rhs_len);
	std::vector<Rule> out;
	for (std::size_t l = 0; l < count; ++l) {
		for (const Word& w : words) {
			const bool start = l == 0;
			if (!start || accepts(m, w)) out.push_back({names[l], w, std::nullopt});
			for (std::size_t t = 0; t < count; ++t) {
				if (t == l && w.empty()) continue;
				if (start && t == 0 && !is_subset(m, m.with_initial(m.run(m.initial(), w)))) continue;
				out.push_back({names[l], w, names[t]});
			}
		}
	}
	return out;
}

inline std::size_t binomial_capped(std::size_t n, std::size_t r, std::size_t cap) {
	if (r > n) return 0;
	long double v = 1;
	for (std::size_t i = 1; i <= r; ++i) {
		v = v * static_cast<long double>(n - r + i) / static_cast<long double>(i);
		if (v > static_cast<long double>(cap)) return cap + 1;
	}
	return static_cast<std::size_t>(v + 0.5L);
}

// Every one of the `count` non-terminals occurs on a left side and all but the
// start symbol also as a target of some other non-terminal.
inline bool uses_all(const std::vector<Rule>& rules, std::size_t count) {
	const auto& names = nonterminal_names();
	for (std::size_t i = 0; i < count; ++i) {
		const bool lhs = std::any_of(rules.begin(), rules.end(), [&](const Rule& r) { return r.lhs == names[i]; });
		if (!lhs && !(i == 0 && rules.empty())) return false;
		if (i > 0 && !std::any_of(rules.begin(), rules.end(), [&](const Rule& r) { return r.target == names[i] && r.lhs != names[i]; })) {
			return false;
		}
	}
	return true;
}

// Calls `visit` on every `r`-subset of `universe` until it returns true.
template <typename Visit>
bool for_each_subset(const std::vector<Rule>& universe, std::size_t r, Visit visit) {
	if (r > universe.size()) return false;
	std::vector<std::size_t> idx(r);
	for (std::size_t i = 0; i < r; ++i) idx[i] = i;
	std::vector<Rule> pick(r);
	for (;;) {
		for (std::size_t i = 0; i < r; ++i) pick[i] = universe[idx[i]];
		if (visit(pick)) return true;
		std::size_t i = r;
		while (i > 0 && idx[i - 1] == universe.size() - r + i - 1) --i;
		if (i == 0) return false;
		++idx[i - 1];
		for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
	}
}

// Removes rules one at a time while the language is preserved.
inline std::vector<Rule> greedy_reduce(std::vector<Rule> rules, GrammarChecker& check, const std::vector<std::string>& nts) {
	for (std::size_t i = rules.size(); i-- > 0;) {
		std::vector<Rule> trial = rules;
		trial.erase(trial.begin() + static_cast<long>(i));
		if (check.equivalent(trial, nts)) rules = std::move(trial);
	}
	return rules;
}

// Independent confirmation of a certificate: bounded comparison and full equivalence.
inline bool confirm(const RightLinearGrammar& g, const Dfa& m, std::size_t check_len) {
	const Dfa gd = grammar_to_dfa(g);
	return enumerate_regular(gd, check_len) == enumerate_regular(m, check_len) && icg::equivalent(gd, m);
}

} // namespace detail

/// Smallest number of non-terminals or rules of a right-linear grammar for
/// L(d), by exhaustive search within `caps`. The one-non-terminal level is
/// decided exactly (for right-hand sides up to max_rhs_len) through the
/// largest grammar all of whose rules are sound. Throws ResourceError when the
/// search space exceeds caps.max_candidates.
inline ResourceMeasure bounded_min_grammar(const Dfa& d, ResourceKind kind, const SearchCaps& caps = {}) {
	if (kind == ResourceKind::states_Z) return measure_states(d);
	if (caps.max_nonterminals == 0 || caps.max_nonterminals > detail::nonterminal_names().size()) {
		throw DomainError("max_nonterminals must lie in 1.." + std::to_string(detail::nonterminal_names().size()));
	}
	const Dfa m = minimize(d);
	const Alphabet& u = m.alphabet();
	const auto& names = detail::nonterminal_names();

	std::vector<std::vector<Rule>> universe(caps.max_nonterminals + 1);
	std::size_t total = 0;
	for (std::size_t c = 1; c <= caps.max_nonterminals; ++c) {
		universe[c] = detail::rule_universe(m, c, caps.max_rhs_len);
		for (std::size_t r = 0; r <= caps.max_rules; ++r) {
			total += detail::binomial_capped(universe[c].size(), r, caps.max_candidates);
			if (total > caps.max_candidates) {
				throw ResourceError("grammar search space exceeds " + std::to_string(caps.max_candidates) +
				                    " candidates; lower the caps");
			}
		}
	}

	detail::GrammarChecker check(m);
	auto names_for = [&](std::size_t c) { return std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(c)); };
	auto measure_of = [&](const RightLinearGrammar& g) {
		const ResourceCount rc = count_resources(g);
		return kind == ResourceKind::nonterminals_V ? rc.nonterminals : rc.rules;
	};
	auto finish = [&](std::vector<Rule> rules, std::size_t c, std::string note) {
		RightLinearGrammar g(u, "S", std::move(rules));
		if (!detail::confirm(g, m, caps.check_len)) throw InternalError("grammar certificate failed confirmation");
		const std::size_t v = kind == ResourceKind::nonterminals_V ? c : g.rules().size();
		return ResourceMeasure{kind, v, v, std::move(g), std::nullopt, std::move(note)};
	};

	// exact 1-non-terminal decision through the maximal sound grammar
	const std::vector<std::string> one = names_for(1);
	const bool single = check.equivalent(universe[1], one);

	auto search = [&](std::size_t c, std::size_t r) -> std::optional<std::vector<Rule>> {
		std::optional<std::vector<Rule>> found;
		const auto nts = names_for(c);
		detail::for_each_subset(universe[c], r, [&](const std::vector<Rule>& pick) {
			if (c > 1 && !detail::uses_all(pick, c)) return false;
			if (check.equivalent(pick, nts)) {
				found = pick;
				return true;
			}
			return false;
		});
		return found;
	};

	if (kind == ResourceKind::nonterminals_V) {
		if (single) {
			for (std::size_t r = 0; r <= caps.max_rules; ++r) {
				if (auto rules = search(1, r)) return finish(std::move(*rules), 1, "one non-terminal");
			}
			return finish(detail::greedy_reduce(universe[1], check, one), 1, "one non-terminal (rules reduced greedily)");
		}
		for (std::size_t c = 2; c <= caps.max_nonterminals; ++c) {
			for (std::size_t r = 0; r <= caps.max_rules; ++r) {
				if (auto rules = search(c, r)) return finish(std::move(*rules), c, "exhaustive search within caps");
			}
		}
	} else {
		for (std::size_t r = 0; r <= caps.max_rules; ++r) {
			for (std::size_t c = 1; c <= std::min(caps.max_nonterminals, std::max<std::size_t>(r, 1)); ++c) {
				if (c == 1 && !single) continue;
				if (auto rules = search(c, r)) return finish(std::move(*rules), c, "exhaustive search within caps");
			}
		}
	}

	// nothing within the caps: report an interval with the best certificate known
	RightLinearGrammar best = dfa_to_grammar(m);
	if (single) {
		RightLinearGrammar reduced(u, "S", detail::greedy_reduce(universe[1], check, one));
		if (measure_of(reduced) <= measure_of(best)) best = std::move(reduced);
	}
	const std::size_t upper = measure_of(best);
	const std::size_t cap = kind == ResourceKind::nonterminals_V ? caps.max_nonterminals : caps.max_rules;
	if (!detail::confirm(best, m, caps.check_len)) throw InternalError("grammar certificate failed confirmation");
	return ResourceMeasure{kind, std::min(cap + 1, upper), upper, std::move(best), std::nullopt,
	                       "no grammar within caps; upper bound from certificate"};
}

} // namespace icg
