#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfa_io.hpp"
#include "hierarchy.hpp"
#include "regex.hpp"
#include "resources.hpp"
#include "subregular.hpp"

namespace icg {

struct FamilyEntry {
	FamilyLabel label;
	Verdict verdict = Verdict::unknown;
	std::string evidence;
	std::vector<Witness> witnesses;

	friend bool operator==(const FamilyEntry&, const FamilyEntry&) = default;
};

/// Serializable summary of a ResourceMeasure; the certificate is stored as text
/// (a DFA table for states_Z, a rule list otherwise).
struct MeasureSummary {
	ResourceKind kind = ResourceKind::states_Z;
	std::size_t lower = 0;
	std::size_t upper = 0;
	std::string certificate;
	std::string note;

	friend bool operator==(const MeasureSummary&, const MeasureSummary&) = default;
};

inline MeasureSummary summarize(const ResourceMeasure& m) {
	std::string cert;
	if (m.automaton) cert = dfa_to_string(*m.automaton);
	else if (m.grammar) cert = to_string(*m.grammar);
	return {m.kind, m.lower, m.upper, std::move(cert), m.note};
}

struct FamilyReport {
	std::string language;
	Alphabet alphabet;
	std::vector<FamilyEntry> entries;
	std::vector<MeasureSummary> measures;

	const FamilyEntry* find(const FamilyLabel& f) const {
		for (const auto& e : entries) {
			if (e.label == f) return &e;
		}
		return nullptr;
	}

	Verdict verdict(const FamilyLabel& f) const {
		const FamilyEntry* e = find(f);
		return e ? e->verdict : Verdict::unknown;
	}

	friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

struct ClassifyOptions {
	std::size_t monoid_cap = kDefaultMonoidCap;
	/// Run the grammar searches for RL_V(1..2) and RL_P(1..4).
	bool grammar_measures = true;
	SearchCaps caps;
};

namespace detail {

inline FamilyEntry entry(Family f, const Decision& d) {
	return {FamilyLabel(f), d.holds ? Verdict::yes : Verdict::no, d.evidence, d.witnesses};
}

// Grammar measure with fallbacks to smaller caps when the search space is too
// large; the fallbacks only ever yield upper bounds.
inline std::optional<ResourceMeasure> grammar_measure(const Dfa& m, ResourceKind kind, const SearchCaps& caps) {
	std::vector<SearchCaps> attempts{caps};
	SearchCaps one = caps;
	one.max_nonterminals = 1;
	attempts.push_back(one);
	for (std::size_t rhs = caps.max_rhs_len; rhs-- > 1;) {
		one.max_rhs_len = rhs;
		attempts.push_back(one);
	}
	for (std::size_t i = 0; i < attempts.size(); ++i) {
		try {
			ResourceMeasure r = bounded_min_grammar(m, kind, attempts[i]);
			if (i > 0) {
				r.note += " (caps reduced to " + std::to_string(attempts[i].max_nonterminals) + " non-terminal(s), rhs <= " +
				          std::to_string(attempts[i].max_rhs_len) + ")";
				if (!r.exact()) r.lower = 1;
			}
			return r;
		} catch (const ResourceError&) {
		}
	}
	return std::nullopt;
}

inline std::string label_node(const FamilyLabel& f) {
	return f.is_resource() ? subregular_node(family_name(f.family), f.n) : std::string(family_name(f.family));
}

} // namespace detail

/// Verdicts for every structural family and for REG_Z(1..2), RL_V(1..2),
/// RL_P(1..4), relative to the declared alphabet. Unknown verdicts are
/// resolved through the inclusions of the subregular diagram where possible;
/// a contradiction with the diagram raises InternalError.
inline FamilyReport classify(const Dfa& d, const Alphabet& declared, const Regex* source = nullptr,
                             const ClassifyOptions& opt = {}, std::string language = "") {
	const Dfa m = detail::prepare(d, declared);
	FamilyReport rep{std::move(language), declared, {}, {}};
	auto& es = rep.entries;
	es.push_back(detail::entry(Family::MON, decide_monoidal(m, declared)));
	es.push_back(detail::entry(Family::FIN, decide_finite(m, declared)));
	es.push_back(detail::entry(Family::NIL, decide_nilpotent(m, declared)));
	es.push_back(detail::entry(Family::COMB, decide_combinational(m, declared)));
	es.push_back(detail::entry(Family::DEF, decide_definite(m, declared)));
	es.push_back(detail::entry(Family::SUF, decide_suffix_closed(m, declared)));
	es.push_back(detail::entry(Family::ORD, decide_ordered(m, declared)));
	es.push_back(detail::entry(Family::COMM, decide_commutative(m, declared)));
	es.push_back(detail::entry(Family::CIRC, decide_circular(m, declared)));
	for (Family f : {Family::NC, Family::PS}) {
		try {
			es.push_back(detail::entry(f, f == Family::NC ? decide_noncounting(m, declared, opt.monoid_cap)
			                                              : decide_power_separating(m, declared, opt.monoid_cap)));
		} catch (const ResourceError& e) {
			es.push_back({FamilyLabel(f), Verdict::unknown, e.what(), {}});
		}
	}
	if (source && is_union_free_syntactic(*source)) {
		es.push_back({FamilyLabel(Family::UF), Verdict::yes, "expression " + to_string(*source) + " uses no union", {}});
	} else {
		es.push_back({FamilyLabel(Family::UF), Verdict::unknown,
		              source ? "expression contains a union or the empty set" : "no expression given", {}});
	}
	es.push_back({FamilyLabel(Family::REG), Verdict::yes, "accepted by a finite automaton", {}});

	const ResourceMeasure z = measure_states(m);
	rep.measures.push_back(summarize(z));
	for (unsigned n : {1u, 2u}) {
		const Verdict v = z.within(n);
		es.push_back({FamilyLabel(Family::REG_Z, n), v,
		              "minimal complete automaton has " + std::to_string(z.upper) + " state(s)", {}});
	}

	std::optional<ResourceMeasure> gv, gp;
	if (opt.grammar_measures) {
		gv = detail::grammar_measure(m, ResourceKind::nonterminals_V, opt.caps);
		gp = detail::grammar_measure(m, ResourceKind::rules_P, opt.caps);
		if (gv) rep.measures.push_back(summarize(*gv));
		if (gp) rep.measures.push_back(summarize(*gp));
	}
	auto grammar_entry = [&](Family f, unsigned n, const std::optional<ResourceMeasure>& g) {
		FamilyEntry e{FamilyLabel(f, n), Verdict::unknown, "grammar search not run", {}};
		if (!g) return e;
		if (g->upper <= n) {
			e.verdict = Verdict::yes;
			e.evidence = "generated by " + to_string(*g->grammar);
		} else {
			e.evidence = "no grammar found within the search caps (bounds " + std::to_string(g->lower) + ".." +
			             std::to_string(g->upper) + ")";
		}
		return e;
	};
	for (unsigned n : {1u, 2u}) es.push_back(grammar_entry(Family::RL_V, n, gv));
	for (unsigned n : {1u, 2u, 3u, 4u}) es.push_back(grammar_entry(Family::RL_P, n, gp));

	// resolve unknown verdicts through the diagram, then check consistency
	const HierarchyTable fig = hierarchy(Scope::subregular);
	for (bool changed = true; changed;) {
		changed = false;
		for (auto& x : es) {
			if (x.verdict != Verdict::unknown) continue;
			for (const auto& y : es) {
				if (y.verdict == Verdict::yes && fig.included(detail::label_node(y.label), detail::label_node(x.label))) {
					x.verdict = Verdict::yes;
					x.evidence = "implied by " + to_string(y.label);
				} else if (y.verdict == Verdict::no && fig.included(detail::label_node(x.label), detail::label_node(y.label))) {
					x.verdict = Verdict::no;
					x.evidence = "implied: " + to_string(x.label) + " is contained in " + to_string(y.label) + ", which fails";
					x.witnesses = y.witnesses;
				}
				if (x.verdict != Verdict::unknown) {
					changed = true;
					break;
				}
			}
		}
	}
	for (const auto& x : es) {
		for (const auto& y : es) {
			if (x.verdict == Verdict::yes && y.verdict == Verdict::no &&
			    fig.included(detail::label_node(x.label), detail::label_node(y.label))) {
				throw InternalError("verdicts contradict the inclusion " + to_string(x.label) + " -> " + to_string(y.label) +
				                    " for the language of\n" + dfa_to_string(m));
			}
		}
	}
	return rep;
}

inline nlohmann::ordered_json to_json(const FamilyReport& r) {
	nlohmann::ordered_json j;
	j["language"] = r.language;
	j["alphabet"] = r.alphabet.str();
	auto& fams = j["families"] = nlohmann::ordered_json::array();
	for (const auto& e : r.entries) {
		nlohmann::ordered_json f;
		f["family"] = to_string(e.label);
		f["verdict"] = std::string(to_string(e.verdict));
		f["evidence"] = e.evidence;
		auto& ws = f["witnesses"] = nlohmann::ordered_json::array();
		for (const auto& w : e.witnesses) ws.push_back({{"word", show_word(w.word)}, {"member", w.member}});
		fams.push_back(std::move(f));
	}
	auto& ms = j["measures"] = nlohmann::ordered_json::array();
	for (const auto& m : r.measures) {
		ms.push_back({{"kind", std::string(to_string(m.kind))},
		              {"lower", m.lower},
		              {"upper", m.upper},
		              {"certificate", m.certificate},
		              {"note", m.note}});
	}
	return j;
}

inline FamilyReport report_from_json(const nlohmann::ordered_json& j) {
	try {
		FamilyReport r;
		r.language = j.at("language").get<std::string>();
		r.alphabet = Alphabet::parse(j.at("alphabet").get<std::string>());
		for (const auto& f : j.at("families")) {
			FamilyEntry e{parse_family(f.at("family").get<std::string>()), parse_verdict(f.at("verdict").get<std::string>()),
			              f.at("evidence").get<std::string>(), {}};
			for (const auto& w : f.at("witnesses")) e.witnesses.push_back({read_word(w.at("word").get<std::string>()), w.at("member").get<bool>()});
			r.entries.push_back(std::move(e));
		}
		for (const auto& m : j.at("measures")) {
			r.measures.push_back({parse_resource_kind(m.at("kind").get<std::string>()), m.at("lower").get<std::size_t>(),
			                      m.at("upper").get<std::size_t>(), m.at("certificate").get<std::string>(),
			                      m.at("note").get<std::string>()});
		}
		return r;
	} catch (const nlohmann::json::exception& e) {
		throw ParseError(std::string("malformed report: ") + e.what(), 1, 1);
	}
}

} // namespace icg
