#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classify.hpp"
#include "contextual.hpp"
#include "dfa_io.hpp"
#include "fixtures.hpp"
#include "grammar_io.hpp"
#include "hierarchy.hpp"
#include "resources.hpp"

namespace icg::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, resource = 3 };

inline constexpr const char* kExitHelp =
    "Exit codes: 0 success, 1 negative answer (non-member, failed check, family verdict no) or internal error,\n"
    "2 usage or parse error, 3 resource limit exceeded.";

struct Options {
	std::string grammar_path;
	std::string regex;
	std::string alphabet;
	std::string dfa_path;
	std::string rules;
	std::string word;
	std::optional<std::size_t> max_len;
	std::string family;
	std::string caps;
	std::string format = "human";
	std::string to = "dfa";
	std::string scope = "merged";
	std::string out_path;
	std::optional<unsigned> n;
	std::string witness = "all";
	bool trace = false;
	bool unique = false;
};

/// "nt=2,rules=4,rhs=3,check=8,candidates=5000000"
inline SearchCaps parse_caps(std::string_view spec) {
	SearchCaps caps;
	std::string s(spec);
	for (char& c : s) {
		if (c == ',') c = ' ';
	}
	for (auto tok : text::tokens(s)) {
		const std::size_t eq = tok.find('=');
		if (eq == std::string_view::npos) throw DomainError("caps entry '" + std::string(tok) + "' is not key=value");
		const std::string_view key = tok.substr(0, eq);
		const std::string value(tok.substr(eq + 1));
		if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 9) {
			throw DomainError("caps value for '" + std::string(key) + "' must be a number");
		}
		const std::size_t v = std::stoul(value);
		if (key == "nt") caps.max_nonterminals = v;
		else if (key == "rules") caps.max_rules = v;
		else if (key == "rhs") caps.max_rhs_len = v;
		else if (key == "check") caps.check_len = v;
		else if (key == "candidates") caps.max_candidates = v;
		else throw DomainError("unknown caps key '" + std::string(key) + "' (nt, rules, rhs, check, candidates)");
	}
	return caps;
}

inline std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw Error("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

/// A regular language given on the command line.
struct Language {
	std::string name;
	Alphabet alphabet;
	Dfa dfa;
	std::optional<Regex> regex;
};

inline bool has_language(const Options& o) { return !o.regex.empty() || !o.dfa_path.empty() || !o.rules.empty(); }

inline Language load_language(const Options& o) {
	const int given = !o.regex.empty() + !o.dfa_path.empty() + !o.rules.empty();
	if (given != 1) throw CLI::ValidationError("give exactly one of --regex, --dfa, --rules");
	std::optional<Alphabet> declared;
	if (!o.alphabet.empty()) declared = Alphabet::parse(o.alphabet);
	if (!o.regex.empty()) {
		Regex r = parse_regex(o.regex);
		const Alphabet u = declared ? *declared : regex_letters(r);
		if (u.empty()) throw CLI::ValidationError("--alphabet is required when the expression has no letters");
		r = parse_regex(o.regex, u);
		Dfa d = regex_to_dfa(r, u);
		return {o.regex, u, std::move(d), std::move(r)};
	}
	if (!o.rules.empty()) {
		RightLinearGrammar g = parse_right_linear(o.rules, declared);
		if (g.terminals().empty()) throw CLI::ValidationError("--alphabet is required when the rules use no letters");
		return {o.rules, g.terminals(), grammar_to_dfa(g), std::nullopt};
	}
	Dfa d = parse_dfa(read_file(o.dfa_path), declared);
	Alphabet u = d.alphabet();
	return {o.dfa_path, std::move(u), std::move(d), std::nullopt};
}

inline ContextualGrammar load_grammar(const Options& o) {
	if (o.grammar_path.empty()) throw CLI::ValidationError("--grammar is required");
	ContextualGrammar g = parse_contextual(read_file(o.grammar_path));
	const auto diags = validate(g);
	if (!diags.empty()) {
		std::string all;
		for (const auto& d : diags) all += "\n  " + d;
		throw DomainError("invalid grammar " + o.grammar_path + ":" + all);
	}
	return g;
}

inline bool machine(const Options& o) { return o.format == "machine"; }

inline void print_report(std::ostream& out, const FamilyReport& r) {
	out << "language " << r.language << " over " << r.alphabet.to_string() << "\n";
	for (const auto& e : r.entries) {
		out << "  " << std::left << std::setw(9) << to_string(e.label) << std::setw(8) << to_string(e.verdict) << e.evidence;
		for (const auto& w : e.witnesses) out << " [" << show_word(w.word) << (w.member ? " in L]" : " not in L]");
		out << "\n";
	}
	for (const auto& m : r.measures) {
		out << "  " << to_string(m.kind) << " = ";
		if (m.lower == m.upper) out << m.lower;
		else out << "[" << m.lower << ", " << m.upper << "]";
		out << " (" << m.note << ")\n";
	}
}

inline void print_family(std::ostream& out, const Options& o, const FamilyLabel& f, const SelectionVerdict& v, bool single) {
	if (machine(o)) {
		nlohmann::ordered_json j{{"family", to_string(f)}, {"verdict", std::string(to_string(v.verdict))}};
		auto& ps = j["parts"] = nlohmann::ordered_json::array();
		for (const auto& e : v.pairs) ps.push_back({{"verdict", std::string(to_string(e.verdict))}, {"evidence", e.evidence}});
		out << j.dump(2) << "\n";
		return;
	}
	out << to_string(f) << ": " << to_string(v.verdict) << "\n";
	for (std::size_t i = 0; i < v.pairs.size(); ++i) {
		out << "  " << (single ? std::string("language") : "pair " + std::to_string(i + 1)) << ": " << to_string(v.pairs[i].verdict)
		    << " (" << v.pairs[i].evidence << ")\n";
	}
}

inline int cmd_classify(const Options& o, std::ostream& out) {
	ClassifyOptions co;
	if (!o.caps.empty()) co.caps = parse_caps(o.caps);
	std::optional<FamilyLabel> only;
	if (!o.family.empty()) only = parse_family(o.family);
	std::vector<FamilyReport> reports;
	const bool single = has_language(o);
	if (single) {
		if (!o.grammar_path.empty()) throw CLI::ValidationError("give a language or --grammar, not both");
		const Language lang = load_language(o);
		if (only) {
			SelectionPair p = lang.regex ? SelectionPair::from_regex(lang.alphabet, *lang.regex, {})
			                             : SelectionPair::from_dfa(lang.alphabet, lang.dfa, {});
			FamilyEntry e = pair_in_family(p, *only, co);
			const SelectionVerdict v{e.verdict, {e}};
			print_family(out, o, *only, v, true);
			return v.verdict == Verdict::no ? negative : ok;
		}
		reports.push_back(classify(lang.dfa, lang.alphabet, lang.regex ? &*lang.regex : nullptr, co, lang.name));
	} else {
		const ContextualGrammar g = load_grammar(o);
		if (only) {
			const SelectionVerdict v = selection_in_family(g, *only, co);
			print_family(out, o, *only, v, false);
			return v.verdict == Verdict::no ? negative : ok;
		}
		for (std::size_t i = 0; i < g.pairs.size(); ++i) {
			const auto& p = g.pairs[i];
			reports.push_back(classify(p.selection, p.declared, p.regex ? &*p.regex : nullptr, co, "pair " + std::to_string(i + 1)));
		}
	}
	if (machine(o)) {
		if (single) {
			out << to_json(reports.front()).dump(2) << "\n";
		} else {
			nlohmann::ordered_json arr = nlohmann::ordered_json::array();
			for (const auto& r : reports) arr.push_back(to_json(r));
			out << arr.dump(2) << "\n";
		}
	} else {
		for (const auto& r : reports) print_report(out, r);
	}
	return ok;
}

inline int cmd_measure(const Options& o, std::ostream& out) {
	const Language lang = load_language(o);
	const SearchCaps caps = o.caps.empty() ? SearchCaps{} : parse_caps(o.caps);
	std::vector<ResourceMeasure> ms;
	ms.push_back(measure_states(lang.dfa));
	ms.push_back(bounded_min_grammar(lang.dfa, ResourceKind::nonterminals_V, caps));
	ms.push_back(bounded_min_grammar(lang.dfa, ResourceKind::rules_P, caps));
	if (machine(o)) {
		nlohmann::ordered_json arr = nlohmann::ordered_json::array();
		for (const auto& m : ms) {
			const MeasureSummary s = summarize(m);
			arr.push_back({{"kind", std::string(to_string(s.kind))},
			               {"lower", s.lower},
			               {"upper", s.upper},
			               {"exact", m.exact()},
			               {"certificate", s.certificate},
			               {"note", s.note}});
		}
		out << arr.dump(2) << "\n";
		return ok;
	}
	for (const auto& m : ms) {
		out << to_string(m.kind) << ": ";
		if (m.exact()) out << m.lower;
		else out << "between " << m.lower << " and " << m.upper;
		out << " (" << m.note << ")\n";
		if (m.automaton) out << dfa_to_string(*m.automaton, "    ");
		if (m.grammar) out << "    " << to_string(*m.grammar) << "\n";
	}
	return ok;
}

inline void print_words(std::ostream& out, const WordSet& ws, bool as_json) {
	if (as_json) {
		nlohmann::ordered_json arr = nlohmann::ordered_json::array();
		for (const auto& w : ws) arr.push_back(show_word(w));
		out << arr.dump() << "\n";
		return;
	}
	for (const auto& w : ws) out << show_word(w) << "\n";
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
	if (!o.max_len) throw CLI::ValidationError("--max-len is required");
	if (has_language(o)) {
		print_words(out, enumerate_regular(load_language(o).dfa, *o.max_len), machine(o));
	} else {
		print_words(out, enumerate_ic(load_grammar(o), *o.max_len), machine(o));
	}
	return ok;
}

inline nlohmann::ordered_json step_json(const DerivationStep& s) {
	return {{"source", show_word(s.source)}, {"x1", show_word(s.x1())}, {"x2", show_word(s.x2())},
	        {"x3", show_word(s.x3())},       {"pair", s.pair + 1},       {"context", to_string(s.context)},
	        {"target", show_word(s.target)}};
}

inline int cmd_member(const Options& o, std::ostream& out) {
	const ContextualGrammar g = load_grammar(o);
	const Word w = read_word(o.word);
	std::vector<DerivationStep> trace;
	const bool in = member_ic(g, w, o.trace ? &trace : nullptr);
	if (machine(o)) {
		nlohmann::ordered_json j{{"word", show_word(w)}, {"member", in}};
		if (o.trace && in) {
			auto& t = j["trace"] = nlohmann::ordered_json::array();
			for (const auto& s : trace) t.push_back(step_json(s));
		}
		out << j.dump(2) << "\n";
	} else {
		out << (in ? "true" : "false") << "\n";
		if (o.trace && in) {
			for (const auto& s : trace) out << "  " << to_string(s) << "\n";
		}
	}
	return in ? ok : negative;
}

inline int cmd_derive(const Options& o, std::ostream& out) {
	const ContextualGrammar g = load_grammar(o);
	const Word w = read_word(o.word);
	if (!g.alphabet.contains_word(w)) throw DomainError("word '" + o.word + "' uses a letter outside " + g.alphabet.to_string());
	const auto steps = derive_step(g, w);
	if (o.unique) {
		print_words(out, successors(g, w), machine(o));
		return ok;
	}
	if (machine(o)) {
		nlohmann::ordered_json arr = nlohmann::ordered_json::array();
		for (const auto& s : steps) arr.push_back(step_json(s));
		out << arr.dump(2) << "\n";
	} else {
		for (const auto& s : steps) out << to_string(s) << "\n";
	}
	return ok;
}

inline std::optional<unsigned> witness_param(const Options& o) { return o.n; }

inline std::size_t default_len(WitnessId id) { return id == WitnessId::L1 ? 12 : 8; }

inline std::string claims_text(const WitnessCase& c) {
	std::string s;
	for (const auto& p : c.positive) s += (s.empty() ? "" : " ") + to_string(p.family);
	std::string neg;
	for (const auto& f : c.negative) neg += (neg.empty() ? "" : " ") + to_string(f);
	return "in IC of: " + s + "; not in IC of: " + neg;
}

inline int cmd_witness_run(const Options& o, std::ostream& out) {
	std::vector<WitnessId> ids;
	if (o.witness == "all") ids.assign(std::begin(kAllWitnesses), std::end(kAllWitnesses));
	else ids.push_back(parse_witness_id(o.witness));
	if (ids.size() > 1 && o.n) throw CLI::ValidationError("--n needs a single witness");
	bool all_ok = true;
	nlohmann::ordered_json arr = nlohmann::ordered_json::array();
	for (WitnessId id : ids) {
		const WitnessCase c = build_witness(id, witness_param(o));
		const WitnessReport r = check_witness(c, o.max_len.value_or(default_len(id)));
		all_ok = all_ok && r.ok();
		if (machine(o)) {
			nlohmann::ordered_json j{{"witness", std::string(to_string(id))}, {"n", r.n}, {"max_len", r.max_len}, {"ok", r.ok()}};
			auto& lines = j["checks"] = nlohmann::ordered_json::array();
			for (const auto& l : r.lines) lines.push_back({{"check", l.name}, {"passed", l.passed}, {"detail", l.detail}});
			arr.push_back(std::move(j));
		} else {
			out << to_string(r);
		}
	}
	if (machine(o)) out << arr.dump(2) << "\n";
	return all_ok ? ok : negative;
}

inline int cmd_witness_list(const Options& o, std::ostream& out) {
	nlohmann::ordered_json arr = nlohmann::ordered_json::array();
	for (WitnessId id : kAllWitnesses) {
		const WitnessCase c = build_witness(id);
		const ParamRange r = param_range(id);
		if (machine(o)) {
			arr.push_back({{"witness", std::string(to_string(id))}, {"n", c.n}, {"claims", claims_text(c)}});
		} else {
			out << to_string(id);
			if (r.max) out << " (n=" << r.min << ".." << r.max << ", default " << r.fallback << ")";
			out << ": " << claims_text(c) << "\n";
		}
	}
	if (machine(o)) out << arr.dump(2) << "\n";
	return ok;
}

inline int cmd_witness_show(const Options& o, std::ostream& out, bool to_file) {
	const WitnessCase c = build_witness(parse_witness_id(o.witness), witness_param(o));
	std::string text = "# " + std::string(to_string(c.id)) + (c.n ? " n=" + std::to_string(c.n) : std::string()) + ", " +
	                   claims_text(c) + "\n" + to_string(c.grammar());
	for (std::size_t i = 1; i < c.grammars.size() && !to_file; ++i) {
		text += "# alternative grammar " + std::to_string(i) + "\n" + to_string(c.grammars[i]);
	}
	if (to_file && !o.out_path.empty()) {
		std::ofstream f(o.out_path, std::ios::binary);
		if (!f) throw Error("cannot write '" + o.out_path + "'");
		f << text;
		out << "wrote " << o.out_path << "\n";
	} else {
		out << text;
	}
	return ok;
}

inline int cmd_witness_hierarchy(const Options& o, std::ostream& out) {
	const HierarchyTable t = hierarchy(parse_scope(o.scope));
	if (machine(o)) {
		nlohmann::ordered_json j{{"scope", std::string(to_string(t.scope()))}};
		j["nodes"] = t.nodes();
		auto& es = j["edges"] = nlohmann::ordered_json::array();
		for (const auto& e : t.edges()) es.push_back({{"from", e.from}, {"to", e.to}, {"status", std::string(to_string(e.status))}});
		out << j.dump(2) << "\n";
		return ok;
	}
	const bool ic = t.scope() != Scope::subregular;
	auto name = [&](const std::string& n) { return ic ? "IC(" + n + ")" : n; };
	out << "hierarchy " << to_string(t.scope()) << ": " << t.nodes().size() << " nodes, " << t.edges().size() << " edges\n";
	for (const auto& e : t.edges()) {
		out << "  " << std::left << std::setw(20) << name(e.from) << " -> " << std::setw(20) << name(e.to) << to_string(e.status) << "\n";
	}
	return ok;
}

inline int cmd_convert(const Options& o, std::ostream& out) {
	if (!has_language(o) && !o.grammar_path.empty()) {
		out << to_string(parse_contextual(read_file(o.grammar_path)));
		return ok;
	}
	const Language lang = load_language(o);
	if (o.to == "dfa") {
		out << dfa_to_string(minimize(lang.dfa));
	} else if (o.to == "grammar") {
		out << to_string(dfa_to_grammar(lang.dfa), "\n") << "\n";
	} else if (o.to == "regular") {
		out << to_string(normalize_regular(dfa_to_grammar(lang.dfa)), "\n") << "\n";
	} else {
		throw CLI::ValidationError("--to must be dfa, grammar or regular");
	}
	return ok;
}

/// Runs one invocation; output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
	CLI::App app{"Internal contextual grammars with subregular selection.", "icg"};
	app.footer(kExitHelp);
	app.require_subcommand(1);
	Options o;

	auto format = [&](CLI::App* c) {
		c->add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"human", "machine"}));
	};
	auto language = [&](CLI::App* c) {
		c->add_option("--regex", o.regex, "Regular expression (| juxtaposition * parentheses, () or @ for the empty word)");
		c->add_option("--dfa", o.dfa_path, "File with a DFA table");
		c->add_option("--rules", o.rules, "Right-linear rules, e.g. \"S -> bS; S -> c\"");
		c->add_option("--alphabet", o.alphabet, "Declared alphabet, e.g. ab or a,b");
	};
	auto grammar = [&](CLI::App* c, bool required) {
		auto* opt = c->add_option("--grammar", o.grammar_path, "Contextual grammar file");
		if (required) opt->required();
	};

	auto* classify_cmd = app.add_subcommand("classify", "Family verdicts of a language or of every selection of a grammar");
	language(classify_cmd);
	grammar(classify_cmd, false);
	classify_cmd->add_option("--family", o.family, "Report only this family, e.g. COMM or RL_V(1)");
	classify_cmd->add_option("--caps", o.caps, "Grammar search caps: nt=2,rules=4,rhs=3,check=8");
	format(classify_cmd);

	auto* measure_cmd = app.add_subcommand("measure", "State, non-terminal and rule complexity");
	language(measure_cmd);
	measure_cmd->add_option("--caps", o.caps, "Grammar search caps: nt=2,rules=4,rhs=3,check=8");
	format(measure_cmd);

	auto* enumerate_cmd = app.add_subcommand("enumerate", "Words up to a length");
	language(enumerate_cmd);
	grammar(enumerate_cmd, false);
	enumerate_cmd->add_option("--max-len", o.max_len, "Length bound")->required();
	format(enumerate_cmd);

	auto* member_cmd = app.add_subcommand("member", "Membership in the language of a contextual grammar");
	grammar(member_cmd, true);
	member_cmd->add_option("--word", o.word, "Word (@ for the empty word)")->required();
	member_cmd->add_flag("--trace", o.trace, "Print a derivation");
	format(member_cmd);

	auto* derive_cmd = app.add_subcommand("derive", "All single derivation steps from a word");
	grammar(derive_cmd, true);
	derive_cmd->add_option("--word", o.word, "Word (@ for the empty word)")->required();
	derive_cmd->add_flag("--unique", o.unique, "Print distinct targets only");
	format(derive_cmd);

	auto* witness_cmd = app.add_subcommand("witness", "Witness grammars and hierarchy tables");
	witness_cmd->require_subcommand(1);
	auto* run_cmd = witness_cmd->add_subcommand("run", "Check witness cases");
	run_cmd->add_option("id", o.witness, "L1 L2 L3 L4 L6 L7 or all");
	run_cmd->add_option("--n", o.n, "Parameter n");
	run_cmd->add_option("--max-len", o.max_len, "Length bound (default 12 for L1, 8 otherwise)");
	format(run_cmd);
	auto* list_cmd = witness_cmd->add_subcommand("list", "List witness cases");
	format(list_cmd);
	auto* show_cmd = witness_cmd->add_subcommand("show", "Print a witness grammar");
	show_cmd->add_option("id", o.witness, "Witness id")->required();
	show_cmd->add_option("--n", o.n, "Parameter n");
	auto* export_cmd = witness_cmd->add_subcommand("export", "Write a witness grammar file");
	export_cmd->add_option("id", o.witness, "Witness id")->required();
	export_cmd->add_option("--n", o.n, "Parameter n");
	export_cmd->add_option("--out", o.out_path, "Output file (default: standard output)");
	auto* hier_cmd = witness_cmd->add_subcommand("hierarchy", "Print an inclusion diagram");
	hier_cmd->add_option("--scope", o.scope, "subregular, ic-structural, ic-resource or merged");
	format(hier_cmd);

	auto* convert_cmd = app.add_subcommand("convert", "Convert a language to a DFA table or a right-linear grammar");
	language(convert_cmd);
	grammar(convert_cmd, false);
	convert_cmd->add_option("--to", o.to, "dfa, grammar or regular")->check(CLI::IsMember({"dfa", "grammar", "regular"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? ok : usage;
	}

	try {
		if (*classify_cmd) return cmd_classify(o, out);
		if (*measure_cmd) return cmd_measure(o, out);
		if (*enumerate_cmd) return cmd_enumerate(o, out);
		if (*member_cmd) return cmd_member(o, out);
		if (*derive_cmd) return cmd_derive(o, out);
		if (*run_cmd) return cmd_witness_run(o, out);
		if (*list_cmd) return cmd_witness_list(o, out);
		if (*show_cmd) return cmd_witness_show(o, out, false);
		if (*export_cmd) return cmd_witness_show(o, out, true);
		if (*hier_cmd) return cmd_witness_hierarchy(o, out);
		if (*convert_cmd) return cmd_convert(o, out);
	} catch (const CLI::Error& e) {
		err << "error: " << e.what() << "\n";
		return usage;
	} catch (const ResourceError& e) {
		err << "resource limit: " << e.what() << "\n";
		return resource;
	} catch (const InternalError& e) {
		err << "internal error: " << e.what() << "\n";
		return negative;
	} catch (const ParseError& e) {
		err << "parse error: " << e.what() << "\n";
		return usage;
	} catch (const Error& e) {
		err << "error: " << e.what() << "\n";
		return usage;
	}
	return usage;
}

} // namespace icg::cli
