#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace icg {

enum class Scope { subregular, ic_structural, ic_resource, merged };

enum class EdgeStatus {
	proper,          // X is a proper subset of Y
	open_properness, // inclusion known, properness open
	equality,        // X = Y; stored in both directions
	unknown          // relation open: incomparable or X contained in Y
};

inline std::string_view to_string(Scope s) {
	switch (s) {
	case Scope::subregular: return "subregular";
	case Scope::ic_structural: return "ic-structural";
	case Scope::ic_resource: return "ic-resource";
	case Scope::merged: return "merged";
	}
	return "?";
}

inline Scope parse_scope(std::string_view s) {
	for (Scope x : {Scope::subregular, Scope::ic_structural, Scope::ic_resource, Scope::merged}) {
		if (to_string(x) == s) return x;
	}
	throw DomainError("unknown hierarchy scope '" + std::string(s) + "'");
}

inline std::string_view to_string(EdgeStatus s) {
	switch (s) {
	case EdgeStatus::proper: return "proper";
	case EdgeStatus::open_properness: return "open-properness";
	case EdgeStatus::equality: return "equality";
	case EdgeStatus::unknown: return "unknown";
	}
	return "?";
}

struct Edge {
	std::string from;
	std::string to;
	EdgeStatus status = EdgeStatus::proper;

	friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Inclusion diagram. Node names are family labels; ellipsis nodes of the
/// drawings get range names such as "RL_P(5..2n-3)". In the IC scopes a node X
/// stands for the family of languages generated with selection from X.
class HierarchyTable {
public:
	HierarchyTable(Scope scope, std::vector<Edge> edges) : scope_(scope) {
		for (Edge& e : edges) {
			nodes_.insert(e.from);
			nodes_.insert(e.to);
			if (e.status == EdgeStatus::equality) edges_.insert({e.to, e.from, e.status});
			edges_.insert(std::move(e));
		}
	}

	Scope scope() const noexcept { return scope_; }
	const std::set<std::string>& nodes() const noexcept { return nodes_; }
	const std::set<Edge>& edges() const noexcept { return edges_; }

	std::optional<EdgeStatus> status(std::string_view from, std::string_view to) const {
		for (const Edge& e : edges_) {
			if (e.from == from && e.to == to) return e.status;
		}
		return std::nullopt;
	}

	/// Inclusion along known edges (every status except unknown).
	bool included(const std::string& from, const std::string& to) const {
		if (from == to) return nodes_.count(from) > 0;
		std::set<std::string> seen{from};
		std::vector<std::string> stack{from};
		while (!stack.empty()) {
			const std::string x = stack.back();
			stack.pop_back();
			for (const Edge& e : edges_) {
				if (e.from != x || e.status == EdgeStatus::unknown) continue;
				if (e.to == to) return true;
				if (seen.insert(e.to).second) stack.push_back(e.to);
			}
		}
		return false;
	}

	/// True when the proper and open-properness edges form no cycle.
	bool strict_part_acyclic() const {
		std::map<std::string, int> mark;
		bool cyclic = false;
		auto visit = [&](auto&& self, const std::string& x) -> void {
			mark[x] = 1;
			for (const Edge& e : edges_) {
				if (e.from != x || e.status == EdgeStatus::unknown || e.status == EdgeStatus::equality) continue;
				if (mark[e.to] == 1) cyclic = true;
				else if (mark[e.to] == 0) self(self, e.to);
			}
			mark[x] = 2;
		};
		for (const auto& n : nodes_) {
			if (mark[n] == 0) visit(visit, n);
		}
		return !cyclic;
	}

private:
	Scope scope_;
	std::set<std::string> nodes_;
	std::set<Edge> edges_;
};

namespace detail {

inline std::vector<Edge> proper_edges(std::initializer_list<std::pair<const char*, const char*>> list) {
	std::vector<Edge> out;
	for (const auto& [a, b] : list) out.push_back({a, b, EdgeStatus::proper});
	return out;
}

inline std::vector<Edge> subregular_edges() {
	return proper_edges({
	    {"FIN", "NIL"},           {"MON", "REG_Z(1)"},     {"REG_Z(1)", "NIL"},     {"REG_Z(1)", "SUF"},
	    {"REG_Z(1)", "COMM"},     {"REG_Z(1)", "UF"},      {"REG_Z(1)", "REG_Z(2)"}, {"RL_P(1)", "FIN"},
	    {"RL_P(1)", "UF"},        {"RL_V(1)", "RL_V(2)"},  {"RL_V(2)", "RL_V(>2)"}, {"RL_V(>2)", "REG"},
	    {"REG_Z(2)", "RL_V(2)"},  {"REG_Z(2)", "REG_Z(>2)"}, {"REG_Z(>2)", "REG"},  {"RL_P(1)", "RL_P(2)"},
	    {"RL_P(2)", "RL_P(3)"},   {"RL_P(2)", "RL_V(1)"},  {"RL_P(3)", "RL_P(4)"},  {"RL_P(4)", "RL_P(>4)"},
	    {"RL_P(4)", "RL_V(2)"},   {"RL_P(>4)", "REG"},     {"NIL", "DEF"},          {"NIL", "RL_V(1)"},
	    {"COMB", "DEF"},          {"COMB", "RL_V(1)"},     {"COMB", "REG_Z(2)"},    {"ORD", "NC"},
	    {"DEF", "ORD"},           {"DEF", "RL_V(2)"},      {"NC", "PS"},            {"PS", "REG"},
	    {"SUF", "PS"},            {"COMM", "CIRC"},        {"CIRC", "REG"},         {"UF", "REG"},
	});
}

inline std::vector<Edge> ic_structural_edges() {
	std::vector<Edge> out = proper_edges({
	    {"FIN", "NIL"}, {"MON", "COMB"}, {"MON", "NIL"}, {"MON", "SUF"},  {"NIL", "DEF"},  {"MON", "COMM"},
	    {"COMB", "DEF"}, {"DEF", "ORD"}, {"NC", "PS"},   {"PS", "REG"},   {"COMM", "CIRC"}, {"CIRC", "REG"},
	    {"SUF", "PS"},
	});
	out.push_back({"ORD", "NC", EdgeStatus::open_properness});
	out.push_back({"REG", "UF", EdgeStatus::equality});
	out.push_back({"SUF", "ORD", EdgeStatus::unknown});
	out.push_back({"SUF", "NC", EdgeStatus::unknown});
	return out;
}

inline std::vector<Edge> ic_resource_edges() {
	std::vector<Edge> out = proper_edges({
	    {"RL_P(1)", "RL_P(2)"},         {"RL_P(2)", "RL_P(3)"},         {"RL_P(3)", "RL_P(4)"},
	    {"RL_P(4)", "RL_P(5..2n-3)"},   {"RL_P(5..2n-3)", "RL_P(2n-2)"}, {"RL_P(2n-2)", "RL_P(2n-1)"},
	    {"RL_P(2n-1)", "RL_P(2n)"},     {"RL_P(2n)", "RL_P(>2n)"},      {"RL_P(>2n)", "REG"},
	    {"RL_V(1)", "RL_V(2)"},         {"RL_V(2)", "RL_V(3..n-2)"},    {"RL_V(3..n-2)", "RL_V(n-1)"},
	    {"RL_V(n-1)", "RL_V(n)"},       {"RL_V(n)", "RL_V(>n)"},        {"RL_V(>n)", "REG"},
	    {"REG_Z(1)", "REG_Z(2)"},       {"REG_Z(2)", "REG_Z(3..n-2)"},  {"REG_Z(3..n-2)", "REG_Z(n-1)"},
	    {"REG_Z(n-1)", "REG_Z(n)"},     {"REG_Z(n)", "REG_Z(>n)"},      {"REG_Z(>n)", "REG"},
	    {"RL_P(2)", "RL_V(1)"},         {"RL_P(4)", "RL_V(2)"},         {"RL_P(2n-2)", "RL_V(n-1)"},
	    {"RL_P(2n)", "RL_V(n)"},        {"REG_Z(1)", "RL_V(1)"},        {"REG_Z(2)", "RL_V(2)"},
	    {"REG_Z(n-1)", "RL_V(n-1)"},    {"REG_Z(n)", "RL_V(n)"},
	});
	out.push_back({"REG_Z(2)", "RL_V(1)", EdgeStatus::unknown});
	out.push_back({"REG_Z(n)", "RL_V(n-1)", EdgeStatus::unknown});
	return out;
}

} // namespace detail

/// The edges added when both IC hierarchies are merged.
inline std::vector<Edge> merged_additions() {
	return {
	    {"COMB", "REG_Z(2)", EdgeStatus::proper},
	    {"DEF", "RL_V(1)", EdgeStatus::proper},
	    {"RL_P(1)", "FIN", EdgeStatus::equality},
	    {"MON", "REG_Z(1)", EdgeStatus::equality},
	    {"SUF", "RL_V(1)", EdgeStatus::unknown},
	    {"SUF", "REG_Z(2)", EdgeStatus::unknown},
	};
}

inline HierarchyTable hierarchy(Scope scope) {
	switch (scope) {
	case Scope::subregular: return {scope, detail::subregular_edges()};
	case Scope::ic_structural: return {scope, detail::ic_structural_edges()};
	case Scope::ic_resource: return {scope, detail::ic_resource_edges()};
	case Scope::merged: {
		std::vector<Edge> all = detail::ic_structural_edges();
		for (auto& e : detail::ic_resource_edges()) all.push_back(std::move(e));
		for (auto& e : merged_additions()) all.push_back(std::move(e));
		return {scope, std::move(all)};
	}
	}
	throw InternalError("unhandled scope");
}

/// Node of the subregular diagram that contains the concrete family label
/// text, e.g. "RL_V(7)" lies in "RL_V(>2)".
inline std::string subregular_node(std::string_view family, std::size_t n = 0) {
	if (n == 0) return std::string(family);
	const std::size_t last = family == "RL_P" ? 4 : 2;
	if (n > last) return std::string(family) + "(>" + std::to_string(last) + ")";
	return std::string(family) + "(" + std::to_string(n) + ")";
}

} // namespace icg
