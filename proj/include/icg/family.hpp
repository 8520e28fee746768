#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "error.hpp"

namespace icg {

enum class Family { MON, FIN, NIL, COMB, DEF, SUF, ORD, COMM, CIRC, NC, PS, UF, REG, RL_V, RL_P, REG_Z };

/// A family of languages; the resource families carry their bound n >= 1.
struct FamilyLabel {
	Family family = Family::REG;
	unsigned n = 0;

	constexpr FamilyLabel() = default;
	constexpr FamilyLabel(Family f, unsigned bound = 0) : family(f), n(bound) {
		if (is_resource() && n == 0) throw DomainError("resource family needs a bound n >= 1");
		if (!is_resource()) n = 0;
	}

	constexpr bool is_resource() const noexcept {
		return family == Family::RL_V || family == Family::RL_P || family == Family::REG_Z;
	}

	friend constexpr auto operator<=>(const FamilyLabel&, const FamilyLabel&) = default;
};

inline constexpr std::array<Family, 13> kStructuralFamilies = {
	Family::MON, Family::FIN, Family::NIL, Family::COMB, Family::DEF, Family::SUF, Family::ORD,
	Family::COMM, Family::CIRC, Family::NC, Family::PS, Family::UF, Family::REG,
};

inline std::string_view family_name(Family f) {
	switch (f) {
	case Family::MON: return "MON";
	case Family::FIN: return "FIN";
	case Family::NIL: return "NIL";
	case Family::COMB: return "COMB";
	case Family::DEF: return "DEF";
	case Family::SUF: return "SUF";
	case Family::ORD: return "ORD";
	case Family::COMM: return "COMM";
	case Family::CIRC: return "CIRC";
	case Family::NC: return "NC";
	case Family::PS: return "PS";
	case Family::UF: return "UF";
	case Family::REG: return "REG";
	case Family::RL_V: return "RL_V";
	case Family::RL_P: return "RL_P";
	case Family::REG_Z: return "REG_Z";
	}
	return "?";
}

/// "MON", "RL_V(1)", "REG_Z(2)", ...
inline std::string to_string(const FamilyLabel& f) {
	std::string out(family_name(f.family));
	if (f.is_resource()) out += "(" + std::to_string(f.n) + ")";
	return out;
}

/// Inverse of to_string; case-sensitive.
inline FamilyLabel parse_family(std::string_view text) {
	const std::size_t open = text.find('(');
	const std::string_view head = text.substr(0, open);
	for (int i = 0; i <= static_cast<int>(Family::REG_Z); ++i) {
		const auto f = static_cast<Family>(i);
		if (family_name(f) != head) continue;
		const bool resource = f == Family::RL_V || f == Family::RL_P || f == Family::REG_Z;
		if (!resource) {
			if (open != std::string_view::npos) break;
			return FamilyLabel(f);
		}
		if (open == std::string_view::npos || text.back() != ')' || open + 2 >= text.size()) break;
		unsigned n = 0;
		for (char c : text.substr(open + 1, text.size() - open - 2)) {
			if (c < '0' || c > '9' || n > 100000) throw DomainError("bad family bound in '" + std::string(text) + "'");
			n = n * 10 + static_cast<unsigned>(c - '0');
		}
		return FamilyLabel(f, n);
	}
	throw DomainError("unknown family '" + std::string(text) + "'");
}

enum class Verdict { yes, no, unknown };

inline std::string_view to_string(Verdict v) {
	switch (v) {
	case Verdict::yes: return "yes";
	case Verdict::no: return "no";
	case Verdict::unknown: return "unknown";
	}
	return "?";
}

inline Verdict parse_verdict(std::string_view s) {
	if (s == "yes") return Verdict::yes;
	if (s == "no") return Verdict::no;
	if (s == "unknown") return Verdict::unknown;
	throw DomainError("unknown verdict '" + std::string(s) + "'");
}

} // namespace icg
