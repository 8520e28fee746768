#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dfa.hpp"

namespace icg {

/// Total map states -> states; t[q] is the state reached from q by reading the
/// represented word.
using Transformation = std::vector<State>;

struct TransformationHash {
	std::size_t operator()(const Transformation& t) const noexcept {
		std::size_t h = 1469598103934665603ull;
		for (State s : t) h = (h ^ s) * 1099511628211ull;
		return h;
	}
};

inline constexpr std::size_t kDefaultMonoidCap = 10000;

/// Transformations of all words, closed under composition. Element 0 is the
/// identity (the empty word); every element keeps its shortlex-least word.
class TransitionMonoid {
public:
	std::size_t size() const noexcept { return elements_.size(); }
	const Transformation& element(std::size_t i) const { return elements_[i]; }
	const Word& representative(std::size_t i) const { return words_[i]; }
	/// Element index of the transformation of the i-th letter.
	std::size_t generator(std::size_t letter) const { return generators_[letter]; }
	std::size_t num_generators() const noexcept { return generators_.size(); }

	std::optional<std::size_t> index_of(const Transformation& t) const {
		auto it = index_.find(t);
		if (it == index_.end()) return std::nullopt;
		return it->second;
	}

	/// Reading x then y.
	static Transformation then(const Transformation& x, const Transformation& y) {
		Transformation out(x.size());
		for (std::size_t q = 0; q < x.size(); ++q) out[q] = y[x[q]];
		return out;
	}

	/// t^k, with t^0 the identity.
	static Transformation power(const Transformation& t, std::size_t k) {
		Transformation out(t.size());
		for (std::size_t q = 0; q < t.size(); ++q) out[q] = static_cast<State>(q);
		for (std::size_t i = 0; i < k; ++i) out = then(out, t);
		return out;
	}

	/// Throws ResourceError once more than `cap` elements are produced.
	static TransitionMonoid of(const Dfa& d, std::size_t cap = kDefaultMonoidCap) {
		TransitionMonoid m;
		const std::size_t n = d.num_states();
		const std::size_t k = d.alphabet().size();
		Transformation id(n);
		for (State q = 0; q < n; ++q) id[q] = q;
		m.add(std::move(id), Word{}, cap);
		std::vector<Transformation> letters(k, Transformation(n));
		for (std::size_t a = 0; a < k; ++a) {
			for (State q = 0; q < n; ++q) letters[a][q] = d.next(q, a);
		}
		for (std::size_t i = 0; i < m.elements_.size(); ++i) {
			for (std::size_t a = 0; a < k; ++a) {
				Transformation t = then(m.elements_[i], letters[a]);
				if (!m.index_.count(t)) m.add(std::move(t), m.words_[i] + d.alphabet()[a], cap);
			}
		}
		for (std::size_t a = 0; a < k; ++a) m.generators_.push_back(*m.index_of(letters[a]));
		return m;
	}

private:
	void add(Transformation t, Word w, std::size_t cap) {
		if (elements_.size() >= cap) {
			throw ResourceError("transition monoid exceeds " + std::to_string(cap) + " elements");
		}
		index_.emplace(t, elements_.size());
		elements_.push_back(std::move(t));
		words_.push_back(std::move(w));
	}

	std::vector<Transformation> elements_;
	std::vector<Word> words_;
	std::vector<std::size_t> generators_;
	std::unordered_map<Transformation, std::size_t, TransformationHash> index_;
};

inline TransitionMonoid transition_monoid(const Dfa& d, std::size_t cap = kDefaultMonoidCap) {
	return TransitionMonoid::of(d, cap);
}

} // namespace icg
