#pragma once

#include <random>
#include <string>
#include <vector>

#include "gtl/enumerate.hpp"
#include "gtl/tensor.hpp"

namespace gtl::testing {

inline Word W(const std::string& s) { return Word::parse(s); }

inline TensorElement T(int genus, const std::string& s, const Rational& c = 1) {
    return word_element(genus, W(s), c);
}

inline TensorElement N(int genus, const std::string& s) { return symmetrize_N(W(s), genus); }

inline PairTensorElement P(int genus, const std::string& left, const std::string& right, const Rational& c = 1) {
    return pair_element(genus, W(left), W(right), c);
}

// Random bracket-generated Lie element of the given degree.
inline TensorElement random_lie(std::mt19937_64& rng, int genus, int degree) {
    if (degree == 1) return word_element(genus, Word{random_letter(rng, genus)});
    const int split = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(degree - 1));
    return commutator(random_lie(rng, genus, split), random_lie(rng, genus, degree - split));
}

}  // namespace gtl::testing
