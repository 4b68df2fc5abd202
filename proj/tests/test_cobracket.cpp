#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "gtl/cobracket.hpp"
#include "gtl/enumerate.hpp"
#include "support.hpp"

using namespace gtl;
using gtl::testing::N;
using gtl::testing::P;
using gtl::testing::T;
using gtl::testing::W;

namespace {

// Term-by-term evaluation of the double sum, written independently.
PairTensorElement schedler_oracle(const Word& w, int genus) {
    PairTensorElement r(genus);
    const int m = w.degree();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Word inner, outer;
            for (int k = i + 1; k < j; ++k) inner += w[k];
            for (int k = j + 1; k < m; ++k) outer += w[k];
            for (int k = 0; k < i; ++k) outer += w[k];
            const auto ni = symmetrize_N(inner, genus), no = symmetrize_N(outer, genus);
            const Rational c(-pairing(w[i], w[j]));
            r += outer_product(ni, no) * c;
            r -= outer_product(no, ni) * c;
        }
    return r;
}

PairTensorElement minus_half_one_N(const Word& w, int genus) {
    PairTensorElement r(genus);
    for (const auto& [v, c] : symmetrize_N(w, genus)) r.add_term({Word{}, v}, Rational(-1, 2) * c);
    return r;
}

// X^Y^Z -> XYZ - XZY - YXZ + YZX + ZXY - ZYX
TensorElement wedge3(int genus, Letter x, Letter y, Letter z) {
    TensorElement r(genus);
    r.add_term({x, y, z}, 1);
    r.add_term({x, z, y}, -1);
    r.add_term({y, x, z}, -1);
    r.add_term({y, z, x}, 1);
    r.add_term({z, x, y}, 1);
    r.add_term({z, y, x}, -1);
    return r;
}

}  // namespace

TEST(Schedler, Examples) {
    EXPECT_TRUE(schedler_delta(W("a1b1"), 1).is_zero());
    EXPECT_EQ(schedler_delta(W("a1a2b1b2"), 2),
              P(2, "a2", "b2", -1) + P(2, "b2", "a2") + P(2, "a1", "b1") + P(2, "b1", "a1", -1));
    EXPECT_TRUE(schedler_delta(W("a1a1b1"), 1).is_zero());
    EXPECT_THROW(schedler_delta(Word{}, 1), std::invalid_argument);
}

TEST(Schedler, MatchesOracleAndIsCyclic) {
    for (const Word& w : all_words_up_to(2, 1, 5)) {
        const auto d = schedler_delta(w, 2);
        EXPECT_EQ(d, schedler_oracle(w, 2)) << w.str();
        EXPECT_EQ(schedler_delta(cyclic_nu(w), 2), d) << w.str();
        EXPECT_EQ(cobracket(symmetrize_N(w, 2)), d) << w.str();
    }
}

TEST(Schedler, SlotsAreCyclicInvariant) {
    for (const Word& w : all_words_up_to(2, 1, 5))
        for (const auto& [k, c] : schedler_delta(w, 2)) {
            EXPECT_EQ(schedler_delta(w, 2).coefficient({cyclic_nu(k[0]), k[1]}), c);
            EXPECT_EQ(schedler_delta(w, 2).coefficient({k[0], cyclic_nu(k[1])}), c);
        }
}

TEST(MuAlg, Examples) {
    EXPECT_TRUE(mu_alg(W("a1"), 1).is_zero());
    EXPECT_EQ(mu_alg(W("a1a2b1"), 2), P(2, "", "a2"));
    EXPECT_TRUE(mu_alg(W(""), 1).is_zero());
}

TEST(MuAlg, VanishesOnTripleCommutators) {
    for (int g = 1; g <= 2; ++g)
        for (Letter x : basis_letters(g))
            for (Letter y : basis_letters(g))
                for (Letter z : basis_letters(g)) {
                    const auto u = commutator(word_element(g, Word{x}),
                                              commutator(word_element(g, Word{y}), word_element(g, Word{z})));
                    EXPECT_TRUE(mu_alg(u).is_zero());
                }
}

TEST(MuAlg, VanishesOnWedgeActionOnSquares) {
    const int g = 2;
    const auto letters = basis_letters(g);
    for (std::size_t a = 0; a < letters.size(); ++a)
        for (std::size_t b = a + 1; b < letters.size(); ++b)
            for (std::size_t c = b + 1; c < letters.size(); ++c) {
                const auto u1 = wedge3(g, letters[a], letters[b], letters[c]);
                for (Letter x : letters) {
                    const auto image = act_on_tensor(u1, word_element(g, Word{x, x}));
                    EXPECT_TRUE(mu_alg(image).is_zero()) << letters[a].name() << letters[b].name() << letters[c].name();
                }
            }
}

TEST(Rho, Examples) {
    const auto r = rho_truncated(T(1, "a1"), T(1, "b1"), 4);
    EXPECT_EQ(r.homogeneous_part(0), tensor_unit(1));
    EXPECT_EQ(r.homogeneous_part(2), T(1, "a1b1", Rational(-1, 2)));
    EXPECT_TRUE(rho_truncated(tensor_unit(1), T(1, "b1"), 4).is_zero());
    const auto aa = rho_truncated(T(1, "a1"), T(1, "a1"), 4);
    EXPECT_TRUE(aa.homogeneous_part(0).is_zero());
    EXPECT_EQ(aa.homogeneous_part(2), T(1, "a1a1", Rational(-1, 2)));
    // next term: -1/12 a1 omega a1
    EXPECT_EQ(aa.homogeneous_part(4), (T(1, "a1") * omega(1) * T(1, "a1")) * Rational(-1, 12));
}

TEST(Kappa, Examples) {
    const auto k = kappa_theta_letters(A(1), B(1), 1, 2);
    EXPECT_EQ(k.homogeneous_part(0), P(1, "", "", -1));
    for (Letter x : basis_letters(2))
        for (Letter y : basis_letters(2)) {
            const std::string xs = x.name(), ys = y.name();
            const auto expect = (P(2, xs + ys, "") - P(2, xs, ys) - P(2, ys, xs) + P(2, "", ys + xs)) * Rational(1, 2);
            EXPECT_EQ(kappa_theta_letters(x, y, 2, 2).homogeneous_part(2), expect);
        }
    EXPECT_TRUE(kappa_theta_letters(A(1), A(1), 1, 2).homogeneous_part(0).is_zero());
}

TEST(MuTheta0, Examples) {
    EXPECT_EQ(mu_theta_0(W("a1"), 1), P(1, "", "a1", Rational(-1, 2)));
    EXPECT_EQ(mu_theta_0(W("a1b1"), 1), (P(1, "", "a1b1") + P(1, "", "b1a1")) * Rational(-1, 2));
    EXPECT_THROW(mu_theta_0(Word{}, 1), std::invalid_argument);
}

TEST(MuTheta0, MinusHalfOneTimesN) {
    for (int g = 1; g <= 2; ++g)
        for (const Word& w : all_words_up_to(g, 1, g == 1 ? 6 : 4)) {
            EXPECT_EQ(mu_theta_0(w, g), minus_half_one_N(w, g)) << w.str();
            EXPECT_EQ(mu_theta_part(0, w, g), minus_half_one_N(w, g)) << w.str();
        }
}

TEST(MuThetaPart, MinusTwoIsMuAlgAndMinusOneVanishes) {
    for (const Word& w : all_words_up_to(2, 1, 4)) {
        EXPECT_EQ(mu_theta_part(-2, w, 2), mu_alg(w, 2)) << w.str();
        EXPECT_TRUE(mu_theta_part(-1, w, 2).is_zero()) << w.str();
    }
    EXPECT_THROW(mu_theta_part(1, W("a1"), 1), std::invalid_argument);
    EXPECT_THROW(delta_theta_part(-3, W("a1"), 1), std::invalid_argument);
}

TEST(DeltaTheta, Examples) {
    const Word w = W("a1a2b1b2");
    EXPECT_EQ(delta_theta_part(-2, w, 2), schedler_delta(w, 2));
    EXPECT_TRUE(delta_theta_part(-1, w, 2).is_zero());
    EXPECT_TRUE(delta_theta_part(0, w, 2).is_zero());
}

TEST(DeltaTheta, TwoPathsAgree) {
    for (int g = 1; g <= 2; ++g)
        for (const Word& w : all_words_up_to(g, 1, 6)) {
            ASSERT_EQ(delta_theta_part(-2, w, g), schedler_delta(w, g)) << w.str();
        }
}

TEST(DeltaTheta, RandomGenusThree) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 50; ++k) {
        const Word w = random_word(rng, 3, 1 + static_cast<int>(rng() % 6));
        EXPECT_EQ(delta_theta_part(-2, w, 3), schedler_delta(w, 3)) << w.str();
        EXPECT_TRUE(delta_theta_part(-1, w, 3).is_zero()) << w.str();
        EXPECT_TRUE(delta_theta_part(0, w, 3).is_zero()) << w.str();
    }
}
