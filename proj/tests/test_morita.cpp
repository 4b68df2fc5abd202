#include <gtest/gtest.h>

#include <random>

#include "gtl/cobracket.hpp"
#include "gtl/enumerate.hpp"
#include "gtl/morita.hpp"
#include "support.hpp"

using namespace gtl;
using gtl::testing::N;
using gtl::testing::P;
using gtl::testing::T;
using gtl::testing::W;

namespace {

TensorElement sym_word(int genus, const Word& w, const Rational& c = 1) { return word_element(genus, w.sorted(), c); }

// Four-term formula written out directly.
TensorElement beta_oracle(Letter y, Letter z, const Word& w, int genus) {
    const std::size_t m = w.size();
    const Word first_out = w.slice(1, m), last_out = w.slice(0, m - 1);
    TensorElement r(genus);
    r -= sym_word(genus, z + first_out, pairing(y, w[0]));
    r -= sym_word(genus, z + last_out, pairing(y, w[m - 1]));
    r += sym_word(genus, y + first_out, pairing(z, w[0]));
    r += sym_word(genus, y + last_out, pairing(z, w[m - 1]));
    return r;
}

TensorElement beta_oracle(Letter y, Letter z, const TensorElement& t) {
    TensorElement r(t.genus());
    for (const auto& [w, c] : t) r += beta_oracle(y, z, w, t.genus()) * c;
    return r;
}

TensorElement times_sym(const Word& prefix, const TensorElement& t) {
    TensorElement r(t.genus());
    for (const auto& [w, c] : t) r.add_term((prefix + w).sorted(), c);
    return r;
}

// sum over cyclic positions c of (X_{c-1} . X_{c+1}) X_c (rest), in Sym.
TensorElement cyclic_contraction_sum(const Word& w, int genus) {
    const int m = w.degree();
    TensorElement r(genus);
    for (int c = 0; c < m; ++c) {
        const int prev = (c + m - 1) % m, next = (c + 1) % m;
        Word rest;
        for (int k = 0; k < m; ++k)
            if (k != prev && k != next) rest += w[k];
        r.add_term(rest.sorted(), pairing(w[prev], w[next]));
    }
    return r;
}

std::vector<Word> some_words(int genus, int m, std::size_t random_count, std::uint64_t seed) {
    if (random_count == 0) return all_words(genus, m);
    std::mt19937_64 rng(seed);
    std::vector<Word> out;
    for (std::size_t i = 0; i < random_count; ++i) out.push_back(random_word(rng, genus, m));
    return out;
}

}  // namespace

TEST(MoritaTrace, Validation) {
    EXPECT_THROW(morita_trace(3, DerivationElement::symmetrized(W("a1b1a1"), 1)), std::invalid_argument);
    const auto mixed = DerivationElement::symmetrized(W("a1b1"), 1) + DerivationElement::symmetrized(W("a1a1b1"), 1);
    EXPECT_THROW(morita_trace(2, mixed), std::invalid_argument);
    EXPECT_TRUE(morita_trace(4, DerivationElement(1)).is_zero());
}

TEST(MoritaTrace, SignAndContraction) {
    // C_12 of N(A1 B1 A2 B2) is the cyclic sum of adjacent contractions: A2B2 + A1B1.
    EXPECT_EQ(morita_trace(3, DerivationElement::symmetrized(W("a1b1a2b2"), 2)), T(2, "a1b1", -1) + T(2, "a2b2", -1));
    EXPECT_EQ(morita_trace(2, DerivationElement::symmetrized(W("a1b1a2"), 2)), T(2, "a2"));
    EXPECT_TRUE(morita_trace(1, DerivationElement::symmetrized(W("a1b1"), 1)).is_zero());
}

TEST(MoritaTrace, MatchesBetaOnGenerators) {
    for (int m = 2; m <= 5; ++m)
        for (Letter y : basis_letters(2))
            for (Letter z : basis_letters(2))
                for (const Word& w : some_words(2, m, m <= 3 ? 0 : 40, 100 + m)) {
                    const auto tr = morita_trace(m + 1, lplus_generator(y, z, w, 2));
                    auto expect = beta_oracle(y, z, dynkin_phi(w, 2));
                    if (m % 2 == 0) expect *= Rational(-1);
                    EXPECT_EQ(tr, expect) << y.name() << z.name() << w.str();
                    EXPECT_EQ(beta_map(y, z, dynkin_phi(w, 2)), beta_oracle(y, z, dynkin_phi(w, 2)));
                }
}

TEST(MoritaTrace, FrozenGenusTwoValue) {
    const auto d = lplus_generator(A(1), A(2), W("b1b2a1"), 2);
    const auto tr = morita_trace(4, d);
    EXPECT_EQ(tr, beta_oracle(A(1), A(2), dynkin_phi(W("b1b2a1"), 2)));
    EXPECT_FALSE(tr.is_zero());
}

TEST(SMap, Examples) {
    EXPECT_EQ(s_map(P(1, "a1", "b1a1")), T(1, "a1a1b1"));
    EXPECT_TRUE(s_map(P(1, "a1b1", "a1")).is_zero());
    EXPECT_TRUE(s_map(P(1, "", "a1")).is_zero());
}

// s(delta(N(w))) = -(|w| - 3) sum_c (X_{c-1} . X_{c+1}) X_c (rest) for |w| >= 5.
TEST(SMap, OnCobracketOfNecklace) {
    for (int m = 5; m <= 6; ++m)
        for (const Word& w : all_words(2, m)) {
            auto expect = cyclic_contraction_sum(w, 2);
            expect *= Rational(-(m - 3));
            EXPECT_EQ(s_map(schedler_delta(w, 2)), expect) << w.str();
        }
}

TEST(Beta, VanishesForEvenDegree) {
    for (int m : {2, 4, 6})
        for (Letter y : basis_letters(1))
            for (Letter z : basis_letters(1))
                for (const Word& w : all_words(1, m)) EXPECT_TRUE(beta_map(y, z, dynkin_phi(w, 1)).is_zero());
    std::mt19937_64 rng(21);
    for (int m : {2, 4, 6})
        for (int k = 0; k < 50; ++k) {
            const Letter y = random_letter(rng, 2), z = random_letter(rng, 2);
            EXPECT_TRUE(beta_map(y, z, dynkin_phi(random_word(rng, 2, m), 2)).is_zero());
        }
}

TEST(Beta, PeelsLeadingPair) {
    for (int m = 4; m <= 5; ++m)
        for (Letter y : basis_letters(2))
            for (Letter z : basis_letters(2))
                for (const Word& w : some_words(2, m, m == 4 ? 0 : 60, 200 + m)) {
                    const Word head = w.slice(0, 2), tail = w.slice(2, w.size());
                    EXPECT_EQ(beta_map(y, z, dynkin_phi(w, 2)), times_sym(head, beta_map(y, z, dynkin_phi(tail, 2))))
                        << w.str();
                }
}

// With a one-letter tail Phi(X3) = X3 survives in Sym and the peeling breaks.
TEST(Beta, PeelingFailsWithOneLetterTail) {
    const Word w = W("a1a1a1");
    EXPECT_TRUE(beta_map(B(1), A(1), dynkin_phi(w, 1)).is_zero());
    EXPECT_EQ(times_sym(W("a1a1"), beta_map(B(1), A(1), dynkin_phi(W("a1"), 1))), T(1, "a1a1a1", 2));
    std::size_t bad = 0, total = 0;
    for (Letter y : basis_letters(2))
        for (Letter z : basis_letters(2))
            for (const Word& u : all_words(2, 3)) {
                ++total;
                if (beta_map(y, z, dynkin_phi(u, 2)) !=
                    times_sym(u.slice(0, 2), beta_map(y, z, dynkin_phi(u.slice(2, 3), 2))))
                    ++bad;
            }
    EXPECT_EQ(total, 1024u);
    EXPECT_EQ(bad, 384u);
}

TEST(Beta, TrivialWhenYEqualsZ) {
    for (const Word& w : all_words(2, 3)) EXPECT_TRUE(beta_map(A(1), A(1), word_element(2, w)).is_zero());
}

TEST(Gamma, MinusMMinusOneBeta) {
    for (int m : {3, 5})
        for (Letter y : basis_letters(1))
            for (Letter z : basis_letters(1))
                for (const Word& w : all_words(1, m)) {
                    const auto phi = dynkin_phi(w, 1);
                    EXPECT_EQ(gamma_map(y, z, phi), beta_map(y, z, phi) * Rational(-(m - 1))) << w.str();
                    EXPECT_EQ(alpha_map(y, z, phi), beta_map(y, z, phi) * Rational(-m)) << w.str();
                }
}

// Explicit degree-3 expansion of gamma(Phi(X1 X2 X3)).
TEST(Gamma, DegreeThreeDisplay) {
    const int g = 2;
    for (Letter y : basis_letters(g))
        for (Letter z : basis_letters(g))
            for (const Word& w : all_words(g, 3)) {
                const Letter x1 = w[0], x2 = w[1], x3 = w[2];
                TensorElement expect(g);
                expect += sym_word(g, Word{z, x1, x3}, -4 * pairing(y, x2));
                expect += sym_word(g, Word{y, x1, x3}, 4 * pairing(z, x2));
                expect += sym_word(g, Word{z, x1, x2}, 4 * pairing(y, x3));
                expect += sym_word(g, Word{y, x1, x2}, -4 * pairing(z, x3));
                const auto phi = dynkin_phi(w, g);
                EXPECT_EQ(gamma_map(y, z, phi), expect) << y.name() << z.name() << w.str();
                EXPECT_EQ(expect, beta_map(y, z, phi) * Rational(-2)) << y.name() << z.name() << w.str();
            }
}

TEST(Gamma, FactorsThroughBetaOnWords) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        const int m = 4 + static_cast<int>(rng() % 4);
        const Word w = random_word(rng, 2, m);
        const Letter y = random_letter(rng, 2), z = random_letter(rng, 2);
        const Word ends{w[0], w[w.size() - 1]};
        EXPECT_EQ(gamma_map(y, z, word_element(2, w)),
                  times_sym(ends, beta_map(y, z, word_element(2, w.slice(1, w.size() - 1)))))
            << w.str();
    }
}

TEST(Alpha, VanishesForEvenDegree) {
    for (int m : {4, 6})
        for (Letter y : basis_letters(1))
            for (Letter z : basis_letters(1))
                for (const Word& w : all_words(1, m)) {
                    const auto phi = dynkin_phi(w, 1);
                    EXPECT_TRUE(gamma_map(y, z, phi).is_zero());
                    EXPECT_TRUE(alpha_map(y, z, phi).is_zero());
                }
}

TEST(Dynkin, PeelingIdentity) {
    for (int m = 3; m <= 6; ++m)
        for (const Word& w : all_words(1, m)) {
            const auto x1 = T(1, w[0].name()), x2 = T(1, w[1].name());
            const auto rest = dynkin_phi(w.slice(2, w.size()), 1);
            EXPECT_EQ(dynkin_phi(w, 1), x1 * x2 * rest + rest * x2 * x1 - x1 * rest * x2 - x2 * rest * x1) << w.str();
        }
}

// s(delta(N([Y,Z] Phi(w)))) and Tr_{m+1} agree up to (-1)^{m+1} m (m-1).
TEST(TraceIdentity, CorrectedFactorHolds) {
    for (int m = 3; m <= 4; ++m) {
        const auto r = verify_54trace(2, m, "exhaustive", 0, 0, TraceNormalization::Corrected);
        EXPECT_TRUE(r.passed()) << "m=" << m << " failed=" << r.failed;
        EXPECT_EQ(r.trace_beta_failed, 0u);
    }
    const auto r5 = verify_54trace(2, 5, "random", 100, 1, TraceNormalization::Corrected);
    EXPECT_TRUE(r5.passed());
    EXPECT_GT(r5.nonzero, 0u);
}

TEST(TraceIdentity, EvenDegreeBothSidesVanish) {
    const auto r = verify_54trace(1, 4, "exhaustive", 0, 0, TraceNormalization::Stated);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.nonzero, 0u);
}

// With the (-1)^m m factor every case with a nonzero trace disagrees.
TEST(TraceIdentity, StatedFactorFailsExactlyOnNonzeroCases) {
    const auto r = verify_54trace(2, 3, "exhaustive", 0, 0, TraceNormalization::Stated);
    EXPECT_GT(r.nonzero, 0u);
    EXPECT_EQ(r.failed, r.nonzero);
    EXPECT_EQ(r.trace_beta_failed, 0u);
    EXPECT_EQ(trace_factor(3, TraceNormalization::Stated), Rational(-3));
    EXPECT_EQ(trace_factor(3, TraceNormalization::Corrected), Rational(6));
    EXPECT_EQ(trace_factor(4, TraceNormalization::Stated), Rational(4));
    EXPECT_EQ(trace_factor(4, TraceNormalization::Corrected), Rational(-12));
}

TEST(TraceIdentity, Validation) {
    EXPECT_THROW(verify_54trace(2, 2, "exhaustive", 0, 0), std::invalid_argument);
    EXPECT_THROW(verify_54trace(2, 3, "sampled", 0, 0), std::invalid_argument);
    EXPECT_THROW(parse_normalization("loose"), std::invalid_argument);
    const auto a = verify_54trace(2, 5, "random", 20, 9, TraceNormalization::Corrected);
    const auto b = verify_54trace(2, 5, "random", 20, 9, TraceNormalization::Corrected, 3);
    EXPECT_EQ(a.checked, b.checked);
    EXPECT_EQ(a.nonzero, b.nonzero);
}
