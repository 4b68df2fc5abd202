#include <gtest/gtest.h>

#include "gtl/axioms.hpp"
#include "gtl/io.hpp"
#include "gtl/verify.hpp"
#include "support.hpp"

using namespace gtl;

namespace {

void expect_all_pass(const SuiteReport& r) {
    for (const auto& a : r.axioms)
        EXPECT_TRUE(a.passed()) << a.axiom << " first violation " << a.violations.front();
    for (const auto& a : r.empirical) EXPECT_GT(a.checked, 0u) << a.axiom;
}

}  // namespace

TEST(Bialgebra, GenusOneDegreeSix) {
    const auto r = verify_bialgebra(1, 6);
    ASSERT_EQ(r.axioms.size(), 5u);
    expect_all_pass(r);
    EXPECT_TRUE(r.passed());
}

TEST(Bialgebra, GenusTwoDegreeSix) {
    const auto r = verify_bialgebra(2, 6, 2);
    expect_all_pass(r);
    EXPECT_TRUE(r.passed());
}

TEST(Bialgebra, CompatibilityTotalDegreeSeven) {
    EXPECT_TRUE(check_compatibility(derivation_bracket_fn(), schedler_cobracket_fn(1), 1, 9).passed());
    const auto r = check_compatibility(derivation_bracket_fn(), schedler_cobracket_fn(2), 2, 7);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.checked, 10000u);
}

TEST(Bialgebra, BimoduleConditionsAreReportedSeparately) {
    const auto r = verify_bialgebra(1, 4);
    ASSERT_EQ(r.empirical.size(), 2u);
    EXPECT_EQ(r.empirical[0].axiom, "bimodule_compat");
    EXPECT_EQ(r.empirical[1].axiom, "bimodule_involutive");
    SuiteReport broken = r;
    broken.empirical[0].violations.push_back("x");
    EXPECT_TRUE(broken.passed());
}

TEST(Bialgebra, GenusOneCobracketStartsAtDegreeSeven) {
    for (int m = 1; m <= 6; ++m)
        for (const Word& w : necklaces(1, m)) EXPECT_TRUE(schedler_delta(w, 1).is_zero()) << w.str();
    std::size_t nonzero = 0;
    for (const Word& w : necklaces(1, 7)) nonzero += schedler_delta(w, 1).is_zero() ? 0 : 1;
    EXPECT_EQ(nonzero, 4u);
    EXPECT_TRUE(check_cojacobi(schedler_cobracket_fn(1), 1, 8).passed());
    EXPECT_TRUE(check_involutive(schedler_cobracket_fn(1), derivation_bracket_fn(), 1, 8).passed());
}

TEST(NegativeControl, CoskewDetectsSymmetricPart) {
    const CobracketFn bad = [](const Word& w) { return pair_element(2, w, Word{}); };
    const auto r = check_coskew(bad, 2, 3);
    EXPECT_EQ(r.violations.size(), r.checked);
}

TEST(NegativeControl, DegreeWeightedCobracket) {
    const auto good = schedler_cobracket_fn(2);
    const CobracketFn bad = [good](const Word& w) { return good(w) * Rational(w.degree() * w.degree()); };
    EXPECT_TRUE(check_coskew(bad, 2, 6).passed());
    EXPECT_TRUE(check_compatibility(derivation_bracket_fn(), bad, 2, 5).passed());
    EXPECT_FALSE(check_compatibility(derivation_bracket_fn(), bad, 2, 6).passed());
}

TEST(NegativeControl, InvolutiveWithProductInsteadOfBracket) {
    const BracketFn product = [](const TensorElement& a, const TensorElement& b) { return a * b; };
    EXPECT_FALSE(check_involutive(schedler_cobracket_fn(2), product, 2, 4).passed());
}

TEST(NegativeControl, ComoduleWithScaledMu) {
    const auto mu = mu_alg_fn(2);
    const SelfIntersectionFn bad = [mu](const Word& w) { return mu(w) * Rational(2); };
    EXPECT_FALSE(check_comodule(bad, schedler_cobracket_fn(2), 2, 6).passed());
}

TEST(AxiomReport, JsonShape) {
    const auto r = check_coskew(schedler_cobracket_fn(1), 1, 3);
    const Json j = to_json(r);
    EXPECT_EQ(j["axiom"], "coskew");
    EXPECT_EQ(j["genus"], 1);
    EXPECT_EQ(j["max_degree"], 3);
    EXPECT_EQ(j["checked"].get<std::size_t>(), necklaces_up_to(1, 1, 3).size());
    EXPECT_TRUE(j["violations"].empty());
    const Json s = to_json(verify_bialgebra(1, 3));
    EXPECT_EQ(s["suite"], "bialgebra");
    EXPECT_EQ(s["axioms"].size(), 5u);
    EXPECT_EQ(s["empirical"].size(), 2u);
    EXPECT_TRUE(s["passed"].get<bool>());
}
