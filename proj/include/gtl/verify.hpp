#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "gtl/axioms.hpp"
#include "gtl/cobracket.hpp"
#include "gtl/enumerate.hpp"
#include "gtl/series.hpp"
#include "gtl/twist.hpp"

namespace gtl {

// Named tally of one identity over a sample set.
struct IdentityCount {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> first_failures;

    void record(bool ok, const std::string& input) {
        ++checked;
        if (ok) return;
        ++failed;
        if (first_failures.size() < 10) first_failures.push_back(input);
    }
};

inline std::vector<IdentityCount> identity_counts(std::initializer_list<const char*> names) {
    std::vector<IdentityCount> out;
    for (const char* n : names) out.push_back(IdentityCount{n, 0, 0, {}});
    return out;
}

struct SuiteReport {
    std::string suite;
    std::vector<IdentityCount> identities;
    std::vector<AxiomReport> axioms;
    std::vector<AxiomReport> empirical;

    bool passed() const {
        for (const auto& i : identities)
            if (i.failed) return false;
        for (const auto& a : axioms)
            if (!a.passed()) return false;
        return true;
    }
};

// Every word of degree 1..max_degree at `genus`, then `samples` seeded random
// words of degree 1..max_degree at `random_genus`.
struct WordSample {
    int genus = 1;
    Word word;
};

inline std::vector<WordSample> word_sample(int genus, int max_degree, int random_genus, std::size_t samples,
                                           std::uint64_t seed) {
    std::vector<WordSample> out;
    for (auto& w : all_words_up_to(genus, 1, max_degree)) out.push_back({genus, std::move(w)});
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
        out.push_back({random_genus, random_word(rng, random_genus, len)});
    }
    return out;
}

inline std::string describe(const WordSample& s) { return "g" + std::to_string(s.genus) + ":" + s.word.str(); }

// mu_(0)(w) = -1/2 (1 (x) N(w)) by the recursive formula and by the kappa
// path; delta_(p) N(w) = 0 for p = -1, 0; delta_(-2) N(w) = Schedler's delta.
inline SuiteReport verify_mu_zero(const std::vector<WordSample>& words, int jobs = 1) {
    struct Row {
        bool mu0 = true, mu0_kappa = true, d_minus1 = true, d_zero = true, d_minus2 = true;
    };
    const auto rows = parallel_map(words, jobs, [](const WordSample& s) {
        Row r;
        PairTensorElement expected(s.genus);
        for (const auto& [v, c] : symmetrize_N(s.word, s.genus)) expected.add_term({Word{}, v}, Rational(-1, 2) * c);
        r.mu0 = mu_theta_0(s.word, s.genus) == expected;
        r.mu0_kappa = mu_theta_part(0, s.word, s.genus) == expected;
        r.d_minus1 = delta_theta_part(-1, s.word, s.genus).is_zero();
        r.d_zero = delta_theta_part(0, s.word, s.genus).is_zero();
        r.d_minus2 = delta_theta_part(-2, s.word, s.genus) == schedler_delta(s.word, s.genus);
        return r;
    });
    SuiteReport rep{"mu-zero",
                    identity_counts({"mu_theta_0", "mu_theta_0_via_kappa", "delta_minus1_zero", "delta_zero_zero",
                                     "delta_minus2_schedler"}),
                    {}, {}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::string in = describe(words[i]);
        rep.identities[0].record(rows[i].mu0, in);
        rep.identities[1].record(rows[i].mu0_kappa, in);
        rep.identities[2].record(rows[i].d_minus1, in);
        rep.identities[3].record(rows[i].d_zero, in);
        rep.identities[4].record(rows[i].d_minus2, in);
    }
    return rep;
}

// Both polynomial identities for f_n, n = 1..max_n, and the leading
// coefficients of s(z).
inline SuiteReport verify_fn(int max_n) {
    SuiteReport rep{"fn", identity_counts({"geometric_sum", "f_n_closed_form", "s_coefficients"}), {}, {}};
    const auto x = TruncatedSeries::polynomial("x", {0, 1});
    const auto x_minus_1 = TruncatedSeries::polynomial("x", {-1, 1});
    for (int n = 1; n <= max_n; ++n) {
        const std::string in = "n=" + std::to_string(n);
        rep.identities[0].record(binomial_geometric_sum(n) == polynomial_power(x_minus_1, n - 1), in);
        const auto closed = n == 1 ? TruncatedSeries::polynomial("x", {1}) : x * polynomial_power(x_minus_1, n - 2);
        rep.identities[1].record(f_n_polynomial(n) == closed, in);
    }
    const std::vector<Rational> shown{Rational(-1, 2), Rational(-1, 12), 0, Rational(1, 720), 0, Rational(-1, 30240)};
    const auto s = s_series(5);
    for (int j = 0; j <= 5; ++j) rep.identities[2].record(s.coefficient(j) == shown[j], "z^" + std::to_string(j));
    return rep;
}

// Lie bialgebra axioms for Schedler's delta with the derivation bracket,
// comodule axiom for mu_alg, and the bimodule conditions (reported only).
inline SuiteReport verify_bialgebra(int genus, int max_degree, int jobs = 1) {
    const auto delta = schedler_cobracket_fn(genus);
    const auto bracket = derivation_bracket_fn();
    const auto mu = mu_alg_fn(genus);
    const auto action = derivation_action_fn();
    SuiteReport rep{"bialgebra", {}, {}, {}};
    rep.axioms.push_back(check_coskew(delta, genus, max_degree, jobs));
    rep.axioms.push_back(check_cojacobi(delta, genus, max_degree, jobs));
    rep.axioms.push_back(check_involutive(delta, bracket, genus, max_degree, jobs));
    rep.axioms.push_back(check_compatibility(bracket, delta, genus, max_degree, jobs));
    rep.axioms.push_back(check_comodule(mu, delta, genus, max_degree, jobs));
    rep.empirical.push_back(check_bimodule_compat(action, bracket, mu, delta, genus, max_degree, jobs));
    rep.empirical.push_back(check_bimodule_involutive(action, mu, genus, max_degree, jobs));
    return rep;
}

// Per-code checks over the generated corpus: x_p + y_p = c, Z-basis, the
// epsilon-sum steps between adjacent arcs, the single-flip rule, existence of
// a basepoint with nonzero sum and the collapse of the specialized series.
inline SuiteReport verify_obstruction_corpus(int max_crossings, std::uint64_t seed, int order, int jobs = 1) {
    const auto corpus = generate_corpus(max_crossings, seed);
    const TruncatedSeries base = obstruction_series(order);
    struct Row {
        bool relation = true, basis = true, step = true, flip = true, nonzero = true, series = true;
    };
    const auto rows = parallel_map(corpus, jobs, [&](const GaussCode& code) {
        Row r;
        const auto h = homology_classes(code);
        for (std::size_t p = 0; p < h.x.size(); ++p)
            for (std::size_t i = 0; i < h.c.size(); ++i) r.relation = r.relation && h.x[p][i] + h.y[p][i] == h.c[i];
        r.basis = basis_check(code).ok;
        const int arcs = code.arc_count();
        std::vector<long long> sums;
        std::vector<std::map<int, int>> signs;
        for (int a = 0; a < arcs; ++a) {
            const GaussCode moved = shift_basepoint(code, a);
            sums.push_back(epsilon_sum(moved));
            signs.push_back(moved.signs);
        }
        if (code.crossings > 0) {
            r.nonzero = false;
            for (int a = 0; a < arcs; ++a) {
                const int b = (a + 1) % arcs;
                r.step = r.step && (sums[b] - sums[a] == 2 || sums[a] - sums[b] == 2);
                const int crossed = code.sequence[a].crossing;
                for (const auto& [id, s] : signs[a])
                    r.flip = r.flip && (id == crossed ? signs[b].at(id) == -s : signs[b].at(id) == s);
                r.nonzero = r.nonzero || sums[a] != 0;
            }
        }
        if (r.basis) {
            const auto special = specialize_phi(pimu_element(code, order), code);
            r.series = special == Rational(-epsilon_sum(code)) * base;
        }
        return r;
    });
    SuiteReport rep{"obstruction-corpus",
                    identity_counts({"x_plus_y_equals_c", "z_basis", "adjacent_sum_step_2", "single_sign_flip",
                                     "some_nonzero_sum", "specialized_series"}),
                    {}, {}};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::string in;
        for (const auto& v : corpus[i].sequence) in += std::to_string(v.crossing);
        if (in.empty()) in = "circle";
        rep.identities[0].record(rows[i].relation, in);
        rep.identities[1].record(rows[i].basis, in);
        rep.identities[2].record(rows[i].step, in);
        rep.identities[3].record(rows[i].flip, in);
        rep.identities[4].record(rows[i].nonzero, in);
        rep.identities[5].record(rows[i].series, in);
    }
    return rep;
}

}  // namespace gtl
