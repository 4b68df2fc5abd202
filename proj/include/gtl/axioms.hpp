#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gtl/cobracket.hpp"
#include "gtl/derivation.hpp"
#include "gtl/enumerate.hpp"

namespace gtl {

// Outcome of an exhaustive axiom sweep. Violations are the failing basis
// inputs in enumeration order (length, then lexicographic).
struct AxiomReport {
    std::string axiom;
    int genus = 1;
    int max_degree = 0;
    std::size_t checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// delta(N(w)) for a word w.
using CobracketFn = std::function<PairTensorElement(const Word&)>;
// mu(w) for a word w; the second slot is cyclic-invariant.
using SelfIntersectionFn = std::function<PairTensorElement(const Word&)>;
// Bracket of two derivations given as tensors.
using BracketFn = std::function<TensorElement(const TensorElement&, const TensorElement&)>;
// Action of a derivation (given as a tensor) on an element of the tensor algebra.
using ActionFn = std::function<TensorElement(const TensorElement&, const TensorElement&)>;

inline CobracketFn schedler_cobracket_fn(int genus, int max_degree = kDefaultMaxDegree) {
    return [=](const Word& w) { return schedler_delta(w, genus, max_degree); };
}

inline SelfIntersectionFn mu_alg_fn(int genus, int max_degree = kDefaultMaxDegree) {
    return [=](const Word& w) { return mu_alg(w, genus, max_degree); };
}

inline BracketFn derivation_bracket_fn() {
    return [](const TensorElement& a, const TensorElement& b) { return raw_bracket(a, b); };
}

inline ActionFn derivation_action_fn() {
    return [](const TensorElement& d, const TensorElement& t) { return act_on_tensor(d, t); };
}

namespace detail {

// delta on a cyclic-invariant tensor through its value on words.
inline PairTensorElement cobracket_on(const CobracketFn& delta, const TensorElement& t) {
    PairTensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) {
        if (w.empty()) continue;
        PairTensorElement d = delta(w);
        d *= c / Rational(w.degree());
        r += d;
    }
    return r;
}

// (delta (x) 1) on a pair tensor whose first slot is cyclic-invariant.
inline TripleTensorElement cobracket_first_slot(const CobracketFn& delta, const PairTensorElement& t) {
    TripleTensorElement r(t.genus(), t.max_degree());
    for (const auto& [k, c] : t) {
        if (k[0].empty()) continue;
        for (const auto& [pq, v] : delta(k[0])) r.add_term({pq[0], pq[1], k[1]}, c * v / Rational(k[0].degree()));
    }
    return r;
}

// sigma(x)(p (x) q) = [x, p] (x) q + p (x) [x, q]
inline PairTensorElement bracket_slotwise(const BracketFn& bracket, const TensorElement& x, const PairTensorElement& t) {
    PairTensorElement r(t.genus(), t.max_degree());
    for (const auto& [k, c] : t) {
        for (const auto& [w, v] : bracket(x, word_element(t.genus(), k[0], 1, t.max_degree())))
            r.add_term({w, k[1]}, c * v);
        for (const auto& [w, v] : bracket(x, word_element(t.genus(), k[1], 1, t.max_degree())))
            r.add_term({k[0], w}, c * v);
    }
    return r;
}

template <class In, class F>
AxiomReport sweep(std::string axiom, int genus, int max_degree, const std::vector<In>& inputs, int jobs, F&& ok,
                  const std::function<std::string(const In&)>& describe) {
    AxiomReport report{std::move(axiom), genus, max_degree, inputs.size(), {}};
    const std::vector<char> results = parallel_map(inputs, jobs, [&](const In& in) -> char { return ok(in) ? 1 : 0; });
    for (std::size_t i = 0; i < inputs.size(); ++i)
        if (!results[i]) report.violations.push_back(describe(inputs[i]));
    return report;
}

inline std::string describe_word(const Word& w) { return w.str(); }
inline std::string describe_pair(const std::pair<Word, Word>& p) { return p.first.str() + "|" + p.second.str(); }

inline std::vector<std::pair<Word, Word>> necklace_pairs(int genus, int max_total) {
    std::vector<std::pair<Word, Word>> out;
    for (int m = 1; m < max_total; ++m)
        for (const Word& u : necklaces(genus, m))
            for (int n = 1; m + n <= max_total; ++n)
                for (const Word& v : necklaces(genus, n)) out.emplace_back(u, v);
    return out;
}

inline std::vector<std::pair<Word, Word>> word_necklace_pairs(int genus, int max_total) {
    std::vector<std::pair<Word, Word>> out;
    for (int m = 0; m < max_total; ++m)
        for (const Word& u : all_words(genus, m))
            for (int n = 1; m + n <= max_total; ++n)
                for (const Word& v : necklaces(genus, n)) out.emplace_back(u, v);
    return out;
}

}  // namespace detail

// delta + T delta = 0 on N(w), deg w <= max_degree.
inline AxiomReport check_coskew(const CobracketFn& delta, int genus, int max_degree, int jobs = 1) {
    return detail::sweep<Word>("coskew", genus, max_degree, necklaces_up_to(genus, 1, max_degree), jobs,
                               [&](const Word& w) {
                                   const PairTensorElement d = delta(w);
                                   return (d + switch_slots(d)).is_zero();
                               },
                               detail::describe_word);
}

// Cyclic sum of (delta (x) 1) delta vanishes.
inline AxiomReport check_cojacobi(const CobracketFn& delta, int genus, int max_degree, int jobs = 1) {
    return detail::sweep<Word>("cojacobi", genus, max_degree, necklaces_up_to(genus, 1, max_degree), jobs,
                               [&](const Word& w) {
                                   return cyclic_sum3(detail::cobracket_first_slot(delta, delta(w))).is_zero();
                               },
                               detail::describe_word);
}

// bracket o delta = 0.
inline AxiomReport check_involutive(const CobracketFn& delta, const BracketFn& bracket, int genus, int max_degree,
                                    int jobs = 1) {
    return detail::sweep<Word>("involutive", genus, max_degree, necklaces_up_to(genus, 1, max_degree), jobs,
                               [&](const Word& w) {
                                   TensorElement acc(genus, kDefaultMaxDegree);
                                   for (const auto& [k, c] : delta(w)) {
                                       TensorElement b = bracket(word_element(genus, k[0]), word_element(genus, k[1]));
                                       b *= c;
                                       acc += b;
                                   }
                                   return acc.is_zero();
                               },
                               detail::describe_word);
}

// delta[X, Y] = sigma(X) delta(Y) - sigma(Y) delta(X) for X = N(u), Y = N(v),
// over all necklace pairs with deg u + deg v <= max_degree.
inline AxiomReport check_compatibility(const BracketFn& bracket, const CobracketFn& delta, int genus, int max_degree,
                                       int jobs = 1) {
    using P = std::pair<Word, Word>;
    return detail::sweep<P>(
        "compatibility", genus, max_degree, detail::necklace_pairs(genus, max_degree), jobs,
        [&](const P& uv) {
            const TensorElement x = symmetrize_N(uv.first, genus);
            const TensorElement y = symmetrize_N(uv.second, genus);
            const PairTensorElement lhs = detail::cobracket_on(delta, bracket(x, y));
            const PairTensorElement rhs = detail::bracket_slotwise(bracket, x, detail::cobracket_on(delta, y)) -
                                          detail::bracket_slotwise(bracket, y, detail::cobracket_on(delta, x));
            return lhs == rhs;
        },
        std::function<std::string(const P&)>(detail::describe_pair));
}

// (1 (x) delta) mu = (1 (x) (1 - T)) (mu (x) 1) mu on words of degree <= max_degree.
inline AxiomReport check_comodule(const SelfIntersectionFn& mu, const CobracketFn& delta, int genus, int max_degree,
                                  int jobs = 1) {
    return detail::sweep<Word>("comodule", genus, max_degree, all_words_up_to(genus, 0, max_degree), jobs,
                               [&](const Word& w) {
                                   const PairTensorElement m = mu(w);
                                   TripleTensorElement lhs(genus, kDefaultMaxDegree);
                                   TripleTensorElement rhs(genus, kDefaultMaxDegree);
                                   for (const auto& [ab, c] : m) {
                                       if (!ab[1].empty())
                                           for (const auto& [pq, v] : delta(ab[1]))
                                               lhs.add_term({ab[0], pq[0], pq[1]}, c * v / Rational(ab[1].degree()));
                                       for (const auto& [pq, v] : mu(ab[0])) {
                                           rhs.add_term({pq[0], pq[1], ab[1]}, c * v);
                                           rhs.add_term({pq[0], ab[1], pq[1]}, -c * v);
                                       }
                                   }
                                   return lhs == rhs;
                               },
                               detail::describe_word);
}

// sum (Y.a) (x) b + a (x) [Y, b] - mu(Y.w) + sum_{delta Y = p (x) q} (p.w) (x) q = 0
// for Y = N(v) and mu(w) = sum a (x) b, over deg w + deg v <= max_degree.
inline AxiomReport check_bimodule_compat(const ActionFn& action, const BracketFn& bracket, const SelfIntersectionFn& mu,
                                         const CobracketFn& delta, int genus, int max_degree, int jobs = 1) {
    using P = std::pair<Word, Word>;
    return detail::sweep<P>(
        "bimodule_compat", genus, max_degree, detail::word_necklace_pairs(genus, max_degree), jobs,
        [&](const P& wv) {
            const TensorElement w = word_element(genus, wv.first);
            const TensorElement y = symmetrize_N(wv.second, genus);
            PairTensorElement res(genus, kDefaultMaxDegree);
            for (const auto& [ab, c] : mu(wv.first)) {
                for (const auto& [u, v] : action(y, word_element(genus, ab[0]))) res.add_term({u, ab[1]}, c * v);
                for (const auto& [u, v] : bracket(y, word_element(genus, ab[1]))) res.add_term({ab[0], u}, c * v);
            }
            for (const auto& [u, cu] : action(y, w))
                for (const auto& [k, v] : mu(u)) res.add_term(k, -cu * v);
            for (const auto& [pq, c] : detail::cobracket_on(delta, y))
                for (const auto& [u, v] : action(word_element(genus, pq[0]), w)) res.add_term({u, pq[1]}, c * v);
            return res.is_zero();
        },
        std::function<std::string(const P&)>(detail::describe_pair));
}

// -sum b . a = 0 for mu(w) = sum a (x) b.
inline AxiomReport check_bimodule_involutive(const ActionFn& action, const SelfIntersectionFn& mu, int genus,
                                             int max_degree, int jobs = 1) {
    return detail::sweep<Word>("bimodule_involutive", genus, max_degree, all_words_up_to(genus, 0, max_degree), jobs,
                               [&](const Word& w) {
                                   TensorElement acc(genus, kDefaultMaxDegree);
                                   for (const auto& [ab, c] : mu(w)) {
                                       TensorElement t =
                                           action(word_element(genus, ab[1]), word_element(genus, ab[0]));
                                       t *= -c;
                                       acc += t;
                                   }
                                   return acc.is_zero();
                               },
                               detail::describe_word);
}

}  // namespace gtl
