#pragma once

#include <stdexcept>
#include <string>

#include "gtl/derivation.hpp"
#include "gtl/series.hpp"
#include "gtl/tensor.hpp"

namespace gtl {

// delta(N(w)) = -sum_{i<j} (X_i . X_j) {N(inner) (x) N(outer) - N(outer) (x) N(inner)}
// with inner = X_{i+1}..X_{j-1} and outer = X_{j+1}..X_m X_1..X_{i-1}.
inline PairTensorElement schedler_delta(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    if (w.empty()) throw std::invalid_argument("schedler_delta: word must have degree >= 1");
    PairTensorElement r(genus, max_degree);
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const int p = pairing(w[i], w[j]);
            if (p == 0 || j == i + 1) continue;
            const Word outer = w.slice(j + 1, m) + w.slice(0, i);
            if (outer.empty()) continue;
            const TensorElement n_inner = symmetrize_N(w.slice(i + 1, j), genus, max_degree);
            const TensorElement n_outer = symmetrize_N(outer, genus, max_degree);
            for (const auto& [a, ca] : n_inner)
                for (const auto& [b, cb] : n_outer) {
                    const Rational c = Rational(p) * ca * cb;
                    r.add_term({a, b}, -c);
                    r.add_term({b, a}, c);
                }
        }
    }
    return r;
}

// delta on a cyclic-invariant tensor t: t = sum_w c_w w with t = N(sum_w c_w w / |w|).
inline PairTensorElement cobracket(const TensorElement& t) {
    PairTensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) {
        if (w.empty()) throw std::invalid_argument("cobracket: degree-0 term");
        PairTensorElement d = schedler_delta(w, t.genus(), t.max_degree());
        d *= c / Rational(w.degree());
        r += d;
    }
    return r;
}

inline PairTensorElement cobracket(const DerivationElement& d) { return cobracket(d.as_tensor()); }

// sum_{i<j} (X_i . X_j) X_1..X_{i-1} X_{j+1}..X_m (x) N(X_{i+1}..X_{j-1})
inline PairTensorElement mu_alg(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    PairTensorElement r(genus, max_degree);
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 2; j < m; ++j) {
            const int p = pairing(w[i], w[j]);
            if (p == 0) continue;
            const Word rest = w.slice(0, i) + w.slice(j + 1, m);
            for (const auto& [v, cv] : symmetrize_N(w.slice(i + 1, j), genus, max_degree))
                r.add_term({rest, v}, Rational(p) * cv);
        }
    }
    return r;
}

inline PairTensorElement mu_alg(const TensorElement& t) {
    PairTensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) {
        PairTensorElement part = mu_alg(w, t.genus(), t.max_degree());
        part *= c;
        r += part;
    }
    return r;
}

// s(omega) through omega^order, truncated at max_degree.
inline TensorElement s_of_omega(int genus, int order, int max_degree = kDefaultMaxDegree) {
    const TruncatedSeries s = s_series(order);
    const TensorElement om = omega(genus, max_degree);
    TensorElement power = tensor_unit(genus, max_degree);
    TensorElement r(genus, max_degree);
    for (int j = 0; j <= order && 2 * j <= max_degree; ++j) {
        TensorElement term = power;
        term *= s.coefficient(j);
        r += term;
        power = power * om;
    }
    return r;
}

// (a - e(a)) ~> (b - e(b)) + (a - e(a)) s(omega) (b - e(b))
inline TensorElement rho_truncated(const TensorElement& a, const TensorElement& b, int order) {
    if (a.genus() != b.genus()) throw std::invalid_argument("rho_truncated: genus mismatch");
    const int max_degree = std::min(a.max_degree(), b.max_degree());
    const TensorElement a1 = without_constant(a).with_max_degree(max_degree);
    const TensorElement b1 = without_constant(b).with_max_degree(max_degree);
    TensorElement r(a.genus(), max_degree);
    if (a1.is_zero() || b1.is_zero()) return r;
    r += bullet_leadsto(a1, b1);
    r += a1 * s_of_omega(a.genus(), order, max_degree) * b1;
    return r;
}

// (1 (x) iota) of a pair tensor.
inline PairTensorElement antipode_right(const PairTensorElement& t) {
    return map_slot<1>(t, [&](const Word& w) { return antipode(w, t.genus(), t.max_degree()); });
}

// kappa(X, Y) = -(X . Y) 1 (x) 1 - (1 (x) iota) Delta(X s(omega) Y)
inline PairTensorElement kappa_theta_letters(Letter x, Letter y, int genus, int order,
                                             int max_degree = kDefaultMaxDegree) {
    PairTensorElement r(genus, max_degree);
    r.add_term({Word{}, Word{}}, -Rational(pairing(x, y)));
    const TensorElement xsy = word_element(genus, Word{x}, 1, max_degree) * s_of_omega(genus, order, max_degree) *
                              word_element(genus, Word{y}, 1, max_degree);
    r -= antipode_right(coproduct(xsy));
    return r;
}

namespace detail {

// (prefix (x) 1) t (suffix (x) inner), accumulated into out with weight c.
inline void sandwich_into(PairTensorElement& out, const Word& prefix, const PairTensorElement& t, const Word& suffix,
                          const Word& inner, const Rational& c) {
    for (const auto& [k, ck] : t) out.add_term({prefix + k[0] + suffix, k[1] + inner}, c * ck);
}

// (1 (x) N) on a pair tensor.
inline PairTensorElement symmetrize_right(const PairTensorElement& t) {
    return map_slot<1>(t, [&](const Word& w) { return symmetrize_N(w, t.genus(), t.max_degree()); });
}

// (1 (x) iota) Delta(X Y) expanded by hand.
inline PairTensorElement iota_delta_pair(Letter x, Letter y, int genus, int max_degree) {
    PairTensorElement r(genus, max_degree);
    r.add_term({Word{x, y}, Word{}}, 1);
    r.add_term({Word{x}, Word{y}}, -1);
    r.add_term({Word{y}, Word{x}}, -1);
    r.add_term({Word{}, Word{y, x}}, 1);
    return r;
}

}  // namespace detail

// Degree-0 Laurent term of mu, evaluated from its recursive expression with
// the degree-1 base case mu_(0)(X) = -1/2 (1 (x) X).
inline PairTensorElement mu_theta_0(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    if (w.empty()) throw std::invalid_argument("mu_theta_0: word must have degree >= 1");
    const std::size_t m = w.size();
    const Rational half(-1, 2);
    PairTensorElement pairs(genus, max_degree);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            detail::sandwich_into(pairs, w.slice(0, i), detail::iota_delta_pair(w[i], w[j], genus, max_degree),
                                  w.slice(j + 1, m), w.slice(i + 1, j), 1);
    PairTensorElement r = detail::symmetrize_right(pairs);
    r *= half;
    for (std::size_t i = 0; i < m; ++i) r.add_term({w.without(i), Word{w[i]}}, half);
    return r;
}

// Laurent part mu_(p), p in {-2, -1, 0}: the degree m+p piece of
// (1 (x) -N) sum_{i<j} (prefix (x) 1) kappa(X_i, X_j) (suffix (x) inner)
// plus, for p = 0, the single-letter terms.
inline PairTensorElement mu_theta_part(int p, const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    if (p < -2 || p > 0)
        throw std::invalid_argument("mu_theta_part: only p in {-2, -1, 0} is independent of the expansion");
    const int m = w.degree();
    const int kappa_degree = p + 2;
    const int order = kappa_degree / 2;
    PairTensorElement acc(genus, max_degree);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const PairTensorElement k =
                kappa_theta_letters(w[i], w[j], genus, order, max_degree).homogeneous_part(kappa_degree);
            detail::sandwich_into(acc, w.slice(0, i), k, w.slice(j + 1, m), w.slice(i + 1, j), 1);
        }
    }
    PairTensorElement r = detail::symmetrize_right(acc);
    r *= Rational(-1);
    if (p == 0)
        for (int i = 0; i < m; ++i) r.add_term({w.without(i), Word{w[i]}}, Rational(-1, 2));
    return r.homogeneous_part(m + p);
}

// (1 - T)(N (x) 1) mu_(p)(w), the Laurent term delta_(p)(N(w)).
inline PairTensorElement delta_theta_part(int p, const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    if (w.empty()) throw std::invalid_argument("delta_theta_part: word must have degree >= 1");
    const PairTensorElement mu = p == 0 ? mu_theta_0(w, genus, max_degree) : mu_theta_part(p, w, genus, max_degree);
    const PairTensorElement n_left =
        map_slot<0>(mu, [&](const Word& v) { return symmetrize_N(v, genus, max_degree); });
    return n_left - switch_slots(n_left);
}

}  // namespace gtl
