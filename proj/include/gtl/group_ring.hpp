#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtl/series.hpp"

namespace gtl {

// Truncated power series in variables s_1..s_n, realizing the completed group
// ring of Z^n through g_i -> 1 + s_i. Truncation is by total degree.
class GroupRingSeries {
public:
    using Monomial = std::vector<int>;

    GroupRingSeries(int variables, int order) : n_(variables), order_(order) {
        if (variables < 0) throw std::invalid_argument("GroupRingSeries: negative variable count");
        if (order < 0) throw std::invalid_argument("GroupRingSeries: negative order");
    }

    static GroupRingSeries constant(int variables, int order, const Rational& c) {
        GroupRingSeries r(variables, order);
        r.add_term(Monomial(static_cast<std::size_t>(variables), 0), c);
        return r;
    }

    // prod_i (1 + s_i)^{e_i} for an integer exponent vector: the coefficient of
    // s^m is prod_i binom(e_i, m_i).
    static GroupRingSeries group_element(const std::vector<long long>& exponents, int order) {
        const int n = static_cast<int>(exponents.size());
        std::vector<std::vector<Rational>> binom(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) binom[i] = binomial_series(exponents[i], order);
        GroupRingSeries r(n, order);
        Monomial m(static_cast<std::size_t>(n), 0);
        auto fill = [&](auto& self, int i, int budget, const Rational& c) -> void {
            if (i == n) {
                r.terms_.emplace(m, c);
                return;
            }
            for (int d = 0; d <= budget; ++d) {
                const Rational& b = binom[i][d];
                if (b.is_zero()) break;
                m[i] = d;
                self(self, i + 1, budget - d, c * b);
            }
            m[i] = 0;
        };
        fill(fill, 0, order, Rational(1));
        return r;
    }

    // Coefficients of (1 + s)^e through s^order for integer e.
    static std::vector<Rational> binomial_series(long long e, int order) {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
        Rational term = 1;
        for (int d = 0; d <= order; ++d) {
            c[d] = term;
            term = term * Rational(e - d) / Rational(d + 1);
        }
        return c;
    }

    int variables() const { return n_; }
    int order() const { return order_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static int total_degree(const Monomial& m) {
        int d = 0;
        for (int e : m) d += e;
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("GroupRingSeries: monomial arity");
        if (c.is_zero() || total_degree(m) > order_) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial(static_cast<std::size_t>(n_), 0)); }

    // The class in the completed group ring modulo constants.
    GroupRingSeries without_constant() const {
        GroupRingSeries r = *this;
        r.add_term(Monomial(static_cast<std::size_t>(n_), 0), -constant_term());
        return r;
    }

    GroupRingSeries& operator+=(const GroupRingSeries& o) {
        check(o);
        order_ = std::min(order_, o.order_);
        std::erase_if(terms_, [&](const auto& kv) { return total_degree(kv.first) > order_; });
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    GroupRingSeries& operator-=(const GroupRingSeries& o) { return *this += o * Rational(-1); }

    friend GroupRingSeries operator+(GroupRingSeries a, const GroupRingSeries& b) { return a += b; }
    friend GroupRingSeries operator-(GroupRingSeries a, const GroupRingSeries& b) { return a -= b; }

    friend GroupRingSeries operator*(GroupRingSeries a, const Rational& s) {
        if (s.is_zero()) a.terms_.clear();
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }
    friend GroupRingSeries operator*(const Rational& s, GroupRingSeries a) { return std::move(a) * s; }

    friend GroupRingSeries operator*(const GroupRingSeries& a, const GroupRingSeries& b) {
        a.check(b);
        GroupRingSeries r(a.n_, std::min(a.order_, b.order_));
        const auto bb = b.by_degree();
        for (const auto& [ma, ca] : a.terms_) {
            const int da = total_degree(ma);
            for (int db = 0; da + db <= r.order_ && db < static_cast<int>(bb.size()); ++db)
                for (const auto* term : bb[db]) {
                    Monomial m = ma;
                    for (int i = 0; i < a.n_; ++i) m[i] += term->first[i];
                    r.add_term(m, ca * term->second);
                }
        }
        return r;
    }

    friend bool operator==(const GroupRingSeries& a, const GroupRingSeries& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void check(const GroupRingSeries& o) const {
        if (n_ != o.n_) throw std::invalid_argument("GroupRingSeries: variable count mismatch");
    }

    std::vector<std::vector<const std::pair<const Monomial, Rational>*>> by_degree() const {
        std::vector<std::vector<const std::pair<const Monomial, Rational>*>> out(static_cast<std::size_t>(order_) + 1);
        for (const auto& kv : terms_) out[total_degree(kv.first)].push_back(&kv);
        return out;
    }

    int n_;
    int order_;
    std::map<Monomial, Rational> terms_;
};

// outer(inner) for a univariate series outer and inner with zero constant term.
inline GroupRingSeries compose(const TruncatedSeries& outer, const GroupRingSeries& inner) {
    if (!inner.constant_term().is_zero())
        throw std::domain_error("compose: inner series has a nonzero constant term");
    const int order = outer.is_polynomial() ? inner.order() : std::min(inner.order(), outer.order());
    GroupRingSeries acc(inner.variables(), order);
    for (int i = std::min(order, outer.order()); i >= 0; --i)
        acc = acc * inner + GroupRingSeries::constant(inner.variables(), order, outer.coefficient(i));
    return acc;
}

// Substitutes s_i -> images[i] (each with zero constant term) and returns a
// univariate series in `var`.
inline TruncatedSeries substitute_all(const GroupRingSeries& series, const std::vector<TruncatedSeries>& images,
                                      const std::string& var) {
    if (static_cast<int>(images.size()) != series.variables())
        throw std::invalid_argument("substitute_all: one image per variable required");
    const int order = series.order();
    std::vector<std::vector<TruncatedSeries>> powers;
    for (const auto& img : images) {
        if (!img.coefficient(0).is_zero()) throw std::domain_error("substitute_all: image has a constant term");
        std::vector<TruncatedSeries> p{TruncatedSeries::polynomial(var, {1}).truncated(order)};
        const TruncatedSeries base = img.truncated(order);
        for (int d = 1; d <= order; ++d) p.push_back(p.back() * base);
        powers.push_back(std::move(p));
    }
    TruncatedSeries r = TruncatedSeries::zero(var, order);
    for (const auto& [m, c] : series.terms()) {
        TruncatedSeries term = TruncatedSeries::polynomial(var, {c}).truncated(order);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * powers[i][m[i]];
        r = r + term;
    }
    return r;
}

}  // namespace gtl
