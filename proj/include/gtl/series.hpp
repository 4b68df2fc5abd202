#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtl/rational.hpp"

namespace gtl {

// Univariate power series in one formal variable, known exactly through
// degree `order()`. A series flagged as a polynomial is exact in every degree
// (all coefficients past `order()` are zero), and for polynomials `order()` is
// the degree.
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, std::vector<Rational> coeffs)
        : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least one coefficient");
    }

    static TruncatedSeries zero(std::string var, int order) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
        return TruncatedSeries(std::move(var), std::vector<Rational>(order + 1));
    }

    static TruncatedSeries polynomial(std::string var, std::vector<Rational> coeffs) {
        TruncatedSeries p(std::move(var), std::move(coeffs));
        p.polynomial_ = true;
        p.trim();
        return p;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_polynomial() const { return polynomial_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(int n) const {
        if (n < 0) throw std::out_of_range("TruncatedSeries: negative exponent");
        if (n > order()) {
            if (polynomial_) return 0;
            throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
        }
        return coeffs_[n];
    }

    TruncatedSeries truncated(int order) const {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
        if (!polynomial_ && order > this->order())
            throw std::invalid_argument("TruncatedSeries: cannot raise truncation order");
        std::vector<Rational> c(order + 1);
        for (int i = 0; i <= std::min(order, this->order()); ++i) c[i] = coeffs_[i];
        return TruncatedSeries(var_, std::move(c));
    }

    TruncatedSeries retagged(std::string var) const {
        TruncatedSeries r = *this;
        r.var_ = std::move(var);
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_var(a, b);
        const int ord = result_order(a, b, std::max(a.order(), b.order()));
        std::vector<Rational> c(ord + 1);
        for (int i = 0; i <= ord; ++i) c[i] = a.coeff_or_zero(i) + b.coeff_or_zero(i);
        return a.polynomial_ && b.polynomial_ ? polynomial(a.var_, std::move(c))
                                              : TruncatedSeries(a.var_, std::move(c));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_var(a, b);
        const int ord = result_order(a, b, a.order() + b.order());
        std::vector<Rational> c(ord + 1);
        for (int i = 0; i <= std::min(ord, a.order()); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; j <= std::min(ord - i, b.order()); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return a.polynomial_ && b.polynomial_ ? polynomial(a.var_, std::move(c))
                                              : TruncatedSeries(a.var_, std::move(c));
    }

    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
        for (auto& c : a.coeffs_) c *= s;
        if (a.polynomial_) a.trim();
        return a;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    Rational coeff_or_zero(int i) const { return i <= order() ? coeffs_[i] : Rational(0); }

    static void check_var(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.var_ != b.var_)
            throw std::invalid_argument("TruncatedSeries: variable mismatch '" + a.var_ + "' vs '" + b.var_ + "'");
    }

    // Polynomials do not limit the order; truncated operands do.
    static int result_order(const TruncatedSeries& a, const TruncatedSeries& b, int exact_order) {
        if (a.polynomial_ && b.polynomial_) return exact_order;
        if (a.polynomial_) return b.order();
        if (b.polynomial_) return a.order();
        return std::min(a.order(), b.order());
    }

    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::string var_;
    std::vector<Rational> coeffs_;
    bool polynomial_ = false;
};

// outer(inner): `outer` is a series in its own variable, the result is a
// series in inner's variable. A nonzero constant term in `inner` is only
// allowed when `outer` is a polynomial.
inline TruncatedSeries substitute(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    const bool inner_has_constant = !inner.coefficient(0).is_zero();
    if (inner_has_constant && !outer.is_polynomial())
        throw std::domain_error("substitute: inner series has a nonzero constant term");

    if (outer.is_polynomial() && inner.is_polynomial()) {
        auto acc = TruncatedSeries::polynomial(inner.var(), {outer.coefficients().back()});
        for (int i = outer.order() - 1; i >= 0; --i)
            acc = acc * inner + TruncatedSeries::polynomial(inner.var(), {outer.coefficients()[i]});
        return acc;
    }

    int ord = inner.is_polynomial() ? outer.order() : inner.order();
    if (!outer.is_polynomial()) ord = std::min(ord, outer.order());
    const auto in = inner.truncated(ord);
    auto acc = TruncatedSeries::zero(inner.var(), ord);
    for (int i = outer.order(); i >= 0; --i)
        acc = acc * in + TruncatedSeries::polynomial(inner.var(), {outer.coefficients()[i]});
    return acc;
}

// Bernoulli numbers B_0..B_n from sum_{k<=m} C(m+1,k) B_k = 0, so B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k), 1) * b[k];
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

inline Rational bernoulli(int n) { return bernoulli_numbers(n).back(); }

// s(z) = 1/(e^{-z} - 1) + 1/z = -sum_{n>=1} (-1)^n B_n z^{n-1} / n!
inline TruncatedSeries s_series(int order) {
    if (order < 0) throw std::invalid_argument("s_series: negative order");
    const auto b = bernoulli_numbers(order + 1);
    std::vector<Rational> c(order + 1);
    for (int j = 0; j <= order; ++j) {
        const int n = j + 1;
        const Rational term = b[n] / Rational(factorial(n), 1);
        c[j] = (n % 2 == 0) ? -term : term;
    }
    return TruncatedSeries("z", std::move(c));
}

// h(x) = sum_n (-1)^n/(n+2) (x-1)^n, as a series in the variable "x-1".
inline TruncatedSeries h_series(int order) {
    if (order < 0) throw std::invalid_argument("h_series: negative order");
    std::vector<Rational> c(order + 1);
    for (int n = 0; n <= order; ++n) c[n] = Rational(n % 2 == 0 ? 1 : -1, n + 2);
    return TruncatedSeries("x-1", std::move(c));
}

// sum_{k=0}^n C(n,k) (-1)^{n-k} sum_{j<k} x^j
inline TruncatedSeries binomial_geometric_sum(int n) {
    if (n < 1) throw std::invalid_argument("binomial_geometric_sum: n must be positive");
    std::vector<Rational> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        const Rational w((n - k) % 2 == 0 ? binomial(n, k) : BigInt(-binomial(n, k)), BigInt(1));
        for (int j = 0; j < k; ++j) c[j] += w;
    }
    return TruncatedSeries::polynomial("x", std::move(c));
}

// f_n(x) = sum_{k=0}^n C(n,k) (-1)^{n-k} sum_{j<k} (k-j) x^j, from the double sum.
inline TruncatedSeries f_n_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("f_n_polynomial: n must be positive");
    std::vector<Rational> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        const Rational w((n - k) % 2 == 0 ? binomial(n, k) : BigInt(-binomial(n, k)), BigInt(1));
        for (int j = 0; j < k; ++j) c[j] += w * Rational(k - j);
    }
    return TruncatedSeries::polynomial("x", std::move(c));
}

inline TruncatedSeries polynomial_power(const TruncatedSeries& p, int e) {
    auto r = TruncatedSeries::polynomial(p.var(), {1});
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// t + (t^2 - 1) h(t) at t = 1 + s.
inline TruncatedSeries obstruction_series(int order) {
    if (order < 0) throw std::invalid_argument("obstruction_series: negative order");
    const auto s = TruncatedSeries::polynomial("s", {0, 1});
    const auto t = TruncatedSeries::polynomial("s", {1, 1});
    const auto h_at_t = substitute(h_series(order), s);
    const auto t2_minus_1 = t * t - TruncatedSeries::polynomial("s", {1});
    return (t + t2_minus_1 * h_at_t).truncated(order);
}

}  // namespace gtl
