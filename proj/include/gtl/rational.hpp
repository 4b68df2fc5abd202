#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtl {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : value_(static_cast<long long>(n)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = boost::multiprecision::cpp_rational(num);
        value_ /= boost::multiprecision::cpp_rational(den);
    }

    template <std::integral I, std::integral J>
    Rational(I num, J den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p/q" or "p" with an optional leading sign on p.
    static Rational parse(std::string_view text) {
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("Rational: empty integer");
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) throw std::invalid_argument("Rational: bad integer '" + std::string(s) + "'");
            for (std::size_t k = i; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9')
                    throw std::invalid_argument("Rational: bad integer '" + std::string(s) + "'");
            return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), BigInt(1));
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }
    bool is_integer() const { return denominator() == 1; }

    // Always "p/q", including "0/1" and "3/1".
    std::string str() const { return numerator().str() + "/" + denominator().str(); }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    boost::multiprecision::cpp_rational value_{0};
};

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace gtl
