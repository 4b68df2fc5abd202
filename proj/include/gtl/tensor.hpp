#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "gtl/rational.hpp"

namespace gtl {

inline constexpr int kDefaultMaxDegree = 24;

enum class LetterKind : std::uint8_t { A = 0, B = 1 };

// Symplectic basis letter A_i or B_i. Letters are totally ordered
// A_1 < B_1 < A_2 < B_2 < ... through their code 2(i-1) + kind.
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(LetterKind kind, int index) : code_(static_cast<std::uint8_t>(2 * (index - 1) + static_cast<int>(kind))) {
        if (index < 1 || index > 127) throw std::invalid_argument("Letter: index out of range");
    }

    static constexpr Letter from_code(int code) {
        Letter l;
        l.code_ = static_cast<std::uint8_t>(code);
        return l;
    }

    // "a3" -> A_3, "b1" -> B_1.
    static Letter parse(std::string_view s) {
        if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b' && s[0] != 'A' && s[0] != 'B'))
            throw std::invalid_argument("Letter: cannot parse '" + std::string(s) + "'");
        int index = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9' || index > 127)
                throw std::invalid_argument("Letter: cannot parse '" + std::string(s) + "'");
            index = 10 * index + (s[i] - '0');
        }
        const bool is_a = s[0] == 'a' || s[0] == 'A';
        return Letter(is_a ? LetterKind::A : LetterKind::B, index);
    }

    constexpr LetterKind kind() const { return static_cast<LetterKind>(code_ & 1); }
    constexpr int index() const { return code_ / 2 + 1; }
    constexpr int code() const { return code_; }

    std::string name() const { return (kind() == LetterKind::A ? "a" : "b") + std::to_string(index()); }

    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    std::uint8_t code_ = 0;
};

constexpr Letter A(int i) { return Letter(LetterKind::A, i); }
constexpr Letter B(int i) { return Letter(LetterKind::B, i); }

// Intersection pairing: (A_i . B_i) = 1, (B_i . A_i) = -1, all others 0.
constexpr int pairing(Letter x, Letter y) {
    if (x.index() != y.index() || x.kind() == y.kind()) return 0;
    return x.kind() == LetterKind::A ? 1 : -1;
}

inline std::vector<Letter> basis_letters(int genus) {
    std::vector<Letter> out;
    for (int i = 1; i <= genus; ++i) {
        out.push_back(A(i));
        out.push_back(B(i));
    }
    return out;
}

// Word in the letters; the empty word is the unit of the tensor algebra.
// Words are ordered by length first, then lexicographically.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Concatenated letter names, e.g. "a1b1a2"; "" and "1" give the empty word.
    static Word parse(std::string_view s) {
        Word w;
        if (s == "1") return w;
        std::size_t i = 0;
        while (i < s.size()) {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            w.letters_.push_back(Letter::parse(s.substr(i, j - i)));
            i = j;
        }
        return w;
    }

    std::size_t size() const { return letters_.size(); }
    int degree() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    const std::vector<Letter>& letters() const { return letters_; }

    int max_index() const {
        int m = 0;
        for (Letter l : letters_) m = std::max(m, l.index());
        return m;
    }

    // Letters [first, last).
    Word slice(std::size_t first, std::size_t last) const {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(last)));
    }

    Word without(std::size_t pos) const {
        Word w = *this;
        w.letters_.erase(w.letters_.begin() + static_cast<std::ptrdiff_t>(pos));
        return w;
    }

    // X_1 X_2 ... X_m -> X_{p+1} ... X_m X_1 ... X_p
    Word rotated(std::size_t p) const {
        if (letters_.empty()) return *this;
        Word w = *this;
        std::rotate(w.letters_.begin(), w.letters_.begin() + static_cast<std::ptrdiff_t>(p % size()), w.letters_.end());
        return w;
    }

    Word reversed() const {
        Word w = *this;
        std::reverse(w.letters_.begin(), w.letters_.end());
        return w;
    }

    Word sorted() const {
        Word w = *this;
        std::sort(w.letters_.begin(), w.letters_.end());
        return w;
    }

    Word& operator+=(const Word& o) {
        letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
        return *this;
    }
    Word& operator+=(Letter l) {
        letters_.push_back(l);
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }
    friend Word operator+(Word a, Letter b) { return a += b; }
    friend Word operator+(Letter a, const Word& b) { return Word{a} + b; }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (Letter l : letters_) s += l.name();
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

template <std::size_t N>
using WordTuple = std::array<Word, N>;

namespace detail {

inline int key_degree(const Word& w) { return w.degree(); }
inline int key_max_index(const Word& w) { return w.max_index(); }
inline Word key_concat(const Word& a, const Word& b) { return a + b; }

template <std::size_t N>
int key_degree(const WordTuple<N>& k) {
    int d = 0;
    for (const auto& w : k) d += w.degree();
    return d;
}
template <std::size_t N>
int key_max_index(const WordTuple<N>& k) {
    int m = 0;
    for (const auto& w : k) m = std::max(m, w.max_index());
    return m;
}
template <std::size_t N>
WordTuple<N> key_concat(const WordTuple<N>& a, const WordTuple<N>& b) {
    WordTuple<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace detail

// Finitely supported Q-linear combination of basis keys (words or tuples of
// words) at a fixed genus. Terms above `max_degree` (total degree for tuples)
// are dropped on insertion; zero coefficients are never stored.
template <class Key>
class LinearCombination {
public:
    using Terms = std::map<Key, Rational>;

    explicit LinearCombination(int genus, int max_degree = kDefaultMaxDegree) : genus_(genus), max_degree_(max_degree) {
        if (genus < 1) throw std::invalid_argument("genus must be positive");
        if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
    }

    static LinearCombination term(int genus, Key key, const Rational& c = 1, int max_degree = kDefaultMaxDegree) {
        LinearCombination r(genus, max_degree);
        r.add_term(key, c);
        return r;
    }

    int genus() const { return genus_; }
    int max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    void add_term(const Key& key, const Rational& c) {
        if (c.is_zero()) return;
        if (detail::key_max_index(key) > genus_)
            throw std::invalid_argument("letter index exceeds genus " + std::to_string(genus_));
        if (detail::key_degree(key) > max_degree_) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Parts of the given (total) degree.
    LinearCombination homogeneous_part(int degree) const {
        LinearCombination r(genus_, max_degree_);
        for (const auto& [k, c] : terms_)
            if (detail::key_degree(k) == degree) r.terms_.emplace(k, c);
        return r;
    }

    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        const int d = detail::key_degree(terms_.begin()->first);
        for (const auto& [k, c] : terms_)
            if (detail::key_degree(k) != d) return std::nullopt;
        return d;
    }

    int min_degree() const {
        int m = max_degree_ + 1;
        for (const auto& [k, c] : terms_) m = std::min(m, detail::key_degree(k));
        return m;
    }

    std::vector<int> degrees() const {
        std::vector<int> d;
        for (const auto& [k, c] : terms_) d.push_back(detail::key_degree(k));
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        return d;
    }

    LinearCombination with_max_degree(int max_degree) const {
        LinearCombination r(genus_, max_degree);
        for (const auto& [k, c] : terms_) r.add_term(k, c);
        return r;
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        check_genus(o);
        if (o.max_degree_ < max_degree_) *this = with_max_degree(o.max_degree_);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) { return *this += -o; }
    LinearCombination& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    LinearCombination operator-() const {
        LinearCombination r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }

    // Concatenation product (slot-wise for tuples); truncated at the smaller bound.
    friend LinearCombination operator*(const LinearCombination& a, const LinearCombination& b) {
        a.check_genus(b);
        LinearCombination r(a.genus_, std::min(a.max_degree_, b.max_degree_));
        for (const auto& [ka, ca] : a.terms_) {
            const int da = detail::key_degree(ka);
            for (const auto& [kb, cb] : b.terms_)
                if (da + detail::key_degree(kb) <= r.max_degree_) r.add_term(detail::key_concat(ka, kb), ca * cb);
        }
        return r;
    }

    // Equality compares terms and genus; the truncation bound is metadata.
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
        return a.genus_ == b.genus_ && a.terms_ == b.terms_;
    }

    // Applies f to every key and sums c * f(key).
    template <class F>
    auto map_linear(F&& f) const {
        using Out = std::invoke_result_t<F&, const Key&>;
        std::optional<Out> acc;
        for (const auto& [k, c] : terms_) {
            Out image = f(k);
            image *= c;
            if (!acc) acc.emplace(std::move(image));
            else *acc += image;
        }
        return acc;
    }

private:
    void check_genus(const LinearCombination& o) const {
        if (genus_ != o.genus_) throw std::invalid_argument("genus mismatch");
    }

    int genus_;
    int max_degree_;
    Terms terms_;
};

using TensorElement = LinearCombination<Word>;
using PairTensorElement = LinearCombination<WordTuple<2>>;
using TripleTensorElement = LinearCombination<WordTuple<3>>;

inline TensorElement word_element(int genus, const Word& w, const Rational& c = 1, int max_degree = kDefaultMaxDegree) {
    return TensorElement::term(genus, w, c, max_degree);
}

inline PairTensorElement pair_element(int genus, const Word& left, const Word& right, const Rational& c = 1,
                                      int max_degree = kDefaultMaxDegree) {
    return PairTensorElement::term(genus, {left, right}, c, max_degree);
}

inline TensorElement tensor_unit(int genus, int max_degree = kDefaultMaxDegree) {
    return word_element(genus, Word{}, 1, max_degree);
}

// a (x) b for tensors a, b.
inline PairTensorElement outer_product(const TensorElement& a, const TensorElement& b) {
    PairTensorElement r(a.genus(), a.max_degree() + b.max_degree());
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) r.add_term({wa, wb}, ca * cb);
    return r;
}

// Applies a linear map given on words to slot I of every term.
template <std::size_t I, std::size_t N, class F>
LinearCombination<WordTuple<N>> map_slot(const LinearCombination<WordTuple<N>>& t, F&& f, int max_degree) {
    LinearCombination<WordTuple<N>> r(t.genus(), max_degree);
    for (const auto& [k, c] : t) {
        const TensorElement image = f(k[I]);
        for (const auto& [w, cw] : image) {
            auto key = k;
            key[I] = w;
            r.add_term(key, c * cw);
        }
    }
    return r;
}

template <std::size_t I, std::size_t N, class F>
LinearCombination<WordTuple<N>> map_slot(const LinearCombination<WordTuple<N>>& t, F&& f) {
    return map_slot<I>(t, std::forward<F>(f), t.max_degree());
}

// T(a (x) b) = b (x) a.
inline PairTensorElement switch_slots(const PairTensorElement& t) {
    PairTensorElement r(t.genus(), t.max_degree());
    for (const auto& [k, c] : t) r.add_term({k[1], k[0]}, c);
    return r;
}

// Cyclic permutation on three slots: x(x)y(x)z + y(x)z(x)x + z(x)x(x)y.
inline TripleTensorElement cyclic_sum3(const TripleTensorElement& t) {
    TripleTensorElement r(t.genus(), t.max_degree());
    for (const auto& [k, c] : t) {
        r.add_term(k, c);
        r.add_term({k[1], k[2], k[0]}, c);
        r.add_term({k[2], k[0], k[1]}, c);
    }
    return r;
}

// Degree-2 symplectic form  sum_i A_i B_i - B_i A_i.
inline TensorElement omega(int genus, int max_degree = kDefaultMaxDegree) {
    TensorElement r(genus, max_degree);
    for (int i = 1; i <= genus; ++i) {
        r.add_term({A(i), B(i)}, 1);
        r.add_term({B(i), A(i)}, -1);
    }
    return r;
}

// nu: X_1 X_2 ... X_m -> X_2 ... X_m X_1
inline Word cyclic_nu(const Word& w) { return w.rotated(1); }

inline TensorElement cyclic_nu(const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) r.add_term(cyclic_nu(w), c);
    return r;
}

// N = sum_{p<m} nu^p on degree m, N = 0 on degree 0.
inline TensorElement symmetrize_N(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    TensorElement r(genus, max_degree);
    for (std::size_t p = 0; p < w.size(); ++p) r.add_term(w.rotated(p), 1);
    return r;
}

inline TensorElement symmetrize_N(const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t)
        for (std::size_t p = 0; p < w.size(); ++p) r.add_term(w.rotated(p), c);
    return r;
}

inline bool is_cyclic_invariant(const TensorElement& t) {
    for (const auto& [w, c] : t)
        if (t.coefficient(cyclic_nu(w)) != c) return false;
    return true;
}

// iota(X_1 ... X_m) = (-1)^m X_m ... X_1
inline TensorElement antipode(const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) r.add_term(w.reversed(), w.size() % 2 == 0 ? c : -c);
    return r;
}

inline TensorElement antipode(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    return antipode(word_element(genus, w, 1, max_degree));
}

// Coproduct of a word: sum over all splittings of positions into a
// subsequence and its complement.
inline PairTensorElement coproduct(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    PairTensorElement r(genus, max_degree);
    const std::size_t m = w.size();
    if (m >= 30) throw std::invalid_argument("coproduct: word too long");
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Word left, right;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (1u << i)) left += w[i];
            else right += w[i];
        }
        r.add_term({left, right}, 1);
    }
    return r;
}

inline PairTensorElement coproduct(const TensorElement& t) {
    PairTensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) {
        auto d = coproduct(w, t.genus(), t.max_degree());
        d *= c;
        r += d;
    }
    return r;
}

// Delta(t) - t (x) 1 - 1 (x) t, with the degree-0 part of t also counted.
inline PairTensorElement reduced_coproduct(const TensorElement& t) {
    PairTensorElement r = coproduct(t);
    for (const auto& [w, c] : t) {
        r.add_term({w, Word{}}, -c);
        r.add_term({Word{}, w}, -c);
    }
    return r;
}

inline bool is_primitive(const TensorElement& t) {
    return t.coefficient(Word{}).is_zero() && reduced_coproduct(t).is_zero();
}

// Right-nested commutator [X_1, [X_2, [..., [X_{m-1}, X_m]]]].
inline TensorElement dynkin_phi(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
    if (w.empty()) throw std::domain_error("dynkin_phi: degree-0 term");
    TensorElement acc = word_element(genus, Word{w.back()}, 1, max_degree);
    for (std::size_t i = w.size() - 1; i-- > 0;) {
        TensorElement next(genus, max_degree);
        for (const auto& [u, c] : acc) {
            next.add_term(w[i] + u, c);
            next.add_term(u + w[i], -c);
        }
        acc = std::move(next);
    }
    return acc;
}

inline TensorElement dynkin_phi(const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) {
        auto p = dynkin_phi(w, t.genus(), t.max_degree());
        p *= c;
        r += p;
    }
    return r;
}

// [x, y] = xy - yx
inline TensorElement commutator(const TensorElement& x, const TensorElement& y) { return x * y - y * x; }

// Projection to the symmetric algebra; a commutative monomial is stored as
// its sorted word.
inline TensorElement sym_project(const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) r.add_term(w.sorted(), c);
    return r;
}

// X_0 X_1 X_2 ... X_k -> (X_0 . X_1) X_2 ... X_k
inline TensorElement c12_contract(const TensorElement& t) {
    TensorElement r(t.genus(), t.max_degree());
    for (const auto& [w, c] : t) {
        if (w.size() < 2) throw std::domain_error("c12_contract: term of degree < 2");
        if (const int p = pairing(w[0], w[1])) r.add_term(w.slice(2, w.size()), c * Rational(p));
    }
    return r;
}

// (X_1 ... X_m) ~> (Y_1 ... Y_n) = (X_m . Y_1) X_1 ... X_{m-1} Y_2 ... Y_n
inline TensorElement bullet_leadsto(const TensorElement& u, const TensorElement& v) {
    if (u.genus() != v.genus()) throw std::invalid_argument("bullet_leadsto: genus mismatch");
    TensorElement r(u.genus(), std::min(u.max_degree(), v.max_degree()));
    for (const auto& [x, cx] : u) {
        if (x.empty()) throw std::domain_error("bullet_leadsto: degree-0 term in left argument");
        for (const auto& [y, cy] : v) {
            if (y.empty()) throw std::domain_error("bullet_leadsto: degree-0 term in right argument");
            if (const int p = pairing(x.back(), y.front()))
                r.add_term(x.slice(0, x.size() - 1) + y.slice(1, y.size()), cx * cy * Rational(p));
        }
    }
    return r;
}

// Augmentation: the coefficient of the empty word.
inline Rational augmentation(const TensorElement& t) { return t.coefficient(Word{}); }

inline TensorElement without_constant(const TensorElement& t) {
    TensorElement r = t;
    r.add_term(Word{}, -augmentation(t));
    return r;
}

}  // namespace gtl
