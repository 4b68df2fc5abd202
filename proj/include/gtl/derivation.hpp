#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtl/linalg.hpp"
#include "gtl/tensor.hpp"

namespace gtl {

// A tensor t = sum Y w in H (x) T acts on the tensor algebra as the
// derivation X -> sum (X . Y) w. These raw versions accept any tensor of
// degree >= 1; DerivationElement restricts to cyclic-invariant ones.

inline TensorElement act_on_letter(const TensorElement& t, Letter x, int max_degree) {
    TensorElement r(t.genus(), max_degree);
    for (const auto& [w, c] : t) {
        if (w.empty()) throw std::domain_error("derivation tensor has a degree-0 term");
        if (const int p = pairing(x, w.front())) r.add_term(w.slice(1, w.size()), c * Rational(p));
    }
    return r;
}

inline TensorElement act_on_letter(const TensorElement& t, Letter x) { return act_on_letter(t, x, t.max_degree()); }

// Leibniz extension of act_on_letter.
inline TensorElement act_on_tensor(const TensorElement& t, const TensorElement& u, int max_degree) {
    std::map<Letter, TensorElement> images;
    TensorElement r(u.genus(), max_degree);
    for (const auto& [w, c] : u) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            auto it = images.find(w[i]);
            if (it == images.end()) it = images.emplace(w[i], act_on_letter(t, w[i], max_degree)).first;
            if (it->second.is_zero()) continue;
            const Word prefix = w.slice(0, i);
            const Word suffix = w.slice(i + 1, w.size());
            for (const auto& [v, cv] : it->second) r.add_term(prefix + v + suffix, c * cv);
        }
    }
    return r;
}

inline TensorElement act_on_tensor(const TensorElement& t, const TensorElement& u) {
    return act_on_tensor(t, u, std::min(t.max_degree(), u.max_degree()));
}

// The H (x) T tensor of the commutator [D_a, D_b] = D_a D_b - D_b D_a.
// Bilinear on arbitrary tensors; no invariance check.
inline TensorElement raw_bracket(const TensorElement& a, const TensorElement& b, int max_degree) {
    if (a.genus() != b.genus()) throw std::invalid_argument("raw_bracket: genus mismatch");
    TensorElement r(a.genus(), max_degree);
    if (a.is_zero() || b.is_zero()) return r;
    // D(A_i) = w_{B_i} and D(B_i) = -w_{A_i} recover t = sum_i B_i D(A_i) - A_i D(B_i).
    for (int i = 1; i <= a.genus(); ++i) {
        for (const auto& [x, y, sign] : {std::tuple{A(i), B(i), 1}, std::tuple{B(i), A(i), -1}}) {
            TensorElement image = act_on_tensor(a, act_on_letter(b, x, max_degree), max_degree);
            image -= act_on_tensor(b, act_on_letter(a, x, max_degree), max_degree);
            for (const auto& [w, c] : image) r.add_term(y + w, c * Rational(sign));
        }
    }
    return r;
}

inline TensorElement raw_bracket(const TensorElement& a, const TensorElement& b) {
    return raw_bracket(a, b, std::min(a.max_degree(), b.max_degree()));
}

// Element of the Lie algebra of symplectic derivations, stored as its
// restriction to H: one cyclic-invariant tensor per degree m >= 1.
class DerivationElement {
public:
    explicit DerivationElement(int genus, int max_degree = kDefaultMaxDegree)
        : genus_(genus), max_degree_(max_degree) {
        if (genus < 1) throw std::invalid_argument("genus must be positive");
    }

    // Splits t by degree; every component must be fixed by nu.
    static DerivationElement from_tensor(const TensorElement& t) {
        DerivationElement d(t.genus(), t.max_degree());
        for (int m : t.degrees()) {
            if (m == 0) throw std::invalid_argument("DerivationElement: degree-0 component");
            TensorElement part = t.homogeneous_part(m);
            if (!is_cyclic_invariant(part))
                throw std::invalid_argument("DerivationElement: degree-" + std::to_string(m) +
                                            " component is not cyclic-invariant");
            d.components_.emplace(m, std::move(part));
        }
        return d;
    }

    // N(t).
    static DerivationElement symmetrized(const TensorElement& t) { return from_tensor(symmetrize_N(t)); }

    static DerivationElement symmetrized(const Word& w, int genus, int max_degree = kDefaultMaxDegree) {
        return from_tensor(symmetrize_N(w, genus, max_degree));
    }

    int genus() const { return genus_; }
    int max_degree() const { return max_degree_; }
    const std::map<int, TensorElement>& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

    TensorElement component(int m) const {
        auto it = components_.find(m);
        return it == components_.end() ? TensorElement(genus_, max_degree_) : it->second;
    }

    TensorElement as_tensor() const {
        TensorElement t(genus_, max_degree_);
        for (const auto& [m, c] : components_) t += c;
        return t;
    }

    std::optional<int> homogeneous_degree() const {
        if (components_.size() != 1) return std::nullopt;
        return components_.begin()->first;
    }

    friend DerivationElement operator+(const DerivationElement& a, const DerivationElement& b) {
        return from_tensor(a.as_tensor() + b.as_tensor());
    }
    friend DerivationElement operator-(const DerivationElement& a, const DerivationElement& b) {
        return from_tensor(a.as_tensor() - b.as_tensor());
    }
    friend DerivationElement operator*(const Rational& s, const DerivationElement& a) {
        return from_tensor(s * a.as_tensor());
    }
    friend bool operator==(const DerivationElement& a, const DerivationElement& b) {
        return a.genus_ == b.genus_ && a.components_ == b.components_;
    }

private:
    int genus_;
    int max_degree_;
    std::map<int, TensorElement> components_;
};

inline TensorElement derive_letter(const DerivationElement& d, Letter x) {
    return act_on_letter(d.as_tensor(), x);
}

inline TensorElement derive_tensor(const DerivationElement& d, const TensorElement& t) {
    return act_on_tensor(d.as_tensor(), t);
}

inline bool annihilates_omega(const TensorElement& t) {
    return act_on_tensor(t, omega(t.genus(), t.max_degree())).is_zero();
}

inline bool annihilates_omega(const DerivationElement& d) { return annihilates_omega(d.as_tensor()); }

// Lie bracket by composition of actions, repacked into H (x) T. The result
// must come out cyclic-invariant; anything else is an internal error.
inline DerivationElement bracket(const DerivationElement& d1, const DerivationElement& d2) {
    const TensorElement raw = raw_bracket(d1.as_tensor(), d2.as_tensor(), std::min(d1.max_degree(), d2.max_degree()));
    for (int m : raw.degrees())
        if (!is_cyclic_invariant(raw.homogeneous_part(m)))
            throw std::logic_error("bracket: result is not cyclic-invariant in degree " + std::to_string(m));
    return DerivationElement::from_tensor(raw);
}

// Degree >= 3 and every letter maps to a primitive element.
inline bool is_in_lplus(const DerivationElement& d) {
    for (const auto& [m, c] : d.components())
        if (m < 3) return false;
    for (Letter x : basis_letters(d.genus()))
        if (!is_primitive(derive_letter(d, x))) return false;
    return true;
}

// N([Y, Z] Phi(w)).
inline DerivationElement lplus_generator(Letter y, Letter z, const Word& w, int genus,
                                         int max_degree = kDefaultMaxDegree) {
    if (w.empty()) throw std::invalid_argument("lplus_generator: word must have degree >= 1");
    TensorElement yz(genus, max_degree);
    yz.add_term({y, z}, 1);
    yz.add_term({z, y}, -1);
    return DerivationElement::symmetrized(yz * dynkin_phi(w, genus, max_degree));
}

}  // namespace gtl
